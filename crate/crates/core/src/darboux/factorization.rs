//! Factorizations p = L . K of constant-coefficient operators, and the
//! worked two-dimensional example used throughout: the conjugated bilinear
//! operator K = x1 x2 (D1 D2 - lambda) . 1/(x1 x2) and its left cofactor.

use crate::operator::{DMono, DiffOp};
use crate::poly::{MultiPoly, RatFun, VarId};

/// A claimed factorization `p = left . right` with `p` constant coefficient.
#[derive(Debug, Clone)]
pub struct FactorizationWitness {
    pub p: DiffOp,
    pub left: DiffOp,
    pub right: DiffOp,
}

/// Check a factorization witness: the composition must reproduce `p`
/// exactly and `p` must have constant coefficients.
pub fn verify_factorization(w: &FactorizationWitness) -> bool {
    if !w.p.is_constant_coefficient() {
        return false;
    }
    match w.left.compose(&w.right) {
        Ok(prod) => prod == w.p,
        Err(_) => false,
    }
}

/// The worked example in two dimensions; `verify_factorization` holds for
/// `(p, l, k)` with `p = (D1 D2 - lambda)^3`.
#[derive(Debug, Clone)]
pub struct DarbouxExample {
    pub k: DiffOp,
    pub l: DiffOp,
    pub p: DiffOp,
}

/// Build the example operators with `lambda` a symbolic parameter.
///
/// `k` is constructed by the defining conjugation x1 x2 (D1 D2 - lambda)
/// . 1/(x1 x2); `l` is the explicit order-four left cofactor; `p` is the
/// cube (D1 D2 - lambda)^3.
pub fn build_example_k() -> DarbouxExample {
    let lam = RatFun::var(VarId::lambda());
    let x1x2 = MultiPoly::from_term(
        crate::poly::Monomial::from_pairs([(VarId::x(1), 1), (VarId::x(2), 1)]),
        crate::poly::rat(1),
    );
    let mult = DiffOp::scalar(2, RatFun::from(x1x2.clone()));
    let inv = DiffOp::scalar(2, RatFun::new(MultiPoly::one(), x1x2.clone()).unwrap());
    let dd_minus_lambda = DiffOp::partial(2, 1)
        .compose(&DiffOp::partial(2, 2))
        .unwrap()
        .sub(&DiffOp::scalar(2, lam.clone()))
        .unwrap();
    let k = mult
        .compose(&dd_minus_lambda.compose(&inv).unwrap())
        .unwrap();
    let p = dd_minus_lambda.pow(3).unwrap();

    // The left cofactor, written out coefficient by coefficient.
    let x1 = MultiPoly::var(VarId::x(1));
    let x2 = MultiPoly::var(VarId::x(2));
    let lampoly = MultiPoly::var(VarId::lambda());
    let one = MultiPoly::one();
    let rf = |num: MultiPoly, den: MultiPoly| RatFun::new(num, den).unwrap();
    let l = DiffOp::from_terms(
        2,
        vec![
            (DMono(vec![2, 2]), RatFun::one()),
            (DMono(vec![1, 2]), rf(one.clone(), x1.clone())),
            (DMono(vec![0, 2]), rf(-&one, x1.pow(2))),
            (DMono(vec![2, 1]), rf(one.clone(), x2.clone())),
            (
                DMono(vec![1, 1]),
                rf(
                    &one - &(&lampoly * &x1x2).scale(&crate::poly::rat(2)),
                    x1x2.clone(),
                ),
            ),
            (
                DMono(vec![0, 1]),
                rf(&(-&one) - &(&lampoly * &x1x2), &x1.pow(2) * &x2),
            ),
            (DMono(vec![2, 0]), rf(-&one, x2.pow(2))),
            (
                DMono(vec![1, 0]),
                rf(&(-&one) - &(&lampoly * &x1x2), &x1 * &x2.pow(2)),
            ),
            (
                DMono(vec![0, 0]),
                &(&RatFun::from(lampoly.pow(2)) + &rf(one.clone(), x1x2.pow(2)))
                    + &rf(lampoly.clone(), x1x2.clone()),
            ),
        ],
    );
    DarbouxExample { k, l, p }
}
