//! Seeded random generators shared by the property tests.

use rand::Rng;

use crate::operator::{DMono, DiffOp};
use crate::poly::{rat, Monomial, MultiPoly, RatFun, VarId};

pub(crate) fn random_poly<R: Rng>(
    rng: &mut R,
    vars: &[VarId],
    max_deg: u32,
    max_terms: usize,
) -> MultiPoly {
    let terms = rng.random_range(1..=max_terms);
    let mut p = MultiPoly::zero();
    for _ in 0..terms {
        let mono = Monomial::from_pairs(
            vars.iter()
                .map(|&v| (v, rng.random_range(0..=max_deg)))
                .collect::<Vec<_>>(),
        );
        let c = rng.random_range(-4i64..=4);
        p.add_term(mono, rat(c));
    }
    p
}

pub(crate) fn random_ratfun<R: Rng>(rng: &mut R, dim: usize, allow_denominator: bool) -> RatFun {
    let xvars: Vec<VarId> = (1..=dim as u32).map(VarId::x).collect();
    let num = random_poly(rng, &xvars, 2, 3);
    if allow_denominator && rng.random_bool(0.3) {
        let i = rng.random_range(1..=dim as u32);
        let den = MultiPoly::var(VarId::x(i));
        RatFun::new(num, den).unwrap_or_else(|_| RatFun::zero())
    } else {
        RatFun::from(num)
    }
}

pub(crate) fn random_diffop<R: Rng>(
    rng: &mut R,
    dim: usize,
    max_order: u32,
    max_terms: usize,
    allow_denominator: bool,
) -> DiffOp {
    let mut op = DiffOp::zero(dim);
    let terms = rng.random_range(1..=max_terms);
    for _ in 0..terms {
        let mut idx = vec![0u32; dim];
        let mut left = max_order;
        for e in idx.iter_mut() {
            *e = rng.random_range(0..=left);
            left -= *e;
        }
        op.add_term(DMono(idx), random_ratfun(rng, dim, allow_denominator));
    }
    op
}

/// Random constant-coefficient operator of order at most `max_order` with
/// small integer (plus optional parameter) coefficients.
pub(crate) fn random_constant_op<R: Rng>(rng: &mut R, dim: usize, max_order: u32) -> DiffOp {
    let mut op = DiffOp::zero(dim);
    let terms = rng.random_range(1..=4);
    for _ in 0..terms {
        let mut idx = vec![0u32; dim];
        let mut left = max_order;
        for e in idx.iter_mut() {
            *e = rng.random_range(0..=left);
            left -= *e;
        }
        let mut coeff = MultiPoly::from_int(rng.random_range(-3i64..=3));
        if rng.random_bool(0.3) {
            coeff = &coeff * &MultiPoly::var(VarId::lambda());
        }
        op.add_term(DMono(idx), RatFun::from(coeff));
    }
    op
}
