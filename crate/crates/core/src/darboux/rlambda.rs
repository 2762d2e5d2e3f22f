//! The ring of bivariate polynomials q whose partials q_x, q_y and q_xy are
//! all divisible by x*y - lambda, its structure decomposition
//! q = g(x,y) (x y - lambda)^3 + c, and the membership comparison against
//! the kernel-function test of the worked example.

use crate::operator::DiffOp;
use crate::poly::{MultiPoly, VarClass, VarId};

use super::factorization::build_example_k;
use super::kernel::{kernel_membership, SpectralConstraint};
use super::DarbouxError;

/// True iff q_x, q_y and q_xy all have the factor vx*vy - lambda.
/// `q` must involve only `vx`, `vy` and parameters; `lambda` involves
/// neither `vx` nor `vy`.
pub fn rlambda_membership(q: &MultiPoly, vx: VarId, vy: VarId, lambda: &MultiPoly) -> bool {
    debug_assert!(!lambda.involves_var(vx) && !lambda.involves_var(vy));
    let divisor = &(&MultiPoly::var(vx) * &MultiPoly::var(vy)) - lambda;
    let qx = q.deriv(vx);
    let qy = q.deriv(vy);
    let qxy = qx.deriv(vy);
    divisor.divides(&qx) && divisor.divides(&qy) && divisor.divides(&qxy)
}

/// Decompose a member as q = g * (vx vy - lambda)^3 + c with c free of both
/// variables. Requires lambda nonzero; membership at lambda = 0 does not
/// imply the decomposition exists (x^2 y^2 is the standard counterexample).
pub fn rlambda_decompose(
    q: &MultiPoly,
    vx: VarId,
    vy: VarId,
    lambda: &MultiPoly,
) -> Result<(MultiPoly, MultiPoly), DarbouxError> {
    if !rlambda_membership(q, vx, vy, lambda) {
        return Err(DarbouxError::NotInRing);
    }
    if lambda.is_zero() {
        return Err(DarbouxError::DegenerateLambda);
    }
    let divisor = &(&MultiPoly::var(vx) * &MultiPoly::var(vy)) - lambda;
    let cube = divisor.pow(3);
    let (g, c) = q.div_rem(&cube);
    // For nonzero lambda the reduced remainder of a member is constant in
    // the two designated variables.
    assert!(
        !c.involves_var(vx) && !c.involves_var(vy),
        "structure decomposition produced a non-constant remainder"
    );
    // Verify the identity by expansion.
    assert_eq!(&(&g * &cube) + &c, *q, "decomposition must reassemble");
    Ok((g, c))
}

/// Compare the two membership tests for a constant-coefficient operator:
/// the kernel-function test against the worked example's operator, and the
/// divisibility test on the symbol. The result is the agreement of the two
/// booleans; it holds identically.
pub fn isom_check(q: &DiffOp, lambda: &MultiPoly) -> Result<bool, DarbouxError> {
    if !q.is_constant_coefficient() {
        return Err(DarbouxError::NonConstantQ);
    }
    let ex = build_example_k();
    let constraint = SpectralConstraint::new(1, 2, lambda.clone());
    let kernel_side = kernel_membership(&ex.k, q, &constraint)?;
    let symbol = q.symbol().map_err(|_| DarbouxError::NonConstantQ)?;
    debug_assert!(!symbol.involves_class(VarClass::X));
    let ring_side = rlambda_membership(&symbol, VarId::z(1), VarId::z(2), lambda);
    Ok(kernel_side == ring_side)
}
