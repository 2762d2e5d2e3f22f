//! Solving `L . k = target` for an unknown differential operator `L` by
//! equating coefficients of a general ansatz, and the conjugation
//! `k . p . k^{-1}` built on top of it.

use crate::poly::matrix::{solve_linear_system, LinearRow};
use crate::poly::RatFun;

use super::diffop::{DMono, DiffOp};
use super::OpError;

/// Find the operator `L` of order at most `ansatz_order` with
/// `L . k = target`, if one exists. Unknown coefficients are rational
/// functions indexed by the derivative monomials of total degree up to
/// `ansatz_order`; constraints are processed from the highest graded-lex
/// derivative monomial of `L . k - target` downward. Returns `Ok(None)`
/// when the linear system is inconsistent (no differential solution).
pub fn solve_left_factor(
    target: &DiffOp,
    k: &DiffOp,
    ansatz_order: usize,
) -> Result<Option<DiffOp>, OpError> {
    if k.is_zero() {
        return Err(OpError::ZeroDivisor);
    }
    if target.dim() != k.dim() {
        return Err(OpError::DimensionMismatch);
    }
    let dim = k.dim();
    // Unknowns in descending graded-lex order, mirroring the elimination
    // strategy of solving for the highest derivative coefficients first.
    let unknowns = DMono::all_up_to(dim, ansatz_order as i64);
    // D^alpha . k for each ansatz monomial.
    let shifted: Vec<DiffOp> = unknowns
        .iter()
        .map(|alpha| {
            DiffOp::monomial(dim, alpha.clone(), RatFun::one())
                .compose(k)
                .expect("dims match")
        })
        .collect();
    // Every constraint monomial that can appear.
    let mut betas: Vec<DMono> = Vec::new();
    for op in shifted.iter().chain(std::iter::once(target)) {
        for (beta, _) in op.terms() {
            if !betas.contains(beta) {
                betas.push(beta.clone());
            }
        }
    }
    betas.sort_by(|a, b| b.cmp(a));
    let rows: Vec<LinearRow> = betas
        .iter()
        .map(|beta| LinearRow {
            coeffs: shifted.iter().map(|op| op.coeff(beta)).collect(),
            rhs: target.coeff(beta),
        })
        .collect();
    let solution = match solve_linear_system(rows, unknowns.len()) {
        Some(s) => s,
        None => return Ok(None),
    };
    let l = DiffOp::from_terms(dim, unknowns.into_iter().zip(solution));
    debug_assert_eq!(l.compose(k).expect("dims match"), *target);
    Ok(Some(l))
}

/// The conjugate `k . p . k^{-1}` when it is a differential operator of
/// order at most `ansatz_order`: the operator `L` with `L . k = k . p`.
/// Returns `Ok(None)` when no such differential operator exists.
pub fn conjugate_through(
    p: &DiffOp,
    k: &DiffOp,
    ansatz_order: usize,
) -> Result<Option<DiffOp>, OpError> {
    if k.is_zero() {
        return Err(OpError::ZeroDivisor);
    }
    let target = k.compose(p)?;
    solve_left_factor(&target, k, ansatz_order)
}
