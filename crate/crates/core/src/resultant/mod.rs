//! The shifted differential resultant of n+1 operators in n variables:
//! the row matrix whose rows express omega . (L_i - mu_i) over the monomial
//! basis, its maximal minors (exhaustive in diagram order, or sampled from a
//! seeded generator), the gcd of the minors with rank-based zero detection,
//! the decomposition of any minor over the generating operators, and common
//! symbol zeros at infinity for constant-coefficient families.

pub mod basis;
pub mod dform;
pub mod matrix;
pub mod minors;
pub mod outcome;
pub mod symbols;

pub use basis::{coeff_vector, omega_basis, MonomialBasis};
pub use dform::dform_decomposition;
pub use matrix::{build_resultant_matrix, ResultantMatrix};
pub use minors::{
    minor_value, partial_resultants, sampled_selections, DiagramSelections, MinorMode,
    PartialResultant,
};
pub use outcome::{
    differential_resultant, differential_resultant_of, resultant_rank, split_shift_content,
    RankReport, ResultantKind, ResultantMode, ResultantOutcome,
};
pub use symbols::homogenized_symbol_zero_check;

use crate::operator::{eval_poly_at_operators, DiffOp, OpError};
use crate::poly::MultiPoly;

use std::fmt;

/// True iff substituting the operators for the shift variables in `p`
/// yields the zero operator. The operators must mutually commute.
pub fn verify_annihilation(p: &MultiPoly, ops: &[DiffOp]) -> Result<bool, OpError> {
    Ok(eval_poly_at_operators(p, ops)?.is_zero())
}

/// Errors from the resultant layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultantError {
    DimensionMismatch,
    /// The sum of the orders is less than the dimension.
    NegativeN,
    /// Every operator in the family must be nonzero.
    ZeroOperator,
    /// An operator's order exceeds the requested coefficient-vector degree.
    OrderTooHigh,
    /// Minor enumeration requires at least as many rows as columns.
    TooWide,
    /// The selected maximal minor has determinant zero.
    SingularMinor,
    /// Symbol analysis requires constant-coefficient operators.
    NonConstantInput,
}

impl fmt::Display for ResultantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultantError::DimensionMismatch => {
                write!(f, "expected n+1 operators of matching dimension n")
            }
            ResultantError::NegativeN => {
                write!(f, "total order is too small for the dimension")
            }
            ResultantError::ZeroOperator => write!(f, "operators must be nonzero"),
            ResultantError::OrderTooHigh => {
                write!(f, "operator order exceeds the basis degree")
            }
            ResultantError::TooWide => {
                write!(f, "matrix has fewer rows than columns")
            }
            ResultantError::SingularMinor => write!(f, "selected minor is singular"),
            ResultantError::NonConstantInput => {
                write!(f, "operation requires constant-coefficient operators")
            }
        }
    }
}

impl std::error::Error for ResultantError {}

/// Shared operator families for the test suites.
#[cfg(test)]
pub(crate) mod fixtures {
    use crate::operator::DiffOp;
    use crate::poly::{RatFun, VarId};

    pub(crate) fn d(dim: usize, i: usize) -> DiffOp {
        DiffOp::partial(dim, i)
    }

    pub(crate) fn xop(dim: usize, i: u32) -> DiffOp {
        DiffOp::scalar(dim, RatFun::var(VarId::x(i)))
    }

    /// The commuting triple with a nonzero resultant: L1 = D1^2 - D2^2,
    /// L2 = x2 D1 + x1 D2, L3 = L1 . L2 - gamma L1.
    pub(crate) fn positive_triple() -> Vec<DiffOp> {
        let l1 = d(2, 1).pow(2).unwrap().sub(&d(2, 2).pow(2).unwrap()).unwrap();
        let l2 = xop(2, 2)
            .compose(&d(2, 1))
            .unwrap()
            .add(&xop(2, 1).compose(&d(2, 2)).unwrap())
            .unwrap();
        let gamma = DiffOp::scalar(2, RatFun::var(VarId::gamma()));
        let l3 = l1
            .compose(&l2)
            .unwrap()
            .sub(&gamma.compose(&l1).unwrap())
            .unwrap();
        vec![l1, l2, l3]
    }

    /// The constant-coefficient triple whose resultant vanishes identically:
    /// L1 = D1^2 - D2^2 - 1, L2 = D1 . L1, L3 = D2 . L1.
    pub(crate) fn vanishing_triple() -> Vec<DiffOp> {
        let l1 = d(2, 1)
            .pow(2)
            .unwrap()
            .sub(&d(2, 2).pow(2).unwrap())
            .unwrap()
            .sub(&DiffOp::one(2))
            .unwrap();
        let l2 = d(2, 1).compose(&l1).unwrap();
        let l3 = d(2, 2).compose(&l1).unwrap();
        vec![l1, l2, l3]
    }
}
