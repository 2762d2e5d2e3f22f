//! Ordered bases of monic derivative monomials and coefficient vectors.

use crate::operator::{DMono, DiffOp};
use crate::poly::RatFun;

use super::ResultantError;

/// The ordered list of all monic derivative monomials of total degree at
/// most `degree` in `dim` variables, in descending graded-lex order. Length
/// is C(dim + degree, dim); negative degree gives the empty basis.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub dim: usize,
    pub degree: i64,
    pub entries: Vec<DMono>,
}

pub fn omega_basis(dim: usize, degree: i64) -> MonomialBasis {
    MonomialBasis {
        dim,
        degree,
        entries: DMono::all_up_to(dim, degree),
    }
}

impl MonomialBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, d: &DMono) -> Option<usize> {
        // Entries are sorted descending; binary search with reversed order.
        self.entries
            .binary_search_by(|probe| d.cmp(probe))
            .ok()
    }
}

/// The coefficient vector of `op` over `omega_basis(op.dim(), degree)`:
/// dotting it with the basis reconstructs the operator exactly.
pub fn coeff_vector(op: &DiffOp, degree: i64) -> Result<Vec<RatFun>, ResultantError> {
    if let Some(order) = op.order() {
        if (order as i64) > degree {
            return Err(ResultantError::OrderTooHigh);
        }
    }
    let basis = omega_basis(op.dim(), degree);
    Ok(basis.entries.iter().map(|d| op.coeff(d)).collect())
}
