//! Factorization machinery for constant-coefficient operators and the
//! commutative rings it generates: factorization witnesses, normalized
//! common eigenfunctions, kernel-function membership along a spectral
//! constraint, and the ring of bivariate polynomials whose first partials
//! all vanish on the hyperbola x*y = lambda.

pub mod eigenfunction;
pub mod factorization;
pub mod kernel;
pub mod rlambda;

pub use eigenfunction::{normalized_eigenfunction, EigenfunctionData};
pub use factorization::{build_example_k, verify_factorization, DarbouxExample, FactorizationWitness};
pub use kernel::{kernel_membership, SpectralConstraint};
pub use rlambda::{isom_check, rlambda_decompose, rlambda_membership};

use std::fmt;

/// Errors from the factorization-ring layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DarbouxError {
    /// An operation that needs a nonzero operator received zero.
    ZeroOperator,
    /// Kernel membership requires a constant-coefficient operator.
    NonConstantQ,
    /// Decomposition requested for a polynomial outside the ring.
    NotInRing,
    /// The structure decomposition requires lambda to be nonzero.
    DegenerateLambda,
}

impl fmt::Display for DarbouxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DarbouxError::ZeroOperator => write!(f, "operator must be nonzero"),
            DarbouxError::NonConstantQ => {
                write!(f, "membership test requires a constant-coefficient operator")
            }
            DarbouxError::NotInRing => write!(f, "polynomial is not a member of the ring"),
            DarbouxError::DegenerateLambda => {
                write!(f, "decomposition requires a nonzero lambda")
            }
        }
    }
}

impl std::error::Error for DarbouxError {}
