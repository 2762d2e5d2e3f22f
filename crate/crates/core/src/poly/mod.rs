//! Exact sparse multivariate polynomial and rational-function arithmetic:
//! the coefficient substrate for the operator algebra. Everything here is
//! immutable value semantics over arbitrary-precision rationals; operations
//! are pure and safe to share across threads.

pub mod gcd;
pub mod matrix;
pub mod monomial;
pub mod multipoly;
pub mod ratfun;
pub mod var;

pub use gcd::{poly_gcd, poly_gcd_many, poly_lcm};
pub use matrix::{bareiss_det, matrix_rank_over_fraction_field, poly_matrix_rank};
pub use monomial::Monomial;
pub use multipoly::{rat, ratio, reduce_mod_binomial, MultiPoly, Rational};
pub use ratfun::RatFun;
pub use var::{VarClass, VarId};

use std::fmt;

/// Errors from the polynomial layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyError {
    /// The right-hand side of a binomial ideal involves one of its own
    /// variables.
    MalformedIdeal,
    /// Attempt to build a rational function with denominator zero.
    ZeroDenominator,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::MalformedIdeal => {
                write!(f, "binomial ideal right-hand side involves its own variables")
            }
            PolyError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

impl std::error::Error for PolyError {}
