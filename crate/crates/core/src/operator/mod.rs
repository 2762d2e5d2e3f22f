//! The noncommutative algebra of rational-coefficient partial differential
//! operators: composition, commutators, the action on exponential functions,
//! conjugation, and evaluation of polynomials at operator arguments.

pub mod conjugate;
pub mod diffop;
pub mod expfun;

pub use conjugate::{conjugate_through, solve_left_factor};
pub use diffop::{eval_poly_at_operators, DMono, DiffOp};
pub use expfun::ExpFunction;

use std::fmt;

/// Errors from the operator layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpError {
    DimensionMismatch,
    IndexOutOfRange,
    NonCommutingOperators,
    ZeroDivisor,
    NonConstantCoefficient,
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpError::DimensionMismatch => write!(f, "operator dimensions do not match"),
            OpError::IndexOutOfRange => write!(f, "variable index out of range"),
            OpError::NonCommutingOperators => {
                write!(f, "operators do not mutually commute")
            }
            OpError::ZeroDivisor => write!(f, "zero operator used as a divisor"),
            OpError::NonConstantCoefficient => {
                write!(f, "operation requires a constant-coefficient operator")
            }
        }
    }
}

impl std::error::Error for OpError {}
