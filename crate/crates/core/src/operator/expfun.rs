//! Functions of the form r(x; z) * exp(x1 z1 + ... + xn zn).
//!
//! The exponential factor is implicit; only the rational-function prefactor
//! is stored. Derivatives in x multiply down z's, derivatives in z multiply
//! down x's, which is all the operator algebra ever needs.

use std::collections::HashMap;
use std::fmt;

use crate::poly::{RatFun, VarId};

use super::diffop::DiffOp;
use super::OpError;

/// `coeff * exp(x . z)` in `dim` variables. Equality is coefficient equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpFunction {
    dim: usize,
    coeff: RatFun,
}

impl ExpFunction {
    pub fn new(dim: usize, coeff: RatFun) -> Self {
        ExpFunction { dim, coeff }
    }

    /// The bare plane wave exp(x . z).
    pub fn plane_wave(dim: usize) -> Self {
        ExpFunction {
            dim,
            coeff: RatFun::one(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self) -> &RatFun {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, f: &RatFun) -> ExpFunction {
        ExpFunction {
            dim: self.dim,
            coeff: &self.coeff * f,
        }
    }

    /// Derivative in the spectral variable z_index: r -> dr/dz_i + x_i r.
    pub fn z_derivative(&self, index: usize) -> Result<ExpFunction, OpError> {
        if index == 0 || index > self.dim {
            return Err(OpError::IndexOutOfRange);
        }
        let zvar = VarId::z(index as u32);
        let xfac = RatFun::var(VarId::x(index as u32));
        Ok(ExpFunction {
            dim: self.dim,
            coeff: &self.coeff.deriv(zvar) + &(&xfac * &self.coeff),
        })
    }
}

impl fmt::Display for ExpFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) exp(", self.coeff)?;
        for i in 1..=self.dim {
            if i > 1 {
                write!(f, " + ")?;
            }
            write!(f, "x{i}*z{i}")?;
        }
        write!(f, ")")
    }
}

/// Single x-derivative action on the prefactor: r -> dr/dx_i + z_i r.
fn x_action(dim: usize, coeff: &RatFun, index: usize) -> RatFun {
    debug_assert!(index >= 1 && index <= dim);
    let xvar = VarId::x(index as u32);
    let zfac = RatFun::var(VarId::z(index as u32));
    &coeff.deriv(xvar) + &(&zfac * coeff)
}

impl DiffOp {
    /// Apply the operator to an exponential function.
    pub fn apply(&self, f: &ExpFunction) -> Result<ExpFunction, OpError> {
        if self.dim() != f.dim() {
            return Err(OpError::DimensionMismatch);
        }
        let dim = self.dim();
        let mut memo: HashMap<Vec<u32>, RatFun> = HashMap::new();
        memo.insert(vec![0; dim], f.coeff().clone());
        fn get(dim: usize, memo: &mut HashMap<Vec<u32>, RatFun>, alpha: &[u32]) -> RatFun {
            if let Some(hit) = memo.get(alpha) {
                return hit.clone();
            }
            let i = alpha
                .iter()
                .position(|&e| e > 0)
                .expect("nonzero multi-index");
            let mut prev = alpha.to_vec();
            prev[i] -= 1;
            let below = get(dim, memo, &prev);
            let here = x_action(dim, &below, i + 1);
            memo.insert(alpha.to_vec(), here.clone());
            here
        }
        let mut total = RatFun::zero();
        for (alpha, c) in self.terms() {
            let part = get(dim, &mut memo, &alpha.0);
            total = &total + &(c * &part);
        }
        Ok(ExpFunction::new(dim, total))
    }
}
