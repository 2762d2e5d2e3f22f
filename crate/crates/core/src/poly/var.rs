//! Variable identifiers.
//!
//! Every indeterminate in the system carries a class tag: `Param` for scalar
//! parameters (lambda, gamma, ...), `X` for the base variables x1..xn, `Z`
//! for spectral variables z1..zn, and `Mu` for the shift variables mu1..mu(n+1).
//! The total order Param < X < Z < Mu, then by index, fixes the canonical
//! monomial order everywhere.

use std::fmt;

/// Class of an indeterminate. The declaration order gives the total order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarClass {
    Param,
    X,
    Z,
    Mu,
}

impl VarClass {
    pub fn as_str(self) -> &'static str {
        match self {
            VarClass::Param => "param",
            VarClass::X => "x",
            VarClass::Z => "z",
            VarClass::Mu => "mu",
        }
    }
}

/// A single indeterminate, identified by class and 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub class: VarClass,
    pub index: u32,
}

impl VarId {
    pub fn new(class: VarClass, index: u32) -> Self {
        debug_assert!(index >= 1, "variable indices are 1-based");
        VarId { class, index }
    }

    pub fn x(index: u32) -> Self {
        VarId::new(VarClass::X, index)
    }

    pub fn z(index: u32) -> Self {
        VarId::new(VarClass::Z, index)
    }

    pub fn mu(index: u32) -> Self {
        VarId::new(VarClass::Mu, index)
    }

    pub fn param(index: u32) -> Self {
        VarId::new(VarClass::Param, index)
    }

    /// The parameter named `lambda` in the expression language.
    pub fn lambda() -> Self {
        VarId::param(1)
    }

    /// The parameter named `gamma` in the expression language.
    pub fn gamma() -> Self {
        VarId::param(2)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.class, self.index) {
            (VarClass::Param, 1) => write!(f, "lambda"),
            (VarClass::Param, 2) => write!(f, "gamma"),
            (VarClass::Param, k) => write!(f, "c{}", k),
            (VarClass::X, k) => write!(f, "x{}", k),
            (VarClass::Z, k) => write!(f, "z{}", k),
            (VarClass::Mu, k) => write!(f, "mu{}", k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_order_is_param_x_z_mu() {
        assert!(VarClass::Param < VarClass::X);
        assert!(VarClass::X < VarClass::Z);
        assert!(VarClass::Z < VarClass::Mu);
    }

    #[test]
    fn order_within_class_is_by_index() {
        assert!(VarId::x(1) < VarId::x(2));
        assert!(VarId::param(9) < VarId::x(1));
        assert!(VarId::z(3) < VarId::mu(1));
    }

    #[test]
    fn display_names() {
        assert_eq!(VarId::lambda().to_string(), "lambda");
        assert_eq!(VarId::gamma().to_string(), "gamma");
        assert_eq!(VarId::x(2).to_string(), "x2");
        assert_eq!(VarId::z(1).to_string(), "z1");
        assert_eq!(VarId::mu(3).to_string(), "mu3");
    }
}
