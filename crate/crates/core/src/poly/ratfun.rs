//! Rational functions: normalized quotients of two [`MultiPoly`] values.
//!
//! Invariants maintained by every constructor and operation: the denominator
//! is nonzero, numerator and denominator are coprime, and the denominator is
//! primitive with positive leading coefficient. This makes equality of
//! values equal structural equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;

use super::gcd::poly_gcd;
use super::multipoly::{MultiPoly, Rational};
use super::var::{VarClass, VarId};
use super::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFun {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: MultiPoly, den: MultiPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFun {
                num,
                den: MultiPoly::one(),
            };
        }
        if den.is_one() {
            return RatFun { num, den };
        }
        let (mut num, mut den) = (num, den);
        let g = poly_gcd(&num, &den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        // Push the denominator's rational content (and sign) into the numerator.
        let c = den.signed_content();
        if !c.is_one() {
            den = den.scale(&c.recip());
            num = num.scale(&c.recip());
        }
        RatFun { num, den }
    }

    pub fn zero() -> Self {
        RatFun {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: MultiPoly::one(),
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFun {
            num: MultiPoly::constant(c),
            den: MultiPoly::one(),
        }
    }

    pub fn var(v: VarId) -> Self {
        RatFun {
            num: MultiPoly::var(v),
            den: MultiPoly::one(),
        }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn involves_class(&self, class: VarClass) -> bool {
        self.num.involves_class(class) || self.den.involves_class(class)
    }

    pub fn involves_var(&self, v: VarId) -> bool {
        self.num.involves_var(v) || self.den.involves_var(v)
    }

    pub fn recip(&self) -> Result<RatFun, PolyError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Partial derivative via the quotient rule.
    pub fn deriv(&self, v: VarId) -> RatFun {
        if self.den.is_one() {
            return RatFun {
                num: self.num.deriv(v),
                den: MultiPoly::one(),
            };
        }
        let dn = self.num.deriv(v);
        let dd = self.den.deriv(v);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        let den = &self.den * &self.den;
        RatFun::reduced(num, den)
    }

    /// Substitute a polynomial for a variable in both numerator and denominator.
    /// Fails with `ZeroDenominator` when the substituted denominator vanishes.
    pub fn subst(&self, v: VarId, replacement: &MultiPoly) -> Result<RatFun, PolyError> {
        RatFun::new(self.num.subst(v, replacement), self.den.subst(v, replacement))
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        use num_traits::Zero;
        if c.is_zero() || self.num.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// True when the leading coefficient of the numerator is negative; used
    /// by printers to pull a sign out front.
    pub fn has_negative_lead(&self) -> bool {
        use num_traits::Signed;
        self.num.leading().is_some_and(|(_, c)| c.is_negative())
    }
}

impl From<MultiPoly> for RatFun {
    fn from(p: MultiPoly) -> Self {
        RatFun {
            num: p,
            den: MultiPoly::one(),
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun {
                num: &self.num + &rhs.num,
                den: MultiPoly::one(),
            };
        }
        if self.den == rhs.den {
            return RatFun::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::reduced(num, den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun {
                num: &self.num * &rhs.num,
                den: MultiPoly::one(),
            };
        }
        // Cross-reduce before multiplying to keep intermediates small.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFun::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division of rational functions by zero");
        self * &rhs.recip().unwrap()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::rat;

    fn x(i: u32) -> MultiPoly {
        MultiPoly::var(VarId::x(i))
    }

    #[test]
    fn construction_normalizes() {
        // (2x1^2 - 2)/(4x1 - 4) = (x1 + 1)/2.
        let num = (&(&x(1) * &x(1)) - &MultiPoly::one()).scale(&rat(2));
        let den = (&x(1) - &MultiPoly::one()).scale(&rat(4));
        let r = RatFun::new(num, den).unwrap();
        assert_eq!(r.num().to_string(), "1/2*x1 + 1/2");
        assert!(r.den().is_one());
    }

    #[test]
    fn equal_cross_representations_have_identical_forms() {
        let a = RatFun::new(x(1), x(2)).unwrap();
        let b = RatFun::new(&x(1) * &x(1), &x(2) * &x(1)).unwrap();
        assert_eq!(a, b);
        let c = RatFun::new((&x(1)).scale(&rat(-3)), (&x(2)).scale(&rat(-3))).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFun::new(MultiPoly::one(), MultiPoly::zero()),
            Err(PolyError::ZeroDenominator)
        );
    }

    #[test]
    fn quotient_rule() {
        // d/dx1 (1/x1) = -1/x1^2.
        let r = RatFun::new(MultiPoly::one(), x(1)).unwrap();
        let d = r.deriv(VarId::x(1));
        let expected = RatFun::new(MultiPoly::from_int(-1), &x(1) * &x(1)).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn field_arithmetic() {
        let a = RatFun::new(MultiPoly::one(), x(1)).unwrap();
        let b = RatFun::new(MultiPoly::one(), x(2)).unwrap();
        let sum = &a + &b;
        let expected = RatFun::new(&x(1) + &x(2), &x(1) * &x(2)).unwrap();
        assert_eq!(sum, expected);
        let prod = &a * &b;
        assert_eq!(prod, RatFun::new(MultiPoly::one(), &x(1) * &x(2)).unwrap());
        assert_eq!(&prod / &prod, RatFun::one());
    }
}
