//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under the graded
//! lexicographic order, so the last entry is always the leading term and
//! iteration in reverse gives the canonical descending-order form. Zero
//! coefficients are never stored; the zero polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::var::{VarClass, VarId};
use super::PolyError;

/// Exact rational scalar used for every coefficient in the system.
pub type Rational = BigRational;

/// Shorthand for a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational n/d.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        MultiPoly::constant(rat(n))
    }

    pub fn var(v: VarId) -> Self {
        MultiPoly::from_term(Monomial::var(v), Rational::one())
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        MultiPoly::from_term(Monomial::var_pow(v, e), Rational::one())
    }

    pub fn from_term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(list: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in list {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    /// True iff the polynomial is a rational constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Monomial::one()))
    }

    /// The constant value when `is_constant()`, otherwise `None`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::one()).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (canonical presentation order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading (greatest) term under graded lex, if nonzero.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<VarId> {
        let mut out: Vec<VarId> = Vec::new();
        for m in self.terms.keys() {
            for v in m.vars() {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort();
        out
    }

    pub fn involves_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.degree_in(v) > 0)
    }

    pub fn involves_class(&self, class: VarClass) -> bool {
        self.terms.keys().any(|m| m.involves_class(class))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn deriv(&self, v: VarId) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.degree_in(v);
            if e == 0 {
                continue;
            }
            let (rest, _) = m.without_var(v);
            let reduced = rest.mul(&Monomial::var_pow(v, e - 1));
            out.add_term(reduced, c * rat(e as i64));
        }
        out
    }

    /// Substitute `replacement` for the variable `v`.
    pub fn subst(&self, v: VarId, replacement: &MultiPoly) -> MultiPoly {
        let max = self.degree_in(v);
        if max == 0 {
            return self.clone();
        }
        let mut powers: Vec<MultiPoly> = Vec::with_capacity(max as usize + 1);
        powers.push(MultiPoly::one());
        for _ in 0..max {
            powers.push(powers.last().unwrap() * replacement);
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.without_var(v);
            let base = MultiPoly::from_term(rest, c.clone());
            out = &out + &(&base * &powers[e as usize]);
        }
        out
    }

    /// View as a univariate polynomial in `v`: exponent -> coefficient.
    pub fn coeffs_by(&self, v: VarId) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.without_var(v);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Leading coefficient with respect to `v` (coefficient of v^deg).
    pub fn lead_coeff_in(&self, v: VarId) -> MultiPoly {
        let d = self.degree_in(v);
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.degree_in(v) == d {
                let (rest, _) = m.without_var(v);
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// The sum of terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Signed rational content: the rational c with the same sign as the
    /// leading coefficient such that self/c has coprime integer coefficients.
    /// Zero polynomial gives 0.
    pub fn signed_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Primitive form with positive leading coefficient, i.e. `self` divided
    /// by its signed content. Zero stays zero.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let c = self.signed_content();
        self.scale(&c.recip())
    }

    /// True when all coefficients are integers with gcd 1 and the leading
    /// coefficient is positive.
    pub fn is_normalized(&self) -> bool {
        !self.is_zero() && self.signed_content().is_one()
    }

    /// Single-divisor division with remainder under graded lex: returns
    /// `(q, r)` with `self = q*d + r` and no monomial of `r` divisible by
    /// the leading monomial of `d`.
    pub fn div_rem(&self, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        let mut work = self.clone();
        let mut q = MultiPoly::zero();
        let mut r = MultiPoly::zero();
        while let Some((wm, wc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            match wm.try_div(&dm) {
                Some(qm) => {
                    let qc = &wc / &dc;
                    let t = MultiPoly::from_term(qm, qc);
                    work = &work - &(&t * d);
                    q = &q + &t;
                }
                None => {
                    work.terms.remove(&wm);
                    r.add_term(wm, wc);
                }
            }
        }
        (q, r)
    }

    /// Exact division: `Some(q)` with `self = q*d`, else `None`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        // Fast path: constant divisor.
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        let mut work = self.clone();
        let mut q = MultiPoly::zero();
        while let Some((wm, wc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = wm.try_div(&dm)?;
            let qc = &wc / &dc;
            let t = MultiPoly::from_term(qm, qc);
            work = &work - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.exact_div(self).is_some()
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

/// Canonical normal form of `p` modulo the binomial ideal (vi*vj - c):
/// every monomial containing both `vi` and `vj` is rewritten via
/// vi*vj -> c until one of the two exponents is zero. The result is zero
/// iff (vi*vj - c) divides `p`. `c` must involve neither `vi` nor `vj`.
pub fn reduce_mod_binomial(
    p: &MultiPoly,
    vi: VarId,
    vj: VarId,
    c: &MultiPoly,
) -> Result<MultiPoly, PolyError> {
    if vi == vj || c.involves_var(vi) || c.involves_var(vj) {
        return Err(PolyError::MalformedIdeal);
    }
    let mut powers: Vec<MultiPoly> = vec![MultiPoly::one()];
    let mut out = MultiPoly::zero();
    for (m, coeff) in p.terms() {
        let ei = m.degree_in(vi);
        let ej = m.degree_in(vj);
        let k = ei.min(ej);
        if k == 0 {
            out.add_term(m.clone(), coeff.clone());
            continue;
        }
        while powers.len() <= k as usize {
            powers.push(powers.last().unwrap() * c);
        }
        let (rest, _) = m.without_var(vi);
        let (rest, _) = rest.without_var(vj);
        let reduced = rest
            .mul(&Monomial::var_pow(vi, ei - k))
            .mul(&Monomial::var_pow(vj, ej - k));
        let term = MultiPoly::from_term(reduced, coeff.clone());
        out = &out + &(&term * &powers[k as usize]);
    }
    Ok(out)
}
