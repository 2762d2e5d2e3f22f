//! Differential operators with rational-function coefficients.
//!
//! A [`DiffOp`] is a finite sum of terms `f(x) * D^alpha` where `D^alpha`
//! ranges over monomials in the partial-derivative symbols D1..Dn and the
//! coefficients are rational functions of the base variables (plus scalar
//! parameters, and the shift variables mu which act as constants).
//! Composition follows the Leibniz rule `Di . f = f Di + df/dxi`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::poly::{MultiPoly, RatFun, VarClass, VarId};

use super::OpError;

/// A monomial in the derivative symbols: a dense multi-index of length `dim`.
///
/// Ordered graded-lexicographically: total degree first, ties broken by the
/// earliest index with a larger exponent, so D1^2 > D1 D2 > D2^2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DMono(pub Vec<u32>);

impl DMono {
    pub fn constant(dim: usize) -> Self {
        DMono(vec![0; dim])
    }

    pub fn single(dim: usize, index: usize) -> Self {
        assert!((1..=dim).contains(&index), "derivative index out of range");
        let mut v = vec![0; dim];
        v[index - 1] = 1;
        DMono(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &DMono) -> DMono {
        DMono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn bump(&self, index: usize) -> DMono {
        let mut v = self.0.clone();
        v[index - 1] += 1;
        DMono(v)
    }

    /// All multi-indices of total degree <= `d`, in descending graded-lex
    /// order (the basis order used throughout).
    pub fn all_up_to(dim: usize, d: i64) -> Vec<DMono> {
        if d < 0 {
            return Vec::new();
        }
        let mut out: Vec<DMono> = Vec::new();
        let mut cur = vec![0u32; dim];
        fn rec(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<DMono>) {
            if pos == cur.len() {
                out.push(DMono(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[pos] = e;
                rec(cur, pos + 1, left - e, out);
            }
            cur[pos] = 0;
        }
        rec(&mut cur, 0, d as u32, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl PartialOrd for DMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DMono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for DMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "D{}", i + 1)?;
            } else {
                write!(f, "D{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A partial differential operator in `dim` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOp {
    dim: usize,
    terms: BTreeMap<DMono, RatFun>,
}

impl DiffOp {
    pub fn zero(dim: usize) -> Self {
        DiffOp {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The identity operator (multiplication by 1).
    pub fn one(dim: usize) -> Self {
        DiffOp::scalar(dim, RatFun::one())
    }

    /// The elementary derivative D_index (1-based).
    pub fn partial(dim: usize, index: usize) -> Self {
        DiffOp::monomial(dim, DMono::single(dim, index), RatFun::one())
    }

    /// Multiplication by a rational function.
    pub fn scalar(dim: usize, f: RatFun) -> Self {
        DiffOp::monomial(dim, DMono::constant(dim), f)
    }

    pub fn monomial(dim: usize, d: DMono, coeff: RatFun) -> Self {
        assert_eq!(d.dim(), dim);
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            debug_assert!(
                !coeff.involves_class(VarClass::Z),
                "operator coefficients may not involve spectral variables"
            );
            terms.insert(d, coeff);
        }
        DiffOp { dim, terms }
    }

    pub fn from_terms(dim: usize, list: impl IntoIterator<Item = (DMono, RatFun)>) -> Self {
        let mut op = DiffOp::zero(dim);
        for (d, c) in list {
            op.add_term(d, c);
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DMono, &RatFun)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order of the derivative monomial.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&DMono, &RatFun)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, d: &DMono) -> RatFun {
        self.terms.get(d).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn add_term(&mut self, d: DMono, c: RatFun) {
        assert_eq!(d.dim(), self.dim);
        if c.is_zero() {
            return;
        }
        debug_assert!(
            !c.involves_class(VarClass::Z),
            "operator coefficients may not involve spectral variables"
        );
        match self.terms.entry(d) {
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

    /// Total order in the derivative symbols; `None` for the zero operator
    /// (the "minus infinity" sentinel).
    pub fn order(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|d| d.total_degree() as usize)
            .max()
    }

    /// True iff every coefficient is free of the base variables x1..xn.
    pub fn is_constant_coefficient(&self) -> bool {
        self.terms
            .values()
            .all(|c| !c.involves_class(VarClass::X))
    }

    pub fn add(&self, rhs: &DiffOp) -> Result<DiffOp, OpError> {
        if self.dim != rhs.dim {
            return Err(OpError::DimensionMismatch);
        }
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &DiffOp) -> Result<DiffOp, OpError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), -c))
                .collect(),
        }
    }

    /// Multiply every coefficient on the left by `f`.
    pub fn scale_left(&self, f: &RatFun) -> DiffOp {
        if f.is_zero() {
            return DiffOp::zero(self.dim);
        }
        let mut out = DiffOp::zero(self.dim);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), f * c);
        }
        out
    }

    /// Left-compose with the elementary derivative: `D_index . self`.
    fn d_left(&self, index: usize) -> DiffOp {
        let xvar = VarId::x(index as u32);
        let mut out = DiffOp::zero(self.dim);
        for (d, c) in &self.terms {
            out.add_term(d.bump(index), c.clone());
            out.add_term(d.clone(), c.deriv(xvar));
        }
        out
    }

    /// Operator composition `self . rhs` under the Leibniz rule.
    pub fn compose(&self, rhs: &DiffOp) -> Result<DiffOp, OpError> {
        if self.dim != rhs.dim {
            return Err(OpError::DimensionMismatch);
        }
        // Memoized ladder of D^alpha . rhs, built one derivative at a time.
        let mut memo: HashMap<Vec<u32>, DiffOp> = HashMap::new();
        memo.insert(vec![0; self.dim], rhs.clone());
        let mut out = DiffOp::zero(self.dim);
        for (alpha, f) in &self.terms {
            let shifted = self.shifted(&mut memo, &alpha.0);
            let scaled = shifted.scale_left(f);
            out = out.add(&scaled)?;
        }
        Ok(out)
    }

    fn shifted(&self, memo: &mut HashMap<Vec<u32>, DiffOp>, alpha: &[u32]) -> DiffOp {
        if let Some(hit) = memo.get(alpha) {
            return hit.clone();
        }
        let i = alpha
            .iter()
            .position(|&e| e > 0)
            .expect("nonzero multi-index");
        let mut prev = alpha.to_vec();
        prev[i] -= 1;
        let below = self.shifted(memo, &prev);
        let here = below.d_left(i + 1);
        memo.insert(alpha.to_vec(), here.clone());
        here
    }

    /// The commutator `self . rhs - rhs . self`.
    pub fn commutator(&self, rhs: &DiffOp) -> Result<DiffOp, OpError> {
        let ab = self.compose(rhs)?;
        let ba = rhs.compose(self)?;
        ab.sub(&ba)
    }

    pub fn commutes_with(&self, rhs: &DiffOp) -> Result<bool, OpError> {
        Ok(self.commutator(rhs)?.is_zero())
    }

    /// `self` composed with itself `e` times (`e = 0` gives the identity).
    pub fn pow(&self, e: u32) -> Result<DiffOp, OpError> {
        let mut acc = DiffOp::one(self.dim);
        for _ in 0..e {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// Coefficient-wise x_i derivative (each coefficient replaced by its
    /// derivative, derivative monomials unchanged).
    pub fn coefficient_derivative(&self, index: usize) -> DiffOp {
        let xvar = VarId::x(index as u32);
        let mut out = DiffOp::zero(self.dim);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c.deriv(xvar));
        }
        out
    }

    /// The symbol of a constant-coefficient operator: D_i -> z_i. Returned
    /// as a polynomial after clearing any parameter denominator (which does
    /// not change its zero set).
    pub fn symbol(&self) -> Result<MultiPoly, OpError> {
        if !self.is_constant_coefficient() {
            return Err(OpError::NonConstantCoefficient);
        }
        let mut acc = RatFun::zero();
        for (d, c) in &self.terms {
            let mono = crate::poly::Monomial::from_pairs(
                d.0.iter()
                    .enumerate()
                    .map(|(i, &e)| (VarId::z(i as u32 + 1), e)),
            );
            let zmono = RatFun::from(MultiPoly::from_term(mono, crate::poly::rat(1)));
            acc = &acc + &(c * &zmono);
        }
        Ok(acc.num().clone())
    }

    /// Substitute the scalar parameter `v` by a polynomial in every
    /// coefficient.
    pub fn subst_param(&self, v: VarId, replacement: &MultiPoly) -> Result<DiffOp, OpError> {
        let mut out = DiffOp::zero(self.dim);
        for (d, c) in &self.terms {
            let c2 = c
                .subst(v, replacement)
                .map_err(|_| OpError::ZeroDivisor)?;
            out.add_term(d.clone(), c2);
        }
        Ok(out)
    }

    /// Emit the operator in the input syntax of the expression language
    /// (`*` between coefficient and derivative monomial), so that parsing
    /// the result reproduces the operator exactly.
    pub fn to_input_string(&self) -> String {
        canonical_string(self, true)
    }
}

fn canonical_string(op: &DiffOp, explicit_star: bool) -> String {
    use std::fmt::Write;
    if op.is_zero() {
        return "0".to_string();
    }
    let sep = if explicit_star { "*" } else { " " };
    let mut out = String::new();
    for (k, (d, c)) in op.terms_desc().enumerate() {
        let neg = c.has_negative_lead();
        let body = if neg { -c } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let dstr = if explicit_star {
            // D-monomial with explicit composition stars.
            let mut s = String::new();
            let mut first = true;
            for (i, &e) in d.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    s.push('*');
                }
                first = false;
                if e == 1 {
                    write!(s, "D{}", i + 1).unwrap();
                } else {
                    write!(s, "D{}^{}", i + 1, e).unwrap();
                }
            }
            s
        } else {
            format!("{}", d)
        };
        if d.is_constant() {
            if body.as_constant().is_some() {
                write!(out, "{}", body).unwrap();
            } else {
                write!(out, "({})", body).unwrap();
            }
        } else if body.is_one() {
            out.push_str(&dstr);
        } else {
            write!(out, "({}){}{}", body, sep, dstr).unwrap();
        }
    }
    out
}

impl fmt::Display for DiffOp {
    /// Canonical form: terms in descending graded-lex derivative order, each
    /// coefficient printed to the left of its derivative monomial, e.g.
    /// `(x1) D1 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", canonical_string(self, false))
    }
}

/// Evaluate a polynomial in the shift variables mu1..muk at operator
/// arguments: mu_i is replaced by `ops[i-1]`, each monomial expanding in
/// ascending index order with its scalar coefficient multiplying on the
/// left. The operators must mutually commute; otherwise the substitution
/// would depend on the monomial ordering and is refused.
pub fn eval_poly_at_operators(p: &MultiPoly, ops: &[DiffOp]) -> Result<DiffOp, OpError> {
    let dim = ops.first().map(|o| o.dim()).ok_or(OpError::DimensionMismatch)?;
    for op in ops {
        if op.dim() != dim {
            return Err(OpError::DimensionMismatch);
        }
    }
    for v in p.vars() {
        if v.class == VarClass::Mu && v.index as usize > ops.len() {
            return Err(OpError::IndexOutOfRange);
        }
        if v.class == VarClass::Z {
            return Err(OpError::IndexOutOfRange);
        }
    }
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if !ops[i].commutes_with(&ops[j])? {
                return Err(OpError::NonCommutingOperators);
            }
        }
    }
    let mut powers: Vec<Vec<DiffOp>> = ops.iter().map(|op| vec![DiffOp::one(op.dim())]).collect();
    eval_rec(p, ops, ops.len(), &mut powers)
}

fn eval_rec(
    p: &MultiPoly,
    ops: &[DiffOp],
    k: usize,
    powers: &mut Vec<Vec<DiffOp>>,
) -> Result<DiffOp, OpError> {
    let dim = ops[0].dim();
    if p.is_zero() {
        return Ok(DiffOp::zero(dim));
    }
    if k == 0 {
        return Ok(DiffOp::scalar(dim, RatFun::from(p.clone())));
    }
    let muvar = VarId::mu(k as u32);
    let by_deg = p.coeffs_by(muvar);
    let mut out = DiffOp::zero(dim);
    for (deg, coeff) in by_deg {
        let inner = eval_rec(&coeff, ops, k - 1, powers)?;
        while powers[k - 1].len() <= deg as usize {
            let next = powers[k - 1].last().unwrap().compose(&ops[k - 1])?;
            powers[k - 1].push(next);
        }
        let term = inner.compose(&powers[k - 1][deg as usize])?;
        out = out.add(&term)?;
    }
    Ok(out)
}
