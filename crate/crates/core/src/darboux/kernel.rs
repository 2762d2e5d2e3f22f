//! Kernel-function membership: does `k . q` annihilate sigma0 * exp(x.z)
//! identically along a spectral constraint z_i z_j = rhs?

use crate::operator::{DiffOp, ExpFunction};
use crate::poly::{reduce_mod_binomial, MultiPoly, RatFun, VarClass, VarId};

use super::eigenfunction::normalized_eigenfunction;
use super::DarbouxError;

/// The curve z_i z_j = rhs along which kernel functions are parameterized.
/// `rhs` involves neither z_i nor z_j (typically a parameter like lambda).
#[derive(Debug, Clone)]
pub struct SpectralConstraint {
    pub zi: u32,
    pub zj: u32,
    pub rhs: MultiPoly,
}

impl SpectralConstraint {
    pub fn new(zi: u32, zj: u32, rhs: MultiPoly) -> Self {
        assert!(zi != zj, "spectral constraint needs two distinct variables");
        assert!(
            !rhs.involves_var(VarId::z(zi)) && !rhs.involves_var(VarId::z(zj)),
            "constraint right-hand side must not involve its own variables"
        );
        SpectralConstraint { zi, zj, rhs }
    }
}

/// True iff `k . q` annihilates `sigma0 * exp(x.z)` for every point of the
/// constraint curve, where `sigma0` is the common denominator from the
/// eigenfunction decomposition of `k`.
///
/// The test applies the composed operator to `sigma0 * exp`, clears the
/// x-denominator, and reduces the z-coefficient of every x-monomial modulo
/// the binomial z_i z_j - rhs; membership holds iff every reduction is zero.
pub fn kernel_membership(
    k: &DiffOp,
    q: &DiffOp,
    constraint: &SpectralConstraint,
) -> Result<bool, DarbouxError> {
    if !q.is_constant_coefficient() {
        return Err(DarbouxError::NonConstantQ);
    }
    let data = normalized_eigenfunction(k)?;
    let composed = k.compose(q).expect("dimensions match");
    let seed = ExpFunction::new(k.dim(), RatFun::from(data.sigma0));
    let image = composed.apply(&seed).expect("dimensions match");
    // Denominators are x/parameter polynomials, so vanishing of the image on
    // the curve is vanishing of its numerator on the curve.
    let cleared = image.coeff().num();
    let zi = VarId::z(constraint.zi);
    let zj = VarId::z(constraint.zj);
    // Check the z-part of each x-monomial independently.
    let mut groups: std::collections::BTreeMap<crate::poly::Monomial, MultiPoly> =
        std::collections::BTreeMap::new();
    for (mono, c) in cleared.terms() {
        let (xpart, rest) = mono.split(|v| v.class == VarClass::X);
        groups
            .entry(xpart)
            .or_insert_with(MultiPoly::zero)
            .add_term(rest, c.clone());
    }
    for zpart in groups.values() {
        let reduced = reduce_mod_binomial(zpart, zi, zj, &constraint.rhs)
            .expect("constraint right-hand side is checked at construction");
        if !reduced.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
