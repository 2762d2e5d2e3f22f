//! The normalized common eigenfunction of a nonzero operator: the operator
//! applied to the plane wave, decomposed over a common x-denominator into
//! (z-polynomial, x-monomial) pairs, divided by the gcd of the z-parts.

use crate::operator::{DiffOp, ExpFunction};
use crate::poly::{poly_gcd_many, Monomial, MultiPoly, RatFun, VarClass};

use super::DarbouxError;

/// Decomposition of `k[exp(x.z)]` as `(sum_a rho_a(z) sigma_a(x)) / sigma0(x)`
/// together with the gcd `g` of the `rho_a` and the normalized eigenfunction
/// `psi = k[exp]/g`.
#[derive(Debug, Clone)]
pub struct EigenfunctionData {
    /// Common denominator (in x and parameters).
    pub sigma0: MultiPoly,
    /// Pairs (rho_a, sigma_a): z/parameter polynomial and its x-monomial,
    /// in descending order of the x-monomial.
    pub pairs: Vec<(MultiPoly, Monomial)>,
    /// Greatest common divisor of all rho_a.
    pub g: MultiPoly,
    /// The normalized eigenfunction.
    pub psi: ExpFunction,
}

/// Apply `k` to the plane wave and normalize by the gcd of the z-numerators.
pub fn normalized_eigenfunction(k: &DiffOp) -> Result<EigenfunctionData, DarbouxError> {
    if k.is_zero() {
        return Err(DarbouxError::ZeroOperator);
    }
    let wave = ExpFunction::plane_wave(k.dim());
    let image = k.apply(&wave).expect("dimensions match");
    let coeff = image.coeff();
    let sigma0 = coeff.den().clone();
    debug_assert!(
        !sigma0.involves_class(VarClass::Z),
        "denominators never involve spectral variables"
    );
    // Group the numerator terms by their x-monomial part.
    let mut groups: std::collections::BTreeMap<Monomial, MultiPoly> =
        std::collections::BTreeMap::new();
    for (mono, c) in coeff.num().terms() {
        let (xpart, rest) = mono.split(|v| v.class == VarClass::X);
        groups
            .entry(xpart)
            .or_insert_with(MultiPoly::zero)
            .add_term(rest, c.clone());
    }
    let pairs: Vec<(MultiPoly, Monomial)> = groups
        .into_iter()
        .rev()
        .map(|(sigma, rho)| (rho, sigma))
        .collect();
    let g = poly_gcd_many(pairs.iter().map(|(rho, _)| rho));
    let psi_coeff = coeff / &RatFun::from(g.clone());
    Ok(EigenfunctionData {
        sigma0,
        pairs,
        g,
        psi: ExpFunction::new(k.dim(), psi_coeff),
    })
}
