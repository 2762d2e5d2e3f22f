//! Common projective zeros at infinity of the homogenized symbols of a
//! constant-coefficient family. At the hyperplane at infinity the shift
//! terms drop out, so a candidate point annihilates every shifted symbol
//! identically iff it annihilates the top-degree forms of the symbols.

use num_traits::Zero;

use crate::operator::DiffOp;
use crate::poly::{MultiPoly, Rational, VarClass, VarId};

use super::ResultantError;

/// Search a bounded rational grid for projective points with last coordinate
/// zero that annihilate every homogenized symbol identically in the shift
/// variables. Points are returned as primitive integer vectors (first
/// nonzero coordinate positive) of length n+1, sorted.
pub fn homogenized_symbol_zero_check(
    ops: &[DiffOp],
    height: i64,
) -> Result<Vec<Vec<Rational>>, ResultantError> {
    let dim = match ops.first() {
        Some(op) => op.dim(),
        None => return Err(ResultantError::DimensionMismatch),
    };
    for op in ops {
        if op.dim() != dim {
            return Err(ResultantError::DimensionMismatch);
        }
        if !op.is_constant_coefficient() {
            return Err(ResultantError::NonConstantInput);
        }
    }
    // An order-zero member contributes (c - mu) at infinity, which never
    // vanishes identically in mu: no common zeros exist.
    let mut leading_forms = Vec::with_capacity(ops.len());
    for op in ops {
        let order = match op.order() {
            Some(o) if o > 0 => o,
            _ => return Ok(Vec::new()),
        };
        let symbol = op.symbol().expect("constant coefficients checked");
        let zdegrees: u32 = order as u32;
        leading_forms.push(z_homogeneous_part(&symbol, zdegrees));
    }
    let mut points: std::collections::BTreeSet<Vec<num_bigint::BigInt>> =
        std::collections::BTreeSet::new();
    let mut coords = vec![0i64; dim];
    search_grid(&mut coords, 0, height, &mut |candidate: &[i64]| {
        if candidate.iter().all(|&c| c == 0) {
            return;
        }
        let normalized = match normalize_projective(candidate) {
            Some(v) => v,
            None => return,
        };
        if points.contains(&normalized) {
            return;
        }
        let vanishes = leading_forms.iter().all(|form| {
            let value = eval_at_z(form, candidate);
            value.is_zero()
        });
        if vanishes {
            points.insert(normalized);
        }
    });
    Ok(points
        .into_iter()
        .map(|v| {
            let mut coords: Vec<Rational> =
                v.into_iter().map(Rational::from_integer).collect();
            coords.push(Rational::zero());
            coords
        })
        .collect())
}

/// The part of `p` of total z-degree exactly `d` (parameters do not count).
fn z_homogeneous_part(p: &MultiPoly, d: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (mono, c) in p.terms() {
        let zdeg: u32 = mono
            .iter()
            .filter(|(v, _)| v.class == VarClass::Z)
            .map(|(_, e)| e)
            .sum();
        if zdeg == d {
            out.add_term(mono.clone(), c.clone());
        }
    }
    out
}

/// Substitute integer values for z1..zn; parameters stay symbolic.
fn eval_at_z(p: &MultiPoly, values: &[i64]) -> MultiPoly {
    let mut out = p.clone();
    for (i, &v) in values.iter().enumerate() {
        out = out.subst(VarId::z(i as u32 + 1), &MultiPoly::from_int(v));
    }
    out
}

fn search_grid(coords: &mut Vec<i64>, pos: usize, height: i64, visit: &mut impl FnMut(&[i64])) {
    if pos == coords.len() {
        visit(coords);
        return;
    }
    for v in -height..=height {
        coords[pos] = v;
        search_grid(coords, pos + 1, height, visit);
    }
    coords[pos] = 0;
}

fn normalize_projective(candidate: &[i64]) -> Option<Vec<num_bigint::BigInt>> {
    use num_integer::Integer;
    let mut g: i64 = 0;
    for &c in candidate {
        g = g.gcd(&c.abs());
    }
    if g == 0 {
        return None;
    }
    let mut out: Vec<i64> = candidate.iter().map(|&c| c / g).collect();
    let first = out.iter().find(|&&c| c != 0).copied().unwrap_or(0);
    if first < 0 {
        out.iter_mut().for_each(|c| *c = -*c);
    }
    Some(out.into_iter().map(num_bigint::BigInt::from).collect())
}
