//! The resultant proper: rank-based zero detection first, then a gcd fold
//! over the minor stream. Minor determinants are independent pure
//! computations and are evaluated by a worker pool; the gcd fold is
//! associative and commutative up to units, so accumulation order cannot
//! affect the normalized result.

use rayon::iter::{ParallelBridge, ParallelIterator};

use crate::operator::DiffOp;
use crate::poly::{poly_gcd, poly_gcd_many, poly_matrix_rank, MultiPoly, VarClass};

use super::matrix::{build_resultant_matrix, ResultantMatrix};
use super::minors::{minor_value, selection_stream, MinorMode};
use super::ResultantError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultantKind {
    Zero,
    Poly,
}

/// How an outcome was produced. `RankOnly` marks results certified by rank
/// deficiency alone, without enumerating any minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultantMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
    RankOnly,
}

#[derive(Debug, Clone)]
pub struct ResultantOutcome {
    pub kind: ResultantKind,
    /// The gcd of the examined minors, made primitive as a polynomial in the
    /// shift variables; zero when `kind` is `Zero`. In sampled mode this is
    /// a documented multiple of the true resultant (the gcd of a subset of
    /// the minors), never the certified resultant itself.
    pub value: MultiPoly,
    /// Content of the gcd over the coefficient ring (x and parameters),
    /// reported separately rather than discarded.
    pub x_content: MultiPoly,
    pub minors_examined: usize,
    pub mode: ResultantMode,
    pub rank: usize,
    pub columns: usize,
}

/// Rank of the resultant matrix over the fraction field, with its shape.
#[derive(Debug, Clone, Copy)]
pub struct RankReport {
    pub rank: usize,
    pub rows: usize,
    pub columns: usize,
    pub deficient: bool,
}

pub fn resultant_rank(m: &ResultantMatrix) -> RankReport {
    let rank = poly_matrix_rank(&m.rows);
    RankReport {
        rank,
        rows: m.row_count(),
        columns: m.col_count(),
        deficient: rank < m.col_count(),
    }
}

/// Split a polynomial in the shift variables into its content over the
/// x/parameter coefficient ring and the content-free part.
pub fn split_shift_content(p: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if p.is_zero() {
        return (MultiPoly::zero(), MultiPoly::zero());
    }
    // Group coefficients by their full mu-monomial.
    let mut groups: std::collections::BTreeMap<crate::poly::Monomial, MultiPoly> =
        std::collections::BTreeMap::new();
    for (mono, c) in p.terms() {
        let (mu_part, rest) = mono.split(|v| v.class == VarClass::Mu);
        groups
            .entry(mu_part)
            .or_insert_with(MultiPoly::zero)
            .add_term(rest, c.clone());
    }
    let content = poly_gcd_many(groups.values());
    let primitive = p
        .exact_div(&content)
        .expect("content divides")
        .normalized();
    (primitive, content.normalized())
}

/// Compute the resultant outcome for `ops`, rank check first.
pub fn differential_resultant(
    ops: &[DiffOp],
    mode: MinorMode,
) -> Result<ResultantOutcome, ResultantError> {
    let m = build_resultant_matrix(ops)?;
    differential_resultant_of(&m, mode)
}

/// Same, starting from an already-built matrix.
pub fn differential_resultant_of(
    m: &ResultantMatrix,
    mode: MinorMode,
) -> Result<ResultantOutcome, ResultantError> {
    let report = resultant_rank(m);
    if report.deficient {
        return Ok(ResultantOutcome {
            kind: ResultantKind::Zero,
            value: MultiPoly::zero(),
            x_content: MultiPoly::zero(),
            minors_examined: 0,
            mode: ResultantMode::RankOnly,
            rank: report.rank,
            columns: report.columns,
        });
    }
    let stream = selection_stream(m, mode)?;
    // Fold state: (minors examined, running gcd). Folding first tries the
    // cheap divisibility test against the running gcd; layers are merged
    // with a final gcd per worker pair.
    let fold = |(count, acc): (usize, MultiPoly), sel: Vec<usize>| {
        let pr = minor_value(m, &sel);
        let acc = fold_gcd(acc, pr.value);
        (count + 1, acc)
    };
    let (minors_examined, gcd) = stream
        .par_bridge()
        .fold(|| (0usize, MultiPoly::zero()), fold)
        .reduce(
            || (0usize, MultiPoly::zero()),
            |(c1, g1), (c2, g2)| (c1 + c2, fold_gcd(g1, g2)),
        );
    let (value, x_content) = split_shift_content(&gcd);
    let out_mode = match mode {
        MinorMode::Exhaustive => ResultantMode::Exhaustive,
        MinorMode::Sampled { count, seed } => ResultantMode::Sampled { count, seed },
    };
    Ok(ResultantOutcome {
        kind: if gcd.is_zero() {
            ResultantKind::Zero
        } else {
            ResultantKind::Poly
        },
        value,
        x_content,
        minors_examined,
        mode: out_mode,
        rank: report.rank,
        columns: report.columns,
    })
}

fn fold_gcd(acc: MultiPoly, value: MultiPoly) -> MultiPoly {
    if value.is_zero() {
        return acc;
    }
    if acc.is_zero() {
        return value.normalized();
    }
    // Once the accumulator divides the new minor the gcd is unchanged.
    if value.exact_div(&acc).is_some() {
        return acc;
    }
    poly_gcd(&acc, &value)
}
