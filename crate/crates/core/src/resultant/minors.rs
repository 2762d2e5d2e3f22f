//! Enumeration and evaluation of maximal minors of the resultant matrix.
//!
//! Exhaustive enumeration walks row selections in diagram order: selections
//! correspond to partitions fitting in a (rows-cols) x cols box, listed with
//! the first part ascending in the outer loop. Sampled mode draws parts
//! uniformly from a seeded generator, so identical seeds give identical
//! minor streams; repeats are possible and are not deduplicated.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{bareiss_det, MultiPoly, RatFun};

use super::matrix::ResultantMatrix;
use super::ResultantError;

/// How to walk the maximal minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

/// A single maximal minor: the selected rows (ascending), its value as the
/// true minor of the uncleared matrix up to the recorded unit, and that
/// unit's denominator (an x-polynomial divided out during clearing).
#[derive(Debug, Clone)]
pub struct PartialResultant {
    pub rows: Vec<usize>,
    pub value: MultiPoly,
    pub dropped_unit: MultiPoly,
}

/// Iterator over row selections in diagram order.
pub struct DiagramSelections {
    rows: usize,
    cols: usize,
    parts: Option<Vec<u32>>,
}

impl DiagramSelections {
    pub fn new(rows: usize, cols: usize) -> Self {
        debug_assert!(rows >= cols && cols > 0);
        DiagramSelections {
            rows,
            cols,
            parts: Some(vec![0; cols]),
        }
    }
}

pub(crate) fn parts_to_selection(rows: usize, cols: usize, parts: &[u32]) -> Vec<usize> {
    // Part k at position i selects row (rows - cols + i - k); nonincreasing
    // parts give strictly increasing row indices.
    parts
        .iter()
        .enumerate()
        .map(|(i, &k)| rows - cols + i - k as usize)
        .collect()
}

impl Iterator for DiagramSelections {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let parts = self.parts.as_mut()?;
        let out = parts_to_selection(self.rows, self.cols, parts);
        // Successor: bump the rightmost part that is below its left
        // neighbour, zeroing everything after it; exhausting those, grow the
        // first part.
        let max = (self.rows - self.cols) as u32;
        let bump = (1..parts.len()).rev().find(|&i| parts[i] < parts[i - 1]);
        match bump {
            Some(i) => {
                parts[i] += 1;
                for p in parts.iter_mut().skip(i + 1) {
                    *p = 0;
                }
            }
            None => {
                if parts[0] < max {
                    let head = parts[0] + 1;
                    parts.iter_mut().for_each(|p| *p = 0);
                    parts[0] = head;
                } else {
                    self.parts = None;
                }
            }
        }
        Some(out)
    }
}

/// Seeded random selections in the same partition encoding.
/// Seeded random row selections (the sampled-mode stream), exposed for
/// callers that drive minors one at a time.
pub fn sampled_selections(
    rows: usize,
    cols: usize,
    count: usize,
    seed: u64,
) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = (rows - cols) as u32;
    (0..count)
        .map(|_| {
            let mut parts: Vec<u32> = (0..cols).map(|_| rng.random_range(0..=max)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts_to_selection(rows, cols, &parts)
        })
        .collect()
}

pub(crate) fn selection_stream(
    m: &ResultantMatrix,
    mode: MinorMode,
) -> Result<Box<dyn Iterator<Item = Vec<usize>> + Send>, ResultantError> {
    let rows = m.row_count();
    let cols = m.col_count();
    if rows < cols {
        return Err(ResultantError::TooWide);
    }
    Ok(match mode {
        MinorMode::Exhaustive => Box::new(DiagramSelections::new(rows, cols)),
        MinorMode::Sampled { count, seed } => {
            Box::new(sampled_selections(rows, cols, count, seed).into_iter())
        }
    })
}

/// Evaluate one maximal minor: the determinant of the selected cleared rows,
/// with the recorded row-clearing factors divided back out so the value is
/// the true minor of the original matrix up to the returned unit.
pub fn minor_value(m: &ResultantMatrix, selection: &[usize]) -> PartialResultant {
    let sub: Vec<Vec<MultiPoly>> = selection.iter().map(|&r| m.rows[r].clone()).collect();
    let det = bareiss_det(&sub);
    if det.is_zero() {
        return PartialResultant {
            rows: selection.to_vec(),
            value: MultiPoly::zero(),
            dropped_unit: MultiPoly::one(),
        };
    }
    let mut clear = MultiPoly::one();
    for &r in selection {
        clear = &clear * &m.row_clear[r];
    }
    let reduced = RatFun::new(det, clear).expect("clearing factors are nonzero");
    PartialResultant {
        rows: selection.to_vec(),
        value: reduced.num().clone(),
        dropped_unit: reduced.den().clone(),
    }
}

/// Stream the maximal minors of `m` in the requested mode.
pub fn partial_resultants<'a>(
    m: &'a ResultantMatrix,
    mode: MinorMode,
) -> Result<impl Iterator<Item = PartialResultant> + 'a, ResultantError> {
    let stream = selection_stream(m, mode)?;
    Ok(stream.map(move |sel| minor_value(m, &sel)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultant::matrix::build_resultant_matrix;
    use crate::resultant::fixtures::{positive_triple, vanishing_triple};

    #[test]
    fn diagram_order_small_case() {
        // 4 rows choose 3: partitions in a 1x3 box.
        let sels: Vec<Vec<usize>> = DiagramSelections::new(4, 3).collect();
        assert_eq!(
            sels,
            vec![
                vec![1, 2, 3],
                vec![0, 2, 3],
                vec![0, 1, 3],
                vec![0, 1, 2],
            ]
        );
    }

    #[test]
    fn diagram_count_matches_binomial() {
        // C(6,2) = 15 and C(19,15) = 3876.
        assert_eq!(DiagramSelections::new(6, 2).count(), 15);
        let m = build_resultant_matrix(&positive_triple()).unwrap();
        assert_eq!(
            DiagramSelections::new(m.row_count(), m.col_count()).count(),
            3876
        );
    }

    #[test]
    fn selections_are_strictly_increasing_and_unique() {
        let mut seen = std::collections::BTreeSet::new();
        for sel in DiagramSelections::new(7, 4) {
            assert!(sel.windows(2).all(|w| w[0] < w[1]));
            assert!(sel.iter().all(|&r| r < 7));
            assert!(seen.insert(sel));
        }
        assert_eq!(seen.len(), 35);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let a = sampled_selections(19, 15, 6, 42);
        let b = sampled_selections(19, 15, 6, 42);
        assert_eq!(a, b);
        let c = sampled_selections(19, 15, 6, 43);
        assert_ne!(a, c);
        for sel in &a {
            assert!(sel.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn square_matrix_has_a_single_minor() {
        let ops = vec![
            crate::operator::DiffOp::partial(1, 1).pow(2).unwrap(),
            crate::operator::DiffOp::partial(1, 1).pow(3).unwrap(),
        ];
        let m = build_resultant_matrix(&ops).unwrap();
        let minors: Vec<_> = partial_resultants(&m, MinorMode::Exhaustive)
            .unwrap()
            .collect();
        assert_eq!(minors.len(), 1);
        assert!(!minors[0].value.is_zero());
    }

    #[test]
    fn vanishing_family_has_zero_minors() {
        let m = build_resultant_matrix(&vanishing_triple()).unwrap();
        for pr in partial_resultants(&m, MinorMode::Sampled { count: 5, seed: 7 }).unwrap() {
            assert!(pr.value.is_zero(), "minor {:?} vanishes", pr.rows);
        }
    }

    #[test]
    fn too_wide_is_rejected() {
        let m = build_resultant_matrix(&positive_triple()).unwrap();
        let mut narrow = m.clone();
        narrow.rows.truncate(3);
        narrow.row_clear.truncate(3);
        narrow.row_provenance.truncate(3);
        assert!(matches!(
            selection_stream(&narrow, MinorMode::Exhaustive).err(),
            Some(ResultantError::TooWide)
        ));
    }
}
