//! Exact linear algebra over polynomial and rational-function entries:
//! fraction-free (Bareiss) determinants, rank over the fraction field, and
//! a small Gauss-Jordan solver used by the operator conjugation machinery.

use super::multipoly::MultiPoly;
use super::ratfun::RatFun;

/// Exact determinant of a square matrix of polynomials by fraction-free
/// elimination. Every intermediate division is exact. The 0x0 matrix has
/// determinant 1.
pub fn bareiss_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "bareiss_det requires a square matrix");
    }
    if n == 0 {
        return MultiPoly::one();
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        // Sparse pivoting: smallest nonzero entry (by term count) in column k.
        let pivot = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| a[r][k].num_terms());
        let pivot = match pivot {
            Some(p) => p,
            None => return MultiPoly::zero(),
        };
        if pivot != k {
            a.swap(pivot, k);
            sign = !sign;
        }
        let pivot_entry = a[k][k].clone();
        for i in k + 1..n {
            let elim = a[i][k].clone();
            for j in k + 1..n {
                let num = &(&pivot_entry * &a[i][j]) - &(&elim * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss elimination divides exactly");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = pivot_entry;
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Rank of a polynomial matrix over the fraction field of the polynomial
/// ring (all variables transcendental). Fraction-free elimination with row
/// and column pivoting; row count and column count may differ.
pub fn poly_matrix_rank(m: &[Vec<MultiPoly>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut prev = MultiPoly::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank >= rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].num_terms());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        a.swap(pivot, rank);
        let pivot_entry = a[rank][col].clone();
        for i in rank + 1..rows {
            let elim = a[i][col].clone();
            for j in col + 1..cols {
                let num = &(&pivot_entry * &a[i][j]) - &(&elim * &a[rank][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            a[i][col] = MultiPoly::zero();
        }
        prev = pivot_entry;
        rank += 1;
    }
    rank
}

/// Rank of a matrix of rational functions over the fraction field. Rows are
/// cleared to polynomials (scaling by a nonzero denominator preserves rank)
/// and eliminated fraction-free.
pub fn matrix_rank_over_fraction_field(m: &[Vec<RatFun>]) -> usize {
    let cleared: Vec<Vec<MultiPoly>> = m
        .iter()
        .map(|row| {
            let mut clear = MultiPoly::one();
            for entry in row {
                if !entry.is_zero() {
                    clear = super::gcd::poly_lcm(&clear, entry.den());
                }
            }
            row.iter()
                .map(|entry| {
                    if entry.is_zero() {
                        MultiPoly::zero()
                    } else {
                        let extra = clear.exact_div(entry.den()).expect("lcm divides");
                        entry.num() * &extra
                    }
                })
                .collect()
        })
        .collect();
    poly_matrix_rank(&cleared)
}

/// One linear constraint sum_j coeffs[j] * unknown[j] = rhs over rational
/// functions.
pub struct LinearRow {
    pub coeffs: Vec<RatFun>,
    pub rhs: RatFun,
}

/// Solve a linear system by incremental Gauss-Jordan elimination, processing
/// rows in the given order and picking in each row the nonzero coefficient
/// of smallest column index. Returns the minimal solution (free unknowns set
/// to zero) or `None` when the system is inconsistent.
pub fn solve_linear_system(rows: Vec<LinearRow>, unknowns: usize) -> Option<Vec<RatFun>> {
    // Reduced rows, each stored with its pivot column.
    let mut pivots: Vec<(usize, LinearRow)> = Vec::new();
    for mut row in rows {
        debug_assert_eq!(row.coeffs.len(), unknowns);
        // Eliminate existing pivots from this row.
        for (col, prow) in &pivots {
            let factor = row.coeffs[*col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..unknowns {
                let delta = &factor * &prow.coeffs[j];
                row.coeffs[j] = &row.coeffs[j] - &delta;
            }
            row.rhs = &row.rhs - &(&factor * &prow.rhs);
        }
        // Find this row's pivot.
        let col = match (0..unknowns).find(|&j| !row.coeffs[j].is_zero()) {
            Some(c) => c,
            None => {
                if row.rhs.is_zero() {
                    continue;
                }
                return None; // 0 = nonzero
            }
        };
        // Normalize the pivot to 1.
        let inv = row.coeffs[col].recip().expect("pivot is nonzero");
        for j in 0..unknowns {
            row.coeffs[j] = &row.coeffs[j] * &inv;
        }
        row.rhs = &row.rhs * &inv;
        // Eliminate the new pivot from all stored rows.
        for (_, prow) in pivots.iter_mut() {
            let factor = prow.coeffs[col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..unknowns {
                let delta = &factor * &row.coeffs[j];
                prow.coeffs[j] = &prow.coeffs[j] - &delta;
            }
            prow.rhs = &prow.rhs - &(&factor * &row.rhs);
        }
        pivots.push((col, row));
    }
    let mut solution = vec![RatFun::zero(); unknowns];
    for (col, row) in &pivots {
        solution[*col] = row.rhs.clone();
    }
    Some(solution)
}
