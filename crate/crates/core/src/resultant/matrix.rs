//! Construction of the shifted-resultant row matrix: one block of rows per
//! operator, each row the coefficient vector of omega . (L_i - mu_i) over
//! the degree-N monomial basis, cleared of x-denominators with the clearing
//! factor recorded per row.

use crate::operator::{DMono, DiffOp};
use crate::poly::{poly_lcm, Monomial, MultiPoly, RatFun, VarId};

use super::basis::{coeff_vector, omega_basis, MonomialBasis};
use super::ResultantError;

#[derive(Debug, Clone)]
pub struct ResultantMatrix {
    pub dim: usize,
    pub operators: Vec<DiffOp>,
    pub orders: Vec<usize>,
    /// The basis degree N = sum of the orders minus the dimension.
    pub degree_bound: i64,
    pub columns: MonomialBasis,
    /// Cleared polynomial entries; row r equals `row_clear[r]` times the
    /// coefficient vector of the generating operator.
    pub rows: Vec<Vec<MultiPoly>>,
    /// (operator index, omega) generating each row.
    pub row_provenance: Vec<(usize, DMono)>,
    pub row_clear: Vec<MultiPoly>,
}

impl ResultantMatrix {
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.columns.len()
    }
}

/// Build the matrix for n+1 nonzero operators in n variables.
pub fn build_resultant_matrix(ops: &[DiffOp]) -> Result<ResultantMatrix, ResultantError> {
    let dim = match ops.first() {
        Some(op) => op.dim(),
        None => return Err(ResultantError::DimensionMismatch),
    };
    if ops.len() != dim + 1 || ops.iter().any(|op| op.dim() != dim) {
        return Err(ResultantError::DimensionMismatch);
    }
    let mut orders = Vec::with_capacity(ops.len());
    for op in ops {
        match op.order() {
            Some(ord) => orders.push(ord),
            None => return Err(ResultantError::ZeroOperator),
        }
    }
    let degree_bound = orders.iter().map(|&o| o as i64).sum::<i64>() - dim as i64;
    if degree_bound < 0 {
        return Err(ResultantError::NegativeN);
    }
    let columns = omega_basis(dim, degree_bound);
    let mut rows = Vec::new();
    let mut row_provenance = Vec::new();
    let mut row_clear = Vec::new();
    for (i, op) in ops.iter().enumerate() {
        let sub = omega_basis(dim, degree_bound - orders[i] as i64);
        for omega in &sub.entries {
            let shifted = DiffOp::monomial(dim, omega.clone(), RatFun::one())
                .compose(op)
                .expect("dimensions match");
            let vector = coeff_vector(&shifted, degree_bound).expect("order fits the basis");
            let mut clear = MultiPoly::one();
            for entry in &vector {
                if !entry.is_zero() {
                    clear = poly_lcm(&clear, entry.den());
                }
            }
            let mut row: Vec<MultiPoly> = vector
                .iter()
                .map(|entry| {
                    if entry.is_zero() {
                        MultiPoly::zero()
                    } else {
                        let extra = clear.exact_div(entry.den()).expect("lcm divides");
                        entry.num() * &extra
                    }
                })
                .collect();
            // The shift variable enters at the omega column: the row
            // represents omega . (op - mu_{i+1}) = omega . op - mu_{i+1} omega.
            let col = columns.position(omega).expect("omega has degree <= N");
            let mu = MultiPoly::from_term(
                Monomial::var(VarId::mu(i as u32 + 1)),
                crate::poly::rat(1),
            );
            row[col] = &row[col] - &(&mu * &clear);
            rows.push(row);
            row_provenance.push((i, omega.clone()));
            row_clear.push(clear);
        }
    }
    Ok(ResultantMatrix {
        dim,
        operators: ops.to_vec(),
        orders,
        degree_bound,
        columns,
        rows,
        row_provenance,
        row_clear,
    })
}
