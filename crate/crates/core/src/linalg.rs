//! Exact rank of a family of polynomials.

use std::collections::BTreeSet;

use crate::polyring::{Monomial, Scalar, TPolynomial};

/// Rank of a dense matrix over a field, by Gaussian elimination.
pub fn rank<C: Scalar>(mut rows: Vec<Vec<C>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / pivot_row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        rank += 1;
    }
    rank
}

/// Writes each polynomial in coordinates over the union of their monomials.
pub fn coefficient_matrix<C: Scalar>(polys: &[TPolynomial<C>]) -> (Vec<Monomial>, Vec<Vec<C>>) {
    let support: BTreeSet<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    let support: Vec<Monomial> = support.into_iter().collect();
    let rows = polys
        .iter()
        .map(|p| support.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    (support, rows)
}

/// Dimension of the span of `polys`.
pub fn span_rank<C: Scalar>(polys: &[TPolynomial<C>]) -> usize {
    rank(coefficient_matrix(polys).1)
}
