//! Littlewood-Richardson coefficients.
//!
//! `c^ν_{λμ}` counts semistandard fillings of the skew shape `ν/λ` with
//! content `μ` whose reverse reading word (right to left, top to bottom) is
//! a lattice word.

use std::collections::BTreeMap;

use crate::partition::{partitions_of, Partition};

/// `c^ν_{λμ}`; zero unless `λ ⊆ ν` and `|ν| = |λ| + |μ|`.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // cells of ν/λ in reading order
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|row| (lambda.part(row)..nu.part(row)).rev().map(move |col| (row, col)))
        .collect();
    let mut filler = Filler {
        nu,
        lambda,
        content: mu.parts(),
        cells: &cells,
        grid: nu.parts().iter().map(|&w| vec![0usize; w]).collect(),
        used: vec![0; mu.len()],
    };
    filler.count(0)
}

struct Filler<'a> {
    nu: &'a Partition,
    lambda: &'a Partition,
    content: &'a [usize],
    cells: &'a [(usize, usize)],
    /// 1-based entries; 0 marks an empty or inner cell
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl Filler<'_> {
    fn count(&mut self, index: usize) -> u64 {
        let Some(&(row, col)) = self.cells.get(index) else {
            return 1;
        };
        // weakly increasing along the row: bounded by the entry to the right
        let max_row = if col + 1 < self.nu.part(row) { self.grid[row][col + 1] } else { usize::MAX };
        // strictly increasing down the column
        let min_col = if row > 0 && col >= self.lambda.part(row - 1) { self.grid[row - 1][col] + 1 } else { 1 };
        let top = max_row.min(self.content.len()).min(row + 1);
        let mut total = 0;
        for value in min_col..=top {
            let v = value - 1;
            if self.used[v] == self.content[v] {
                continue;
            }
            if v > 0 && self.used[v] + 1 > self.used[v - 1] {
                continue;
            }
            self.used[v] += 1;
            self.grid[row][col] = value;
            total += self.count(index + 1);
            self.grid[row][col] = 0;
            self.used[v] -= 1;
        }
        total
    }
}

/// `s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν`, nonzero terms in reverse-lexicographic order of ν.
pub fn schur_product_expand(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    partitions_of(lambda.size() + mu.size())
        .into_iter()
        .filter(|nu| nu.contains(lambda) && nu.contains(mu))
        .filter_map(|nu| {
            let c = lr_coefficient(&nu, lambda, mu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// The m-fold coefficient of `s_outer` in `s_{inners[0]} ⋯ s_{inners[m-1]}`.
pub fn lr_multi(outer: &Partition, inners: &[Partition]) -> u64 {
    assert!(!inners.is_empty(), "at least one factor");
    if inners.iter().map(Partition::size).sum::<usize>() != outer.size() {
        return 0;
    }
    let mut partial: BTreeMap<Partition, u64> = BTreeMap::new();
    partial.insert(Partition::empty(), 1);
    for inner in inners {
        let mut next = BTreeMap::new();
        for (sigma, &c) in &partial {
            for (tau, d) in schur_product_expand(sigma, inner) {
                if outer.contains(&tau) {
                    *next.entry(tau).or_insert(0) += c * d;
                }
            }
        }
        partial = next;
    }
    partial.get(outer).copied().unwrap_or(0)
}
