//! Linear-independence certificates for reduced Schur functions by
//! evaluation modulo a prime.
//!
//! If `Σ c_λ S^(r)_λ = 0` over `Q`, then the same relation holds for the
//! values at any point, so a square matrix of values `S^(r)_λ(point_k)` that
//! is nonsingular mod `p` proves the functions independent. Values come from
//! the Jacobi-Trudi determinants in `h_n` or `e_n` (whichever is smaller),
//! with `n·h_n = Σ_k k·t_k·h_{n-k}` and `t_{jr} = 0`. Needs `p > |λ|`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::partition::Partition;

/// `2^31 - 1`.
pub const PRIME: u64 = 2_147_483_647;

fn mul(a: u64, b: u64) -> u64 {
    a * b % PRIME
}

fn pow(mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    assert!(a % PRIME != 0, "zero has no inverse");
    pow(a, PRIME - 2)
}

/// `h_0..=h_n` at the point `t` (`t[j]` is `t_j`; `t[0]` unused), or
/// `e_0..=e_n` when `alternate` is set.
fn generating_values(t: &[u64], n: usize, alternate: bool) -> Vec<u64> {
    let mut out = vec![0u64; n + 1];
    out[0] = 1;
    for m in 1..=n {
        let mut acc = 0u64;
        for k in 1..=m {
            let tk = t.get(k).copied().unwrap_or(0);
            if tk == 0 {
                continue;
            }
            let mut term = mul(mul(k as u64, tk), out[m - k]);
            if alternate && k % 2 == 0 {
                term = (PRIME - term) % PRIME;
            }
            acc = (acc + term) % PRIME;
        }
        out[m] = mul(acc, inv(m as u64));
    }
    out
}

/// Determinant mod [`PRIME`].
pub fn determinant(mut m: Vec<Vec<u64>>) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| m[i][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (PRIME - det) % PRIME;
        }
        det = mul(det, m[col][col]);
        let pinv = inv(m[col][col]);
        for i in col + 1..n {
            if m[i][col] == 0 {
                continue;
            }
            let factor = mul(m[i][col], pinv);
            for j in col..n {
                let sub = mul(factor, m[col][j]);
                m[i][j] = (m[i][j] + PRIME - sub) % PRIME;
            }
        }
    }
    det
}

/// Rank mod [`PRIME`].
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pinv = inv(rows[rank][col]);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col] == 0 {
                continue;
            }
            let factor = mul(row[col], pinv);
            for (x, &pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + PRIME - mul(factor, pv)) % PRIME;
            }
        }
        rank += 1;
    }
    rank
}

/// `h_n` and `e_n` at one point with `t_{jr}` set to zero.
struct PointValues {
    h: Vec<u64>,
    e: Vec<u64>,
}

impl PointValues {
    fn new(r: usize, t: &[u64], n: usize) -> Self {
        let reduced: Vec<u64> = t
            .iter()
            .enumerate()
            .map(|(j, &x)| if j > 0 && j % r == 0 { 0 } else { x % PRIME })
            .collect();
        PointValues {
            h: generating_values(&reduced, n, false),
            e: generating_values(&reduced, n, true),
        }
    }

    fn schur(&self, lambda: &Partition) -> u64 {
        let conjugate = lambda.conjugate();
        let (shape, values) = if lambda.len() <= conjugate.len() {
            (lambda, &self.h)
        } else {
            (&conjugate, &self.e)
        };
        let l = shape.len();
        let matrix = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let index = shape.part(i) as i64 - i as i64 + j as i64;
                        if index < 0 {
                            0
                        } else {
                            values.get(index as usize).copied().unwrap_or(0)
                        }
                    })
                    .collect()
            })
            .collect();
        determinant(matrix)
    }
}

/// `S^(r)_λ` at the point `t` (entries `t_{jr}` are treated as zero).
pub fn reduced_schur_value(lambda: &Partition, r: usize, t: &[u64]) -> u64 {
    assert!((lambda.size() as u64) < PRIME);
    PointValues::new(r, t, lambda.size()).schur(lambda)
}

/// Whether the reduced Schur functions of `family` are certified linearly
/// independent. `false` means no certificate was found at the sampled points.
pub fn certify_independent(family: &[Partition], r: usize, seed: u64) -> bool {
    if family.is_empty() {
        return true;
    }
    let top = family.iter().map(Partition::size).max().unwrap_or(0);
    assert!((top as u64) < PRIME);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<PointValues> = (0..family.len())
        .map(|_| {
            let t: Vec<u64> = (0..=top).map(|_| rng.gen_range(1..PRIME)).collect();
            PointValues::new(r, &t, top)
        })
        .collect();
    let rows: Vec<Vec<u64>> = family
        .iter()
        .map(|lambda| points.iter().map(|v| v.schur(lambda)).collect())
        .collect();
    rank(rows) == family.len()
}
