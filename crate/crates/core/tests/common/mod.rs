//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rschur::partition::{partitions_of, Partition};
use rschur::schur::{mn_character, schur_in_t, CycleType};
use rschur::{Poly, Rational};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Dense-exponent polynomial in `x_1..x_m`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct XPoly {
    pub terms: HashMap<Vec<usize>, Rational>,
}

impl XPoly {
    pub fn constant(m: usize, c: Rational) -> Self {
        let mut x = XPoly::default();
        if !c.is_zero() {
            x.terms.insert(vec![0; m], c);
        }
        x
    }

    fn add_term(&mut self, e: Vec<usize>, c: Rational) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        let mut out = XPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<usize> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// `x_1^j + ... + x_m^j`
    pub fn power_sum(m: usize, j: usize) -> XPoly {
        let mut out = XPoly::default();
        for i in 0..m {
            let mut e = vec![0; m];
            e[i] = j;
            out.add_term(e, Rational::one());
        }
        out
    }

    /// `det(x_i^{exps[j]})` by the Leibniz expansion.
    pub fn alternant(exps: &[usize]) -> XPoly {
        let m = exps.len();
        let mut out = XPoly::default();
        for (perm, sign) in permutations(m) {
            let e: Vec<usize> = (0..m).map(|i| exps[perm[i]]).collect();
            out.add_term(e, Rational::from_integer(BigInt::from(sign)));
        }
        out
    }
}

/// All permutations of `0..m` with their signs.
pub fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    if m == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(m - 1) {
        // insert m-1 at every position; moving it left past k entries flips k times
        for pos in 0..=perm.len() {
            let mut next = perm.clone();
            next.insert(pos, m - 1);
            let flips = (perm.len() - pos) as i64;
            out.push((next, if flips % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

/// Substitutes `t_j = p_j(x_1..x_m) / j`.
pub fn t_to_x(poly: &Poly, m: usize) -> XPoly {
    let mut out = XPoly::default();
    for (mono, c) in poly.terms() {
        let mut term = XPoly::constant(m, c.clone());
        for &(j, e) in mono.exponents() {
            let scaled = XPoly::power_sum(m, j).mul(&XPoly::constant(
                m,
                Rational::new(BigInt::one(), BigInt::from(j)),
            ));
            for _ in 0..e {
                term = term.mul(&scaled);
            }
        }
        out = out.add(&term);
    }
    out
}

/// Checks `S_λ(t)` against the bialternant formula in `m = max(|λ|, 1)`
/// variables: `S_λ(x)·det(x_i^{m-j}) = det(x_i^{λ_j + m - j})`. With `m ≥ |λ|`
/// power sums of degree `|λ|` are independent, so this pins every
/// t-coefficient.
pub fn matches_bialternant(lambda: &Partition) -> bool {
    let m = lambda.size().max(1);
    let shifted: Vec<usize> = (0..m).map(|j| lambda.part(j) + m - 1 - j).collect();
    let staircase: Vec<usize> = (0..m).map(|j| m - 1 - j).collect();
    let s: Poly = schur_in_t(lambda);
    t_to_x(&s, m).mul(&XPoly::alternant(&staircase)) == XPoly::alternant(&shifted)
}

/// `Σ_ν χ^λ(ν) χ^μ(ν) / z_ν`.
pub fn character_inner_product(lambda: &Partition, mu: &Partition) -> Rational {
    CycleType::all(lambda.size())
        .iter()
        .map(|nu| {
            let a = mn_character(lambda, nu).unwrap();
            let b = mn_character(mu, nu).unwrap();
            Rational::new(BigInt::from(a * b), nu.z())
        })
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Orthogonality of the character table of `S_n`.
pub fn characters_orthonormal(n: usize) -> bool {
    let parts = partitions_of(n);
    parts.iter().all(|l| {
        parts.iter().all(|m| {
            let expected = if l == m { Rational::one() } else { Rational::zero() };
            character_inner_product(l, m) == expected
        })
    })
}

/// Coefficients of `∏_{j≥1} (1 - q^j)^{-1}` by multiplying geometric series.
pub fn partition_numbers(n: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = 1;
    for j in 1..=n {
        for k in j..=n {
            coeffs[k] += coeffs[k - j];
        }
    }
    coeffs
}

/// Cells `(row, col)` of `outer / inner`.
fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    (0..outer.len())
        .flat_map(|i| (inner.part(i)..outer.part(i)).map(move |j| (i, j)))
        .collect()
}

/// Ribbons of length `len` added to `lambda`, found by scanning every
/// partition of the right size: `(μ, rows spanned - 1)`.
pub fn ribbon_additions_brute(lambda: &Partition, len: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for mu in partitions_of(lambda.size() + len) {
        if !mu.contains(lambda) {
            continue;
        }
        let cells = skew_cells(&mu, lambda);
        let has = |i: usize, j: usize| cells.contains(&(i, j));
        let square = cells
            .iter()
            .any(|&(i, j)| has(i + 1, j) && has(i, j + 1) && has(i + 1, j + 1));
        if square {
            continue;
        }
        // connectivity by flood fill
        let mut seen = vec![cells[0]];
        let mut stack = vec![cells[0]];
        while let Some((i, j)) = stack.pop() {
            let mut nbrs = vec![(i + 1, j), (i, j + 1)];
            if i > 0 {
                nbrs.push((i - 1, j));
            }
            if j > 0 {
                nbrs.push((i, j - 1));
            }
            for c in nbrs {
                if has(c.0, c.1) && !seen.contains(&c) {
                    seen.push(c);
                    stack.push(c);
                }
            }
        }
        if seen.len() != cells.len() {
            continue;
        }
        let rows = cells.iter().map(|c| c.0).collect::<std::collections::BTreeSet<_>>().len();
        out.push((mu, rows - 1));
    }
    out
}

/// Parities of the number of vertical dominoes over every way of peeling
/// dominoes off `lambda` until none can be removed.
pub fn vertical_domino_parities(lambda: &Partition) -> std::collections::BTreeSet<usize> {
    fn go(
        parts: Vec<usize>,
        memo: &mut HashMap<Vec<usize>, std::collections::BTreeSet<usize>>,
    ) -> std::collections::BTreeSet<usize> {
        if let Some(hit) = memo.get(&parts) {
            return hit.clone();
        }
        let at = |i: usize| parts.get(i).copied().unwrap_or(0);
        let mut out = std::collections::BTreeSet::new();
        for i in 0..parts.len() {
            // horizontal: last two cells of row i
            if at(i) >= at(i + 1) + 2 {
                let mut next = parts.clone();
                next[i] -= 2;
                next.retain(|&x| x > 0);
                out.extend(go(next, memo));
            }
            // vertical: last cells of rows i and i+1 in the same column
            if at(i + 1) == at(i) && at(i) > at(i + 2) {
                let mut next = parts.clone();
                next[i] -= 1;
                next[i + 1] -= 1;
                next.retain(|&x| x > 0);
                out.extend(go(next, memo).into_iter().map(|p| 1 - p));
            }
        }
        if out.is_empty() {
            out.insert(0);
        }
        memo.insert(parts, out.clone());
        out
    }
    go(lambda.parts().to_vec(), &mut HashMap::new())
}

/// Hook lengths of every cell.
pub fn hook_lengths(lambda: &Partition) -> Vec<usize> {
    let conj = lambda.conjugate();
    (0..lambda.len())
        .flat_map(|i| {
            let conj = conj.clone();
            (0..lambda.part(i)).map(move |j| (lambda.part(i) - j) + (conj.part(j) - i) - 1)
        })
        .collect()
}

/// Number of `slots`-tuples of partitions of total size `n`.
pub fn multipartition_count(slots: usize, n: usize) -> u64 {
    let p = partition_numbers(n);
    let mut acc = vec![0u64; n + 1];
    acc[0] = 1;
    for _ in 0..slots {
        let mut next = vec![0u64; n + 1];
        for a in 0..=n {
            for b in 0..=n - a {
                next[a + b] += acc[a] * p[b];
            }
        }
        acc = next;
    }
    acc[n]
}

/// Partitions of `n` into parts not divisible by `r`, by direct filtering.
pub fn restricted_count(n: usize, r: usize) -> usize {
    partitions_of(n)
        .iter()
        .filter(|p| p.parts().iter().all(|&x| x % r != 0))
        .count()
}
