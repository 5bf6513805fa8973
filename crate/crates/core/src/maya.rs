//! Generalized Maya diagrams and the abacus: r-core, r-quotient and r-sign.
//!
//! A partition λ with `N` beads sits on the abacus as the beta-set
//! `{λ_i + N - i}`; the negative entries `-1, -2, ...` are implicit. Beads
//! are sorted onto `r` runners by residue. The runner of residue `k`, read
//! with its beads divided by `r`, is the quotient component `λ[k]`; pushing
//! every bead down its runner leaves the core.
//!
//! `N` is always the least multiple of `r` that is at least the number of
//! parts. Changing `N` by a multiple of `r` adds one bead at the bottom of
//! every runner, which leaves the core, the quotient and the slot order
//! unchanged.

use serde::Serialize;

use crate::error::{check_modulus, Error};
use crate::partition::Partition;

/// A semi-infinite integer sequence that eventually decreases by one.
///
/// Stored as a finite head followed by the tail `tail_start, tail_start - 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MayaDiagram {
    head: Vec<i64>,
    tail_start: i64,
}

impl MayaDiagram {
    pub fn new(head: Vec<i64>, tail_start: i64) -> Self {
        Self { head, tail_start }
    }

    /// The strictly decreasing diagram of λ with `N` nonnegative entries,
    /// `N` the least multiple of `r` covering every part.
    pub fn from_partition(lambda: &Partition, r: usize) -> Result<Self, Error> {
        check_modulus(r)?;
        let beads = bead_count(lambda, r);
        Ok(Self {
            head: lambda.beta_numbers(beads).into_iter().map(|b| b as i64).collect(),
            tail_start: -1,
        })
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    pub fn tail_start(&self) -> i64 {
        self.tail_start
    }

    /// Entry `i` (0-based).
    pub fn entry(&self, i: usize) -> i64 {
        match self.head.get(i) {
            Some(&x) => x,
            None => self.tail_start - (i - self.head.len()) as i64,
        }
    }

    /// The first `n` entries.
    pub fn entries(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.entry(i)).collect()
    }

    /// `α + amount·ε_i` (0-based `i`).
    pub fn shifted(&self, i: usize, amount: i64) -> MayaDiagram {
        let mut head = self.entries(self.head.len().max(i + 1));
        head[i] += amount;
        let tail_start = self.entry(head.len());
        MayaDiagram { head, tail_start }
    }

    /// The strictly decreasing rearrangement and the sign of the sorting
    /// permutation; sign 0 when two entries coincide, in which case the
    /// returned diagram is `self` unchanged.
    pub fn sort_sign(&self) -> (MayaDiagram, i8) {
        if self.head.iter().any(|&x| x <= self.tail_start) {
            return (self.clone(), 0);
        }
        let mut sorted = self.head.clone();
        let sign = sort_descending_with_sign(&mut sorted);
        if sign == 0 {
            return (self.clone(), 0);
        }
        (MayaDiagram { head: sorted, tail_start: self.tail_start }, sign)
    }

    /// λ(α) for a strictly decreasing diagram; `None` otherwise.
    pub fn to_partition(&self) -> Option<Partition> {
        let strictly_decreasing = self.head.windows(2).all(|w| w[0] > w[1])
            && self.head.last().map_or(true, |&x| x > self.tail_start);
        if !strictly_decreasing {
            return None;
        }
        let m = self.head.len() as i64;
        let parts = self
            .head
            .iter()
            .enumerate()
            .map(|(j, &h)| (h - self.tail_start - 1 - (m - 1 - j as i64)) as usize)
            .collect();
        Some(Partition::from_unsorted(parts))
    }
}

/// Sorts into strictly decreasing order, returning the permutation sign,
/// or 0 if there is a repeated entry.
fn sort_descending_with_sign(values: &mut [i64]) -> i8 {
    let mut sign = 1i8;
    // insertion sort; one flip per adjacent swap
    for i in 1..values.len() {
        let mut j = i;
        while j > 0 && values[j - 1] <= values[j] {
            if values[j - 1] == values[j] {
                return 0;
            }
            values.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

/// The least multiple of `r` that is at least the number of parts.
pub fn bead_count(lambda: &Partition, r: usize) -> usize {
    lambda.len().div_ceil(r) * r
}

/// The r-core, r-quotient and r-sign of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoreQuotient {
    pub r: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub sign: i8,
}

impl CoreQuotient {
    /// Total size of the quotient, `Σ_k |λ[k]|`.
    pub fn weight(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }

    /// `|core| + r·weight`, the size of the partition this decomposes.
    pub fn size(&self) -> usize {
        self.core.size() + self.r * self.weight()
    }
}

/// Splits descending beads onto runners by residue; each runner descending.
fn runners(beads: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); r];
    for &b in beads {
        out[b % r].push(b);
    }
    out
}

/// Sign of the permutation taking the level-by-level interleaving of the
/// runners to the decreasing bead sequence. Within a level runners are read
/// from residue `r - 1` down to `0`, so that the empty partition has sign +1
/// for every bead count; the result is then independent of the bead count.
fn interleaving_sign(runner_beads: &[Vec<usize>]) -> i8 {
    let depth = runner_beads.iter().map(Vec::len).max().unwrap_or(0);
    let mut sequence = Vec::new();
    for level in 0..depth {
        for runner in runner_beads.iter().rev() {
            if let Some(&b) = runner.get(level) {
                sequence.push(b);
            }
        }
    }
    let mut inversions = 0usize;
    for i in 0..sequence.len() {
        for j in i + 1..sequence.len() {
            if sequence[i] < sequence[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The abacus decomposition of λ into core, quotient and r-sign.
pub fn r_decompose(lambda: &Partition, r: usize) -> Result<CoreQuotient, Error> {
    check_modulus(r)?;
    let beads = lambda.beta_numbers(bead_count(lambda, r));
    let runner_beads = runners(&beads, r);
    let sign = interleaving_sign(&runner_beads);

    let quotient = runner_beads
        .iter()
        .map(|runner| Partition::from_beta_numbers(&runner.iter().map(|b| b / r).collect::<Vec<_>>()))
        .collect();
    let packed: Vec<usize> = runner_beads
        .iter()
        .enumerate()
        .flat_map(|(k, runner)| (0..runner.len()).map(move |level| k + r * level))
        .collect();
    Ok(CoreQuotient {
        r,
        core: Partition::from_beta_numbers(&packed),
        quotient,
        sign,
    })
}

/// δ_r(λ).
pub fn r_sign(lambda: &Partition, r: usize) -> Result<i8, Error> {
    r_decompose(lambda, r).map(|cq| cq.sign)
}

/// Rebuilds λ from its core and quotient. The sign field is ignored.
pub fn r_compose(cq: &CoreQuotient) -> Result<Partition, Error> {
    compose(cq.r, &cq.core, &cq.quotient)
}

/// The unique partition with the given r-core and r-quotient.
pub fn compose(r: usize, core: &Partition, quotient: &[Partition]) -> Result<Partition, Error> {
    check_modulus(r)?;
    if quotient.len() != r {
        return Err(Error::QuotientArity { got: quotient.len(), r });
    }
    if !core.is_core(r) {
        return Err(Error::NotACore { core: core.clone(), r });
    }
    let mut n = bead_count(core, r);
    loop {
        let counts = bead_counts_per_runner(core, r, n);
        if quotient.iter().zip(&counts).all(|(q, &c)| q.len() <= c) {
            let beads: Vec<usize> = quotient
                .iter()
                .zip(&counts)
                .enumerate()
                .flat_map(|(k, (q, &c))| q.beta_numbers(c).into_iter().map(move |b| k + r * b))
                .collect();
            return Ok(Partition::from_beta_numbers(&beads));
        }
        n += r;
    }
}

/// Beads on each runner when `core` is placed with `n` beads.
fn bead_counts_per_runner(core: &Partition, r: usize, n: usize) -> Vec<usize> {
    let mut counts = vec![0; r];
    for b in core.beta_numbers(n) {
        counts[b % r] += 1;
    }
    counts
}

/// `(-1)^q`, `q` the number of vertical dominoes removed on the way to the
/// 2-core. Each step removes the domino whose lowest cell is in the
/// lowest possible row.
pub fn delta2_column_hooks(lambda: &Partition) -> i8 {
    let mut current = lambda.clone();
    let mut sign = 1i8;
    loop {
        let choice = current
            .border_strip_removals(2)
            .into_iter()
            .max_by_key(|removal| lowest_removed_row(&current, &removal.result));
        match choice {
            None => return sign,
            Some(removal) => {
                if removal.height == 1 {
                    sign = -sign;
                }
                current = removal.result;
            }
        }
    }
}

fn lowest_removed_row(outer: &Partition, inner: &Partition) -> usize {
    (0..outer.len())
        .rev()
        .find(|&i| outer.part(i) > inner.part(i))
        .expect("strip removes at least one cell")
}

/// All r-cores of size exactly `n`.
pub fn cores_of(r: usize, n: usize) -> Vec<Partition> {
    crate::partition::partitions_of(n)
        .into_iter()
        .filter(|p| p.is_core(r))
        .collect()
}
