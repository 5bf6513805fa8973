//! Partitions (Young diagrams), conjugation, and border strips.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the empty diagram. Values are immutable; every
/// operation returns a new partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// The outcome of removing one border strip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStripRemoval {
    pub result: Partition,
    /// Rows spanned by the strip, minus one.
    pub height: usize,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing
    /// or that contain a zero part.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from any sequence of non-negative integers:
    /// zeros are dropped and the rest sorted into decreasing order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), or 0 past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the diagram of `other` fits inside this one cellwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.parts[i] >= other.parts[i])
    }

    /// The transposed diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Beta numbers `λ_i + n - i` (1-based `i`) for `n ≥ len()` beads,
    /// in strictly decreasing order.
    pub fn beta_numbers(&self, beads: usize) -> Vec<usize> {
        assert!(beads >= self.len(), "need at least one bead per row");
        (0..beads).map(|i| self.part(i) + beads - 1 - i).collect()
    }

    /// Inverse of [`Partition::beta_numbers`] for any set of distinct
    /// non-negative beads.
    pub fn from_beta_numbers(beads: &[usize]) -> Partition {
        let mut sorted = beads.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(sorted.windows(2).all(|w| w[0] > w[1]), "repeated bead");
        let n = sorted.len();
        Partition::from_unsorted(
            sorted
                .iter()
                .enumerate()
                .map(|(i, &b)| b + i + 1 - n)
                .collect(),
        )
    }

    /// Every way to remove a connected border strip of `len` cells.
    ///
    /// Works on the abacus: a strip removal slides one bead down by `len`
    /// into an empty position; the height is the number of beads jumped.
    /// Results are ordered by the row of the strip's top cell.
    pub fn border_strip_removals(&self, len: usize) -> Vec<BorderStripRemoval> {
        assert!(len >= 1, "strip length must be positive");
        let beads = self.beta_numbers(self.len());
        let mut out = Vec::new();
        for (i, &b) in beads.iter().enumerate() {
            if b < len {
                continue;
            }
            let target = b - len;
            if beads.contains(&target) {
                continue;
            }
            let height = beads.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beads.clone();
            moved[i] = target;
            out.push(BorderStripRemoval {
                result: Partition::from_beta_numbers(&moved),
                height,
            });
        }
        out
    }

    /// Every way to add a border strip of `len` cells, with its height.
    pub fn border_strip_additions(&self, len: usize) -> Vec<BorderStripRemoval> {
        assert!(len >= 1, "strip length must be positive");
        let beads = self.beta_numbers(self.len() + len);
        let mut out = Vec::new();
        for (i, &b) in beads.iter().enumerate() {
            let target = b + len;
            if beads.contains(&target) {
                continue;
            }
            let height = beads.iter().filter(|&&x| x > b && x < target).count();
            let mut moved = beads.clone();
            moved[i] = target;
            out.push(BorderStripRemoval {
                result: Partition::from_beta_numbers(&moved),
                height,
            });
        }
        out
    }

    /// Whether no border strip of length `r` can be removed.
    pub fn is_core(&self, r: usize) -> bool {
        self.border_strip_removals(r).is_empty()
    }
}

/// All partitions of `n`, each once, in reverse-lexicographic order:
/// `(n), (n-1, 1), ..., (1^n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(rest: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

/// Partitions of `n` whose parts are all admissible under `allowed`.
pub fn restricted_partitions_of(n: usize, allowed: impl Fn(usize) -> bool) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.parts.iter().all(|&x| allowed(x)))
        .collect()
}

/// All partitions of size at most `n`, by size and then reverse-lexicographically.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
