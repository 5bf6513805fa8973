//! Weight spaces of the basic module of type `A^(1)_{r-1}` realized in `P^(r)`.
//!
//! A weight `Λ(c) - nδ` is labelled by the r-core `c` and the depth `n`. Its
//! weight space has basis `S^(r)_λ` over the partitions λ with core `c`,
//! empty 0-th quotient component and quotient weight `n`.

use serde::Serialize;

use crate::error::{check_modulus, Error};
use crate::maya::{compose, r_decompose};
use crate::partition::{partitions_of, Partition};
use crate::linalg::span_rank;
use crate::modular::certify_independent;
use crate::polyring::Scalar;
use crate::schur::reduced_schur;
use crate::series::inverse_phi_power;

/// `Λ(core) - depth·δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightLabel {
    pub r: usize,
    pub core: Partition,
    pub depth: usize,
}

impl WeightLabel {
    pub fn new(r: usize, core: Partition, depth: usize) -> Result<Self, Error> {
        check_modulus(r)?;
        if !core.is_core(r) {
            return Err(Error::NotACore { core, r });
        }
        Ok(Self { r, core, depth })
    }

    /// Size of every partition in the weight basis.
    pub fn degree(&self) -> usize {
        self.core.size() + self.r * self.depth
    }
}

/// The weight of the basis vector `S^(r)_λ`; λ must lie in the basic set.
pub fn weight_of(lambda: &Partition, r: usize) -> Result<WeightLabel, Error> {
    let cq = r_decompose(lambda, r)?;
    if !cq.quotient[0].is_empty() {
        return Err(Error::NotBasic { lambda: lambda.clone(), r });
    }
    let depth = cq.weight();
    Ok(WeightLabel { r, core: cq.core, depth })
}

/// All `(r-1)`-tuples of partitions of total size `n`, ordered by the size
/// vector and then reverse-lexicographically slot by slot.
fn multipartitions(slots: usize, n: usize) -> Vec<Vec<Partition>> {
    if slots == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for head in partitions_of(first) {
            for mut rest in multipartitions(slots - 1, n - first) {
                rest.insert(0, head.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// Partitions λ with quotient `(∅, λ[1], ..., λ[r-1])` of weight `depth`
/// over the label's core.
pub fn weight_basis(w: &WeightLabel) -> Result<Vec<Partition>, Error> {
    WeightLabel::new(w.r, w.core.clone(), w.depth)?;
    multipartitions(w.r - 1, w.depth)
        .into_iter()
        .map(|slots| {
            let mut quotient = vec![Partition::empty()];
            quotient.extend(slots);
            compose(w.r, &w.core, &quotient)
        })
        .collect()
}

/// Coefficients of `1/φ(q)^{r-1}` up to `q^max_n`: the multiplicity of
/// `Λ(c) - nδ` for any core `c`.
pub fn multiplicity_series(r: usize, max_n: usize) -> Result<Vec<u64>, Error> {
    check_modulus(r)?;
    Ok(inverse_phi_power(r - 1, max_n).into_iter().map(|c| c as u64).collect())
}

/// Exact rank of the reduced Schur functions of the weight basis, and the
/// size of the basis. Practical only for small degrees.
pub fn weight_basis_rank<C: Scalar>(w: &WeightLabel) -> Result<(usize, usize), Error> {
    let basis = weight_basis(w)?;
    let polys = basis
        .iter()
        .map(|l| reduced_schur::<C>(l, w.r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((span_rank(&polys), basis.len()))
}

/// Certifies linear independence of the weight basis by evaluation mod a
/// prime; works at any degree.
pub fn weight_basis_independent(w: &WeightLabel) -> Result<bool, Error> {
    let basis = weight_basis(w)?;
    Ok(certify_independent(&basis, w.r, 0x5eed ^ (w.depth as u64)))
}

/// r-cores of size at most `max_size`, by size.
pub fn cores_up_to(r: usize, max_size: usize) -> Result<Vec<Partition>, Error> {
    check_modulus(r)?;
    Ok((0..=max_size).flat_map(|n| crate::maya::cores_of(r, n)).collect())
}
