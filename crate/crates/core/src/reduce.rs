//! Expansion of r-reduced Schur functions in the basic set.
//!
//! For any λ with r-core `c` and r-quotient `(λ[0], ..., λ[r-1])`,
//!
//! ```text
//! S^(r)_λ = (-1)^{|λ[0]|} δ_r(λ) Σ_{μ, ν_1..ν_{r-1}}
//!           LR^{λ[0]'}_{ν_1⋯ν_{r-1}} ∏_{k≥1} LR^{μ[k]}_{ν_k λ[k]} δ_r(μ) S^(r)_μ
//! ```
//!
//! where μ runs over partitions with core `c`, `|μ| = |λ|` and `μ[0] = ∅`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{check_modulus, Error};
use crate::linalg::rank;
use crate::lr::{lr_multi, schur_product_expand};
use crate::maya::{compose, r_decompose, r_sign};
use crate::partition::{partitions_of, restricted_partitions_of, Partition};
use crate::polyring::{Monomial, Scalar, TPolynomial};
use crate::schur::{reduced_schur, CycleType};
use crate::series::restricted_partition_series;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTerm {
    pub mu: Partition,
    pub coeff: i64,
}

/// `S^(r)_λ` written as an integer combination of basic-set functions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub r: usize,
    #[serde(rename = "lambda")]
    pub source: Partition,
    pub terms: Vec<DecompositionTerm>,
}

impl Decomposition {
    /// `Σ coeff·S^(r)_μ`.
    pub fn evaluate<C: Scalar>(&self) -> Result<TPolynomial<C>, Error> {
        let mut sum = TPolynomial::zero();
        for term in &self.terms {
            let c = C::from_i64(term.coeff).expect("coefficient fits");
            sum.add_scaled(&reduced_schur::<C>(&term.mu, self.r)?, &c);
        }
        Ok(sum)
    }
}

/// Partitions of `n` whose 0-th r-quotient component is empty, in
/// reverse-lexicographic order.
pub fn basic_set(r: usize, n: usize) -> Result<Vec<Partition>, Error> {
    check_modulus(r)?;
    let mut out = Vec::new();
    for lambda in partitions_of(n) {
        if r_decompose(&lambda, r)?.quotient[0].is_empty() {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// Every tuple of partitions with the given sizes.
fn partition_tuples(sizes: &[usize]) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        let choices = partitions_of(s);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut next = prefix.clone();
                    next.push(c.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Weak compositions of `total` into `slots` parts.
fn compositions(total: usize, slots: usize) -> Vec<Vec<usize>> {
    if slots == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, slots - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// The basic-set expansion of `S^(r)_λ`. Terms are sorted by μ in
/// reverse-lexicographic order; zero coefficients are dropped.
pub fn decompose(lambda: &Partition, r: usize) -> Result<Decomposition, Error> {
    let cq = r_decompose(lambda, r)?;
    if cq.quotient[0].is_empty() {
        return Ok(Decomposition {
            r,
            source: lambda.clone(),
            terms: vec![DecompositionTerm { mu: lambda.clone(), coeff: 1 }],
        });
    }
    let zeroth = &cq.quotient[0];
    let zeroth_conjugate = zeroth.conjugate();
    let others = &cq.quotient[1..];

    // Σ over ν-tuples of the LR products, keyed by (μ[1], ..., μ[r-1])
    let mut sums: BTreeMap<Vec<Partition>, i64> = BTreeMap::new();
    for sizes in compositions(zeroth.size(), r - 1) {
        for nus in partition_tuples(&sizes) {
            let multi = lr_multi(&zeroth_conjugate, &nus) as i64;
            if multi == 0 {
                continue;
            }
            let mut partial: Vec<(Vec<Partition>, i64)> = vec![(Vec::new(), multi)];
            for (nu, fixed) in nus.iter().zip(others) {
                let expansion = schur_product_expand(nu, fixed);
                partial = partial
                    .into_iter()
                    .flat_map(|(prefix, c)| {
                        expansion.iter().map(move |(slot, d)| {
                            let mut next = prefix.clone();
                            next.push(slot.clone());
                            (next, c * *d as i64)
                        })
                    })
                    .collect();
            }
            for (slots, c) in partial {
                *sums.entry(slots).or_insert(0) += c;
            }
        }
    }

    let prefactor = if zeroth.size() % 2 == 0 { 1 } else { -1 } * i64::from(cq.sign);
    let mut terms = Vec::new();
    for (slots, sum) in sums {
        if sum == 0 {
            continue;
        }
        let mut quotient = vec![Partition::empty()];
        quotient.extend(slots);
        let mu = compose(r, &cq.core, &quotient)?;
        debug_assert_eq!(mu.size(), lambda.size());
        let coeff = prefactor * i64::from(r_sign(&mu, r)?) * sum;
        terms.push(DecompositionTerm { mu, coeff });
    }
    terms.sort_by(|a, b| b.mu.cmp(&a.mu));
    Ok(Decomposition { r, source: lambda.clone(), terms })
}

/// Outcome of checking one instance of the expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct Verification<C: Scalar> {
    pub lambda: Partition,
    pub r: usize,
    pub holds: bool,
    /// `S^(r)_λ - Σ coeff·S^(r)_μ`; zero exactly when the identity holds.
    pub witness: TPolynomial<C>,
}

/// Compares `S^(r)_λ` with the evaluated decomposition as full polynomials.
pub fn verify_theorem<C: Scalar>(lambda: &Partition, r: usize) -> Result<Verification<C>, Error> {
    let lhs = reduced_schur::<C>(lambda, r)?;
    let rhs = decompose(lambda, r)?.evaluate::<C>()?;
    let witness = &lhs - &rhs;
    Ok(Verification {
        lambda: lambda.clone(),
        r,
        holds: witness.is_zero(),
        witness,
    })
}

/// One row of [`counting_table`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    /// `|basic_set(r, n)|`
    pub basic: usize,
    /// `[q^n] φ(q^r)/φ(q)`
    pub series: i64,
    /// partitions of n into parts not divisible by r
    pub restricted: usize,
}

impl CountRow {
    pub fn agrees(&self) -> bool {
        self.basic as i64 == self.series && self.series == self.restricted as i64
    }
}

pub fn counting_table(r: usize, max_n: usize) -> Result<Vec<CountRow>, Error> {
    check_modulus(r)?;
    let series = restricted_partition_series(r, max_n);
    (0..=max_n)
        .map(|n| {
            Ok(CountRow {
                n,
                basic: basic_set(r, n)?.len(),
                series: series[n],
                restricted: restricted_partitions_of(n, |j| j % r != 0).len(),
            })
        })
        .collect()
}

/// For every `n ≤ max_n`, the basic set, the series coefficient and the
/// restricted partition count agree.
pub fn counting_check(r: usize, max_n: usize) -> Result<bool, Error> {
    Ok(counting_table(r, max_n)?.iter().all(CountRow::agrees))
}

/// Rank of the degree-`n` basic-set functions in the monomial basis of the
/// degree-`n` component of `P^(r)`, together with that component's dimension.
pub fn basis_rank<C: Scalar>(r: usize, n: usize) -> Result<(usize, usize), Error> {
    let columns: Vec<Monomial> = restricted_partitions_of(n, |j| j % r != 0)
        .iter()
        .map(|p| CycleType::from_partition(p).monomial())
        .collect();
    let mut rows = Vec::new();
    for mu in basic_set(r, n)? {
        let poly = reduced_schur::<C>(&mu, r)?;
        debug_assert!(poly.terms().all(|(m, _)| columns.contains(m)));
        rows.push(columns.iter().map(|m| poly.coefficient(m)).collect());
    }
    Ok((rank(rows), columns.len()))
}

/// The basic set of degree `n` is a basis of the degree-`n` component.
pub fn basis_rank_check<C: Scalar>(r: usize, n: usize) -> Result<bool, Error> {
    let (rank, dim) = basis_rank::<C>(r, n)?;
    Ok(rank == dim && basic_set(r, n)?.len() == dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::{Poly, Rational};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn basic_set_examples() {
        assert_eq!(basic_set(2, 0).unwrap(), vec![p(&[])]);
        assert_eq!(basic_set(2, 2).unwrap(), vec![p(&[2])]);
        assert_eq!(basic_set(2, 5).unwrap().len(), 3);
        assert!(basic_set(1, 2).is_err());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&p(&[]), 3).unwrap();
        assert_eq!(d.terms, vec![DecompositionTerm { mu: p(&[]), coeff: 1 }]);
        let d = decompose(&p(&[1, 1]), 2).unwrap();
        assert_eq!(d.terms, vec![DecompositionTerm { mu: p(&[2]), coeff: 1 }]);
        let d = decompose(&p(&[2]), 2).unwrap();
        assert_eq!(d.terms, vec![DecompositionTerm { mu: p(&[2]), coeff: 1 }]);
        assert!(verify_theorem::<Rational>(&p(&[1, 1, 1, 1]), 2).unwrap().holds);
    }

    #[test]
    fn json_form() {
        let d = decompose(&p(&[1, 1]), 2).unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"r":2,"lambda":[1,1],"terms":[{"mu":[2],"coeff":1}]}"#
        );
    }

    #[test]
    fn terms_respect_blocks() {
        for l in partitions_up_to(7) {
            for r in 2..=4 {
                let core = r_decompose(&l, r).unwrap().core;
                for term in decompose(&l, r).unwrap().terms {
                    let cq = r_decompose(&term.mu, r).unwrap();
                    assert_eq!(term.mu.size(), l.size());
                    assert_eq!(cq.core, core);
                    assert!(cq.quotient[0].is_empty());
                    assert_ne!(term.coeff, 0);
                }
            }
        }
    }

    #[test]
    fn basic_set_is_fixed() {
        for r in 2..=4 {
            for n in 0..=7 {
                for mu in basic_set(r, n).unwrap() {
                    let d = decompose(&mu, r).unwrap();
                    assert_eq!(d.terms, vec![DecompositionTerm { mu: mu.clone(), coeff: 1 }]);
                }
            }
        }
    }

    #[test]
    fn collisions_share_decompositions() {
        for r in 2..=3 {
            let all = partitions_up_to(6);
            let polys: Vec<Poly> = all.iter().map(|l| reduced_schur(l, r).unwrap()).collect();
            for i in 0..all.len() {
                for j in 0..all.len() {
                    if i == j || all[i].size() != all[j].size() || polys[i].is_zero() {
                        continue;
                    }
                    let sign = if polys[i] == polys[j] {
                        1
                    } else if polys[i] == -&polys[j] {
                        -1
                    } else {
                        continue;
                    };
                    let a = decompose(&all[i], r).unwrap().terms;
                    let b = decompose(&all[j], r).unwrap().terms;
                    assert_eq!(a.len(), b.len());
                    for (x, y) in a.iter().zip(&b) {
                        assert_eq!(x.mu, y.mu);
                        assert_eq!(x.coeff, sign * y.coeff);
                    }
                }
            }
        }
    }

    #[test]
    fn counting_examples() {
        let rows = counting_table(2, 5).unwrap();
        assert_eq!(rows.iter().map(|r| r.basic).collect::<Vec<_>>(), vec![1, 1, 1, 2, 2, 3]);
        let rows = counting_table(3, 4).unwrap();
        assert_eq!(rows.iter().map(|r| r.basic).collect::<Vec<_>>(), vec![1, 1, 2, 2, 4]);
        for r in 2..=5 {
            assert!(counting_check(r, 0).unwrap());
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(basis_rank::<Rational>(2, 0).unwrap(), (1, 1));
        assert_eq!(basis_rank::<Rational>(2, 4).unwrap(), (2, 2));
        assert_eq!(basis_rank::<Rational>(3, 3).unwrap(), (2, 2));
    }
}
