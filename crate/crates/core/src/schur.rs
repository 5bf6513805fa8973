//! Schur functions in power-sum coordinates.
//!
//! `S_λ(t) = Σ_ν χ^λ(ν) ∏_j t_j^{ν_j} / ν_j!` with `p_j = j·t_j`, so that
//! `p_ν / z_ν = ∏_j t_j^{ν_j} / ν_j!`. Characters come from the
//! Murnaghan-Nakayama recursion.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{check_modulus, Error};
use crate::maya::MayaDiagram;
use crate::partition::{partitions_of, Partition};
use crate::polyring::{scalar, Monomial, Scalar, TPolynomial};

/// A conjugacy class of `S_n`: `ν_j` cycles of length `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    multiplicities: BTreeMap<usize, usize>,
}

impl CycleType {
    /// From a list of cycle lengths in any order.
    pub fn from_cycles(cycles: &[usize]) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &c in cycles {
            assert!(c >= 1, "cycle lengths are positive");
            *multiplicities.entry(c).or_insert(0) += 1;
        }
        Self { multiplicities }
    }

    pub fn from_partition(p: &Partition) -> Self {
        Self::from_cycles(p.parts())
    }

    /// Every cycle type of `S_n`.
    pub fn all(n: usize) -> Vec<CycleType> {
        partitions_of(n).iter().map(Self::from_partition).collect()
    }

    /// `ν_j`.
    pub fn multiplicity(&self, j: usize) -> usize {
        self.multiplicities.get(&j).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    /// `n = Σ j·ν_j`.
    pub fn size(&self) -> usize {
        self.multiplicities.iter().map(|(j, m)| j * m).sum()
    }

    /// Cycle lengths in decreasing order.
    pub fn cycles(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .rev()
            .flat_map(|(&j, &m)| std::iter::repeat(j).take(m))
            .collect()
    }

    /// `z_ν = ∏_j j^{ν_j} ν_j!`, the centralizer order.
    pub fn z(&self) -> BigInt {
        self.multiplicities
            .iter()
            .map(|(&j, &m)| BigInt::from(j).pow(m as u32) * factorial(m))
            .product()
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        let odd: usize = self
            .multiplicities
            .iter()
            .filter(|(&j, _)| j % 2 == 0)
            .map(|(_, &m)| m)
            .sum();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Whether no cycle length is divisible by `r`.
    pub fn is_regular(&self, r: usize) -> bool {
        self.multiplicities.keys().all(|j| j % r != 0)
    }

    /// `∏_j t_j^{ν_j}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_exponents(self.multiplicities.iter().map(|(&j, &m)| (j, m)))
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

type CharacterKey = (Partition, Vec<usize>);

fn character_memo() -> &'static Mutex<HashMap<CharacterKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<CharacterKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ^λ(ν)` by the Murnaghan-Nakayama rule.
pub fn mn_character(lambda: &Partition, nu: &CycleType) -> Result<i64, Error> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch { partition: lambda.size(), cycles: nu.size() });
    }
    Ok(character(lambda, &nu.cycles()))
}

/// `cycles` is sorted decreasingly and sums to `|λ|`.
fn character(lambda: &Partition, cycles: &[usize]) -> i64 {
    let Some((&first, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), cycles.to_vec());
    if let Some(&v) = character_memo().lock().unwrap().get(&key) {
        return v;
    }
    let value = lambda
        .border_strip_removals(first)
        .iter()
        .map(|strip| {
            let sign = if strip.height % 2 == 0 { 1 } else { -1 };
            sign * character(&strip.result, rest)
        })
        .sum();
    character_memo().lock().unwrap().insert(key, value);
    value
}

fn class_term<C: Scalar>(chi: i64, nu: &CycleType) -> (Monomial, C) {
    let denominator: i64 = nu
        .multiplicities()
        .values()
        .map(|&m| (1..=m as i64).product::<i64>())
        .product();
    (nu.monomial(), scalar::<C>(chi) / scalar::<C>(denominator))
}

/// `S_λ(t)`, homogeneous of degree `|λ|`.
pub fn schur_in_t<C: Scalar>(lambda: &Partition) -> TPolynomial<C> {
    TPolynomial::from_terms(CycleType::all(lambda.size()).iter().map(|nu| {
        class_term(character(lambda, &nu.cycles()), nu)
    }))
}

/// `S^(r)_λ(t)`: `S_λ(t)` with every `t_{jr}` set to zero.
///
/// Only r-regular classes contribute, so the others are never evaluated.
pub fn reduced_schur<C: Scalar>(lambda: &Partition, r: usize) -> Result<TPolynomial<C>, Error> {
    check_modulus(r)?;
    Ok(TPolynomial::from_terms(
        CycleType::all(lambda.size())
            .iter()
            .filter(|nu| nu.is_regular(r))
            .map(|nu| class_term(character(lambda, &nu.cycles()), nu)),
    ))
}

/// The nonzero terms of `S_α·p_j = Σ_i S_{α+jε_i}`: each added `j`-strip
/// with the sign of the rearrangement, which is `(-1)^height`.
pub fn schur_times_power_sum(lambda: &Partition, j: usize) -> Vec<(Partition, i8)> {
    assert!(j >= 1, "power sum index must be positive");
    let rows = lambda.len() + j;
    let alpha = MayaDiagram::new(
        lambda.beta_numbers(rows).into_iter().map(|b| b as i64).collect(),
        -1,
    );
    (0..rows)
        .filter_map(|i| {
            let (sorted, sign) = alpha.shifted(i, j as i64).sort_sign();
            (sign != 0).then(|| (sorted.to_partition().expect("sorted diagram"), sign))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::{Poly, Rational};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn half() -> Rational {
        Rational::new(1.into(), 2.into())
    }

    #[test]
    fn character_examples() {
        for n in 0..=6 {
            let row = Partition::from_unsorted(vec![n]);
            let column = Partition::from_unsorted(vec![1; n]);
            for nu in CycleType::all(n) {
                assert_eq!(mn_character(&row, &nu).unwrap(), 1);
                assert_eq!(mn_character(&column, &nu).unwrap(), nu.sign());
            }
        }
        assert_eq!(mn_character(&p(&[2, 1]), &CycleType::from_cycles(&[3])).unwrap(), -1);
        assert_eq!(
            mn_character(&p(&[2, 1]), &CycleType::from_cycles(&[1])),
            Err(Error::SizeMismatch { partition: 3, cycles: 1 })
        );
    }

    #[test]
    fn z_values() {
        assert_eq!(CycleType::from_cycles(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(CycleType::from_cycles(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(CycleType::from_cycles(&[]).z(), BigInt::from(1));
    }

    #[test]
    fn schur_examples() {
        let t1sq = Monomial::from_exponents([(1, 2)]);
        assert_eq!(schur_in_t::<Rational>(&p(&[])), Poly::one());
        assert_eq!(schur_in_t::<Rational>(&p(&[1])), Poly::var(1));
        let s2 = Poly::term(half(), t1sq.clone()) + Poly::var(2);
        let s11 = Poly::term(half(), t1sq.clone()) - Poly::var(2);
        assert_eq!(schur_in_t::<Rational>(&p(&[2])), s2);
        assert_eq!(schur_in_t::<Rational>(&p(&[1, 1])), s11);
    }

    #[test]
    fn reduced_examples() {
        let t1sq = Poly::term(half(), Monomial::from_exponents([(1, 2)]));
        assert_eq!(reduced_schur::<Rational>(&p(&[2]), 2).unwrap(), t1sq);
        assert_eq!(reduced_schur::<Rational>(&p(&[1, 1]), 2).unwrap(), t1sq);
        assert_eq!(
            reduced_schur::<Rational>(&p(&[2, 1]), 2).unwrap(),
            schur_in_t::<Rational>(&p(&[2, 1]))
        );
        assert!(reduced_schur::<Rational>(&p(&[1]), 1).is_err());
    }

    #[test]
    fn regular_class_shortcut_matches_reduction() {
        for l in partitions_up_to(7) {
            for r in 2..=4 {
                assert_eq!(
                    reduced_schur::<Rational>(&l, r).unwrap(),
                    schur_in_t::<Rational>(&l).reduce_r(r)
                );
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(schur_times_power_sum(&p(&[]), 1), vec![(p(&[1]), 1)]);
        assert_eq!(schur_times_power_sum(&p(&[]), 2), vec![(p(&[2]), 1), (p(&[1, 1]), -1)]);
        let mut got = schur_times_power_sum(&p(&[1]), 2);
        got.sort();
        let mut want = vec![(p(&[3]), 1), (p(&[1, 1, 1]), -1)];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn power_sum_terms_are_strip_additions() {
        for l in partitions_up_to(6) {
            for j in 1..=4 {
                let mut via_maya = schur_times_power_sum(&l, j);
                let mut via_strips: Vec<(Partition, i8)> = l
                    .border_strip_additions(j)
                    .into_iter()
                    .map(|s| (s.result, if s.height % 2 == 0 { 1 } else { -1 }))
                    .collect();
                via_maya.sort();
                via_strips.sort();
                assert_eq!(via_maya, via_strips);
            }
        }
    }

    #[test]
    fn fixed_width_scalar_agrees() {
        for l in partitions_up_to(6) {
            let big: Poly = schur_in_t(&l);
            let small: crate::Poly64 = schur_in_t(&l);
            let lifted: Vec<(Monomial, Rational)> = small
                .terms()
                .map(|(m, c)| (m.clone(), Rational::new((*c.numer()).into(), (*c.denom()).into())))
                .collect();
            assert_eq!(Poly::from_terms(lifted), big);
        }
    }
}
