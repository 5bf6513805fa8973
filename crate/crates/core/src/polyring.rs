//! Sparse polynomials in `t_1, t_2, ...` graded by `deg t_j = j`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

/// A coefficient field. Exact types (`Ratio<i64>`, `BigRational`) are the
/// intended instances; all identities in this crate are checked by equality.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

/// Embeds an integer into the scalar type.
pub fn scalar<C: Scalar>(n: i64) -> C {
    C::from_i64(n).expect("integer fits in scalar type")
}

/// `∏_j t_j^{e_j}`, stored as `(j, e_j)` pairs with ascending `j` and `e_j > 0`.
///
/// Ordered by weighted degree, then by the dense exponent vector
/// `(e_1, e_2, ...)` with larger exponents first, so degree 2 lists
/// `t_1^2` before `t_2`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: Vec<(usize, usize)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(j: usize) -> Self {
        Self::from_exponents([(j, 1)])
    }

    /// Collects `(variable, exponent)` pairs; zero exponents are dropped and
    /// repeated variables accumulate.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (j, e) in pairs {
            assert!(j >= 1, "variables are t_1, t_2, ...");
            *map.entry(j).or_insert(0) += e;
        }
        Self {
            exponents: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn exponents(&self) -> &[(usize, usize)] {
        &self.exponents
    }

    pub fn exponent(&self, j: usize) -> usize {
        self.exponents
            .iter()
            .find(|&&(v, _)| v == j)
            .map_or(0, |&(_, e)| e)
    }

    /// `Σ_j j·e_j`.
    pub fn degree(&self) -> usize {
        self.exponents.iter().map(|&(j, e)| j * e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exponents.iter().chain(&other.exponents).copied())
    }

    /// Whether some `t_j` with `r | j` occurs.
    pub fn involves_multiple_of(&self, r: usize) -> bool {
        self.exponents.iter().any(|&(j, _)| j % r == 0)
    }

    /// Sign of `t_j ↦ (-1)^{j-1} t_j`.
    fn omega_sign(&self) -> i64 {
        let flips: usize = self
            .exponents
            .iter()
            .filter(|&&(j, _)| j % 2 == 0)
            .map(|&(_, e)| e)
            .sum();
        if flips % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let top = self
                .exponents
                .last()
                .map_or(0, |e| e.0)
                .max(other.exponents.last().map_or(0, |e| e.0));
            for j in 1..=top {
                match other.exponent(j).cmp(&self.exponent(j)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &(j, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "t{j}")?;
            } else {
                write!(f, "t{j}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

/// A finitely supported polynomial in `t_1, t_2, ...` with no stored zero
/// coefficients.
#[derive(Clone, PartialEq)]
pub struct TPolynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> TPolynomial<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(j: usize) -> Self {
        Self::term(C::one(), Monomial::var(j))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// Adds `c·other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.clone() * c.clone());
        }
    }

    /// Sets every `t_{jr}` to zero.
    pub fn reduce_r(&self, r: usize) -> Self {
        assert!(r >= 1, "modulus must be positive");
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.involves_multiple_of(r))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The substitution `t_j ↦ (-1)^{j-1} t_j`.
    pub fn omega(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.omega_sign() < 0 { -c.clone() } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// The terms of weighted degree exactly `n`.
    pub fn graded_component(&self, n: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest weighted degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Whether every term has weighted degree `n` (vacuously true for 0).
    pub fn is_homogeneous_of_degree(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == n)
    }
}

impl<C: Scalar> Default for TPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Add for &TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn add(self, rhs: &TPolynomial<C>) -> TPolynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> Add for TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn add(self, rhs: TPolynomial<C>) -> TPolynomial<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Neg for &TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn neg(self) -> TPolynomial<C> {
        TPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Scalar> Neg for TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn neg(self) -> TPolynomial<C> {
        -&self
    }
}

impl<C: Scalar> Sub for &TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn sub(self, rhs: &TPolynomial<C>) -> TPolynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn sub(self, rhs: TPolynomial<C>) -> TPolynomial<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for &TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn mul(self, rhs: &TPolynomial<C>) -> TPolynomial<C> {
        let mut out = TPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Mul for TPolynomial<C> {
    type Output = TPolynomial<C>;

    fn mul(self, rhs: TPolynomial<C>) -> TPolynomial<C> {
        &self * &rhs
    }
}

impl<C: Scalar + Display> Display for TPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> Debug for TPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

struct MonomialJson<'a>(&'a Monomial);

impl Serialize for MonomialJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.exponents.len()))?;
        for &(j, e) in &self.0.exponents {
            map.serialize_entry(&j.to_string(), &e)?;
        }
        map.end()
    }
}

struct TermJson<'a, T>(&'a Monomial, &'a Ratio<T>);

impl<T: Clone + Integer + Display> Serialize for TermJson<'_, T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Term", 2)?;
        s.serialize_field("coeff", &format!("{}/{}", self.1.numer(), self.1.denom()))?;
        s.serialize_field("monomial", &MonomialJson(self.0))?;
        s.end()
    }
}

/// A list of `{"coeff": "num/den", "monomial": {"j": e_j, ...}}` in canonical
/// term order; denominators are always written.
impl<T> Serialize for TPolynomial<Ratio<T>>
where
    T: Clone + Integer + Display,
    Ratio<T>: Scalar,
{
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermJson(m, c))?;
        }
        seq.end()
    }
}
