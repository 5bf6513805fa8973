//! Exact computations with r-reduced Schur functions.
//!
//! Schur functions are written as polynomials in the power-sum coordinates
//! `t_j = p_j / j`. Setting every `t_{jr}` to zero gives the r-reduced Schur
//! function. Every reduced Schur function expands in the basic set (partitions
//! whose 0-th r-quotient component is empty) with coefficients built from
//! Littlewood-Richardson numbers and r-signs; [`reduce::decompose`] computes
//! that expansion and [`reduce::verify_theorem`] checks it as an exact
//! polynomial identity.
//!
//! The polynomial layer is generic over the coefficient field (any
//! `num_traits` field such as `Ratio<i64>` or `BigRational`); the aliases
//! below fix arbitrary-precision rationals.

pub mod affine;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod lr;
pub mod maya;
pub mod modular;
pub mod partition;
pub mod polyring;
pub mod reduce;
pub mod schur;
pub mod series;

pub use error::Error;
pub use partition::Partition;

/// Arbitrary-precision rational, the default coefficient field.
pub type Rational = num_rational::BigRational;
/// Fixed-width rational; adequate for small degrees.
pub type Rational64 = num_rational::Rational64;
/// Polynomial in `t_1, t_2, ...` over [`Rational`].
pub type Poly = polyring::TPolynomial<Rational>;
/// Polynomial in `t_1, t_2, ...` over [`Rational64`].
pub type Poly64 = polyring::TPolynomial<Rational64>;
