//! Exact factorization invariants for finitely generated commutative
//! cancellative monoids.
//!
//! The crate computes length sets, delta sets, elasticity, length density,
//! Betti elements, catenary and tame degrees, and asymptotic length-density
//! behavior, over several monoid presentations: numerical semigroups, affine
//! semigroups, finitely presented graded monoids, finitely generated Puiseux
//! monoids, block monoids over finite abelian groups, and finite direct sums
//! of any of these.
//!
//! All arithmetic is exact. Invariant values that are not integers are
//! arbitrary-precision rationals; nothing is ever rounded through a float.

pub mod block;
pub mod cli;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod invariants;
pub mod monoid;
pub mod parse;
pub mod report;
pub mod scan;

/// Exact rational scalar used for every non-integer invariant value.
pub type Rational = num_rational::BigRational;

pub use error::Error;
pub use monoid::{Element, MonoidPresentation};

/// Shorthand for fallible operations across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Builds a `Rational` from machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Builds a `Rational` from a nonnegative integer.
pub fn ratio_int(n: u64) -> Rational {
    Rational::from_integer(n.into())
}
