//! Exact integer-sequence engine.
//!
//! Everything here computes with exact arithmetic: unbounded integers
//! ([`Int`]), reduced rationals ([`Rat`]), truncated integer power series,
//! and homogeneous bivariate polynomials. The crate provides
//!
//! - elementary number theory (sieve, factorization, divisor functions),
//! - self-referential sequence generators (Golomb, Recaman, nested
//!   recurrences, primeth chains),
//! - the run-length engine for Levine's rows,
//! - the Wythoff array with four independent constructions,
//! - the boustrophedon transform and its eigen-sequences,
//! - extremal weight enumerators and extremal theta series,
//! - exhaustive enumerators for pancake diameters, reduced Latin squares,
//!   monotone Boolean functions, maximal {0,1} determinants, meanders and
//!   stamp foldings,
//! - Tchoukaillon solitaire analysis,
//! - a small file-backed sequence database with transform-chain lookup.
//!
//! The [`db::registry`] wires the generators to their catalog ids and is the
//! backing store for the `seqlab` command-line tool.

pub mod bignum;
pub mod boustrophedon;
pub mod checks;
pub mod db;
pub mod enumerate;
pub mod extremal;
pub mod levine;
pub mod recurrence;
pub mod seq;
pub mod series;
pub mod tchoukaillon;
pub mod wythoff;

mod error;

pub use error::{Error, Result};

/// Unbounded signed integer used for all sequence terms.
pub type Int = num_bigint::BigInt;

/// Exact rational number, always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// Truncated power series in q² with integer coefficients.
pub type QSeriesInt = series::QSeries<Int>;

/// Truncated power series in q² with rational coefficients.
pub type QSeriesRat = series::QSeries<Rat>;

/// Homogeneous bivariate polynomial with integer coefficients.
pub type PolyInt = series::BivariatePoly<Int>;

/// Homogeneous bivariate polynomial with rational coefficients.
pub type PolyRat = series::BivariatePoly<Rat>;
