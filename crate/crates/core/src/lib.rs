//! Exact face enumeration for edgewise subdivisions of simplices.
//!
//! The crate builds the `r`-fold edgewise subdivision of a simplex (and of
//! arbitrary simplicial complexes with ordered vertices), computes f-vectors,
//! h-polynomials and local h-polynomials, and reaches the local h-polynomial
//! of `esd_r(2^V)` by several independent routes:
//!
//! - inclusion-exclusion over the restrictions of the triangulation
//!   ([`TriangulatedSimplex::local_h`]),
//! - the coefficient-extraction operator `E_r` applied to
//!   `(x + x^2 + ... + x^{r-1})^n` ([`smirnov::local_h_via_operator`]),
//! - ascent counting over Smirnov words anchored at zero
//!   ([`smirnov::local_h_via_words`]),
//! - the gamma-expansion obtained by valley hopping
//!   ([`smirnov::xi_coefficients`]).
//!
//! All arithmetic is exact. Polynomials are generic over the coefficient
//! ring; the aliases below fix the concrete types used throughout.

pub mod check;
pub mod complex;
pub mod edgewise;
mod error;
pub mod poly;
pub mod smirnov;
pub mod triangulation;

pub use complex::{FVector, Face, SimplicialComplex, Vertex};
pub use edgewise::LatticeVertex;
pub use error::{Error, Result};
pub use poly::{GammaVector, Polynomial, RootCount, Scalar, TruncatedSeries};
pub use smirnov::{HopClass, SmirnovWord, WordStats};
pub use triangulation::TriangulatedSimplex;

/// Arbitrary-precision integer coefficients.
pub type Int = num_bigint::BigInt;
/// Exact rationals, used for evaluation and root counting.
pub type Rational = num_rational::BigRational;

pub type IntPolynomial = Polynomial<Int>;
pub type RatPolynomial = Polynomial<Rational>;
pub type IntGammaVector = GammaVector<Int>;
pub type IntSeries = TruncatedSeries<Int>;
