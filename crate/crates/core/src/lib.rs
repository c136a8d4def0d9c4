//! Exact tolerants, duplicants, discriminants and generalized discriminants of
//! univariate polynomials over `Q`, `F_p` and `F_p(t)`.
//!
//! The core is generic over the coefficient [`Field`]; the aliases below name
//! the three concrete instantiations.

pub mod error;
pub mod factor;
pub mod field;
pub mod poly;
pub mod resultant;
pub mod tolerant;

pub mod cli;

#[cfg(test)]
mod properties;

pub use error::{Error, Result};
pub use factor::Factorization;
pub use field::{Field, FieldDescriptor, FieldElement, Fp, Modulus, RatFunc, Rational, Rationals};
pub use poly::Poly;

/// Polynomials over the rationals.
pub type QPoly = Poly<Rational>;
/// Polynomials over a prime field `F_p`.
pub type FpPoly = Poly<Fp>;
/// Polynomials over the rational function field `F_p(t)`.
pub type FptPoly = Poly<RatFunc>;
