//! Exact Hankel determinants of moment sequences of orthogonal polynomials.
//!
//! Moments come from weighted Motzkin and Dyck path recurrences, determinants
//! are evaluated fraction-free over multivariate integer polynomials, and the
//! [`verify`] module checks closed-form evaluations against them.

pub mod charpoly;
pub mod error;
pub mod hankel;
pub mod moments;
pub mod oracle;
pub mod verify;
pub mod ring;
pub mod weights;

pub use error::{Error, Result};
pub use ring::{Coefficient, Monomial, Polynomial, Var};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Polynomials with integer coefficients.
pub type Poly = Polynomial<BigInt>;
/// Polynomials with rational coefficients.
pub type QPoly = Polynomial<BigRational>;
