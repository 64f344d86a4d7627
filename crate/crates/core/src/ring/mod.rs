//! Exact multivariate polynomial arithmetic.

mod coeff;
mod monomial;
mod parse;
mod poly;
mod var;

pub use coeff::Coefficient;
pub use monomial::Monomial;
pub use parse::parse_rational;
pub use poly::Polynomial;
pub use var::Var;

use std::collections::HashMap;

/// Builds a binding map from `(name, value)` pairs.
pub fn bindings<V: Clone>(pairs: &[(&str, V)]) -> HashMap<Var, V> {
    pairs.iter().map(|(n, v)| (Var::new(n), v.clone())).collect()
}
