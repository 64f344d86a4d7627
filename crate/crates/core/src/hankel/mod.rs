//! Hankel matrices of linear combinations of moments, and their determinants.
//!
//! A [`HankelSpec`] with shift `σ` and roots `a_1..a_d` describes the matrix
//! with entries `sum_k e_{d-k}(a) m_{i+j+σ+k}`, i.e. `m^{i+j+σ} prod (a_l + m)`
//! read umbrally.

mod factor;
mod matrix;

use crate::error::{Error, Result};
use crate::ring::{Coefficient, Polynomial};
use crate::weights::{Mode, WeightSystem, WeightTable};
use crate::Poly;

pub use factor::{factorization_check, factorization_check_from, FactorizationReport};
pub use matrix::{det_bareiss, det_cofactor, SquareMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct HankelSpec<C: Coefficient = num_bigint::BigInt> {
    pub shift: usize,
    pub roots: Vec<Polynomial<C>>,
}

impl<C: Coefficient> HankelSpec<C> {
    pub fn new(shift: usize, roots: Vec<Polynomial<C>>) -> Self {
        HankelSpec { shift, roots }
    }

    /// Plain `(m_{i+j+shift})`.
    pub fn plain(shift: usize) -> Self {
        HankelSpec { shift, roots: vec![] }
    }

    /// Weights of `m_{i+j+shift+k}` for `k = 0..=d`: `e_{d-k}(roots)`.
    pub fn combination(&self) -> Vec<Polynomial<C>> {
        let e = elementary_symmetric(&self.roots);
        e.into_iter().rev().collect()
    }

    /// Number of moments needed for an order-`n` matrix.
    pub fn required_len(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            2 * n - 1 + self.shift + self.roots.len()
        }
    }
}

/// `[e_0, e_1, ..., e_d]` of the given values.
pub fn elementary_symmetric<C: Coefficient>(xs: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    let mut e = vec![Polynomial::one()];
    for x in xs {
        let mut next = e.clone();
        next.push(Polynomial::zero());
        for k in 1..next.len() {
            next[k] = &e.get(k).cloned().unwrap_or_else(Polynomial::zero) + &(x * &e[k - 1]);
        }
        e = next;
    }
    e
}

/// The order-`n` matrix described by `spec` over the moment sequence `seq`.
pub fn build_hankel<C: Coefficient>(
    seq: &[Polynomial<C>],
    spec: &HankelSpec<C>,
    n: usize,
) -> Result<SquareMatrix<Polynomial<C>>> {
    let need = spec.required_len(n);
    if seq.len() < need {
        return Err(Error::SequenceTooShort { need, have: seq.len() });
    }
    let comb = spec.combination();
    let entries: Vec<Polynomial<C>> = (0..(2 * n).saturating_sub(1))
        .map(|s| {
            comb.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| c * &seq[s + spec.shift + k])
                .sum()
        })
        .collect();
    Ok(SquareMatrix::from_fn(n, |i, j| entries[i + j].clone()))
}

/// Determinant of [`build_hankel`].
pub fn hankel_det<C: Coefficient>(seq: &[Polynomial<C>], spec: &HankelSpec<C>, n: usize) -> Result<Polynomial<C>> {
    Ok(det_bareiss(&build_hankel(seq, spec, n)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductVariant {
    /// `det(m_{i+j}) = prod t_i^{n-i-1}`.
    Base,
    /// `det(c_{i+j}) = prod (T_{2i} T_{2i+1})^{n-i-1}`.
    DyckEven,
    /// `det(c_{i+j+1}) = prod T_0 (T_{2i+1} T_{2i+2})^{n-i-1}`.
    DyckOdd,
}

/// Closed-form value of the plain Hankel determinant of order `n >= 1`.
pub fn hankel_product_formula(ws: &WeightSystem, variant: ProductVariant, n: usize) -> Result<Poly> {
    let expected = match variant {
        ProductVariant::Base => Mode::Motzkin,
        _ => Mode::Dyck,
    };
    if ws.mode() != expected {
        return Err(Error::ModeMismatch { expected, found: ws.mode() });
    }
    if n == 0 {
        return Err(Error::Precondition("product formula needs n >= 1".into()));
    }
    Ok(product_formula_from(&ws.table(2 * n + 1), variant, n))
}

pub fn product_formula_from<C: Coefficient>(w: &WeightTable<C>, variant: ProductVariant, n: usize) -> Polynomial<C> {
    let mut acc = Polynomial::one();
    for i in 0..n {
        let e = (n - i - 1) as u32;
        let factor = match variant {
            ProductVariant::Base => w.down[i].pow(e),
            ProductVariant::DyckEven => (&w.down[2 * i] * &w.down[2 * i + 1]).pow(e),
            ProductVariant::DyckOdd => &w.down[0] * &(&w.down[2 * i + 1] * &w.down[2 * i + 2]).pow(e),
        };
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::moments;
    use crate::weights::{catalog, CatalogId};

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn catalan_matrices() {
        let c = moments(&catalog(CatalogId::Ii), 8);
        let m = build_hankel(&c, &HankelSpec::plain(0), 2).unwrap();
        assert_eq!(m.rows(), vec![vec![p("1"), p("1")], vec![p("1"), p("2")]]);
        let m = build_hankel(&c, &HankelSpec::new(0, vec![Poly::one()]), 2).unwrap();
        assert_eq!(m.rows(), vec![vec![p("2"), p("3")], vec![p("3"), p("7")]]);
        assert_eq!(hankel_det(&c, &HankelSpec::new(0, vec![Poly::one()]), 3).unwrap(), p("13"));
        assert!(matches!(build_hankel(&c, &HankelSpec::plain(0), 6), Err(Error::SequenceTooShort { .. })));
    }

    #[test]
    fn two_root_entry() {
        let ws = WeightSystem::symbolic(Mode::Motzkin);
        let m = moments(&ws, 2);
        let spec = HankelSpec::new(0, vec![p("alpha"), p("beta")]);
        let h = build_hankel(&m, &spec, 1).unwrap();
        assert_eq!(h.get(0, 0), &(p("alpha*beta") * &m[0] + p("alpha + beta") * &m[1] + m[2].clone()));
    }

    #[test]
    fn elementary() {
        let e = elementary_symmetric(&[p("a"), p("b"), p("c")]);
        assert_eq!(e, vec![p("1"), p("a + b + c"), p("a*b + a*c + b*c"), p("a*b*c")]);
    }

    #[test]
    fn product_formulas() {
        let sym = WeightSystem::symbolic(Mode::Motzkin);
        assert_eq!(hankel_product_formula(&sym, ProductVariant::Base, 3).unwrap(), p("t_0^2*t_1"));
        assert_eq!(hankel_product_formula(&catalog(CatalogId::I), ProductVariant::Base, 5).unwrap(), Poly::one());
        let dyck = WeightSystem::symbolic(Mode::Dyck);
        assert_eq!(hankel_product_formula(&dyck, ProductVariant::DyckOdd, 2).unwrap(), p("T_0^2*T_1*T_2"));
        assert!(hankel_product_formula(&dyck, ProductVariant::Base, 2).is_err());
        assert!(hankel_product_formula(&sym, ProductVariant::DyckEven, 2).is_err());
    }

    #[test]
    fn product_formula_matches_determinant() {
        for id in [CatalogId::I, CatalogId::Ii, CatalogId::Vii] {
            let ws = catalog(id);
            let m = moments(&ws, 12);
            for n in 1..=6 {
                assert_eq!(
                    hankel_det(&m, &HankelSpec::plain(0), n).unwrap(),
                    hankel_product_formula(&ws, ProductVariant::Base, n).unwrap()
                );
            }
        }
    }
}
