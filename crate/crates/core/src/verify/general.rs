//! Identities that hold for arbitrary weights: the two- and three-root sums,
//! their Dyck versions and the one-root limits.

use crate::charpoly::{f_sequence, g_sequence};
use crate::hankel::{hankel_det, product_formula_from, HankelSpec, ProductVariant};
use crate::moments::moments_from;
use crate::ring::{Coefficient, Polynomial, Var};
use crate::weights::{Parity, WeightTable};

use super::report::Checker;
use super::Recipe;

/// Determinant of `(sum_k e_{d-k}(roots) seq[i+j+shift+k])`.
pub(crate) fn det_of<C: Coefficient>(seq: &[Polynomial<C>], shift: usize, roots: &[Polynomial<C>], n: usize) -> Polynomial<C> {
    hankel_det(seq, &HankelSpec::new(shift, roots.to_vec()), n).expect("moment sequence covers the matrix")
}

/// `prod_{l in range} w.down[l]`.
pub(crate) fn down_product<C: Coefficient>(w: &WeightTable<C>, range: std::ops::Range<usize>) -> Polynomial<C> {
    w.down[range].iter().cloned().product()
}

/// `sum_j f_j(a) f_j(b) t_j ... t_{n-1}`.
pub(crate) fn two_root_sum<C: Coefficient>(w: &WeightTable<C>, a: &Polynomial<C>, b: &Polynomial<C>, n: usize) -> Polynomial<C> {
    let fa = f_sequence(w, a, n);
    let fb = f_sequence(w, b, n);
    (0..=n).map(|j| &fa[j] * &fb[j] * down_product(w, j..n)).sum()
}

/// The double sum for three roots, with the shifted factor taken in `b` in
/// both halves exactly as the identity is usually stated.
pub(crate) fn three_root_sum<C: Coefficient>(
    w: &WeightTable<C>,
    a: &Polynomial<C>,
    b: &Polynomial<C>,
    c: &Polynomial<C>,
    n: usize,
) -> Polynomial<C> {
    let fa = f_sequence(w, a, n);
    let fb = f_sequence(w, b, n);
    let fc = f_sequence(w, c, n);
    let shifted = |k: usize, len: usize| f_sequence(&w.shift(k), b, len).pop().unwrap();
    let mut total = Polynomial::zero();
    for j in 0..=n {
        let tail = shifted(j + 1, n - j);
        for k in 0..=j {
            total += &fa[j] * &fb[k] * &fc[k] * &tail * down_product(w, k..n);
        }
    }
    for k in 1..=n {
        let tail = shifted(k + 1, n - k);
        for j in 0..k {
            total += &fa[j] * &fb[j] * &fc[k] * &tail * down_product(w, j..n);
        }
    }
    total
}

pub(crate) struct TwoRoot;

impl Recipe for TwoRoot {
    fn table_len(&self, n: usize) -> usize {
        2 * n + 2
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let seq = moments_from(w, 2 * n + 1);
        let den = det_of(&seq, 0, &[], n);
        ck.eq(n, "denominator", &den, &product_formula_from(w, ProductVariant::Base, n));
        let lhs = det_of(&seq, 0, roots, n);
        ck.eq(n, "two-root", &lhs, &(&den * &two_root_sum(w, &roots[0], &roots[1], n)));
    }
}

pub(crate) struct DyckTwoRoot(pub Parity);

impl Recipe for DyckTwoRoot {
    fn table_len(&self, n: usize) -> usize {
        4 * n + 6
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let seq = moments_from(w, 2 * n + 3);
        let (shift, variant, first) = match self.0 {
            Parity::Even => (0, ProductVariant::DyckEven, 0),
            Parity::Odd => (1, ProductVariant::DyckOdd, 1),
        };
        let den = det_of(&seq, shift, &[], n);
        ck.eq(n, "denominator", &den, &product_formula_from(w, variant, n));
        let ga = g_sequence(w, &roots[0], 2 * n + 1);
        let gb = g_sequence(w, &roots[1], 2 * n + 1);
        let sum: Polynomial<C> = (0..=n)
            .map(|j| {
                let k = 2 * j + first;
                &ga[k] * &gb[k] * down_product(w, k..2 * n + first)
            })
            .sum();
        let lhs = det_of(&seq, shift, roots, n);
        ck.eq(n, "dyck-two-root", &lhs, &(&den * &sum));
    }
}

/// Setting the second root to zero, and reading off its leading coefficient.
pub(crate) struct OneRoot;

impl Recipe for OneRoot {
    fn table_len(&self, n: usize) -> usize {
        2 * n + 2
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let a = &roots[0];
        let seq = moments_from(w, 2 * n + 1);
        let den = det_of(&seq, 0, &[], n);

        let beta_zero = det_of(&seq, 1, std::slice::from_ref(a), n);
        let fa = f_sequence(w, a, n);
        let f0 = f_sequence(w, &Polynomial::zero(), n);
        let sum: Polynomial<C> = (0..=n).map(|j| &fa[j] * &f0[j] * down_product(w, j..n)).sum();
        ck.eq(n, "beta-zero", &beta_zero, &(&den * &sum));

        let one_root = det_of(&seq, 0, std::slice::from_ref(a), n);
        ck.eq(n, "one-root", &one_root, &(&den * &fa[n]));

        let beta = Var::new("beta_lead");
        let two = det_of(&seq, 0, &[a.clone(), Polynomial::var(beta)], n);
        ck.eq(n, "leading-coefficient", &two.coefficient_of(beta, n as u32), &one_root);
    }
}

/// The four one-root Dyck limits.
pub(crate) struct DyckOneRoot;

impl Recipe for DyckOneRoot {
    fn table_len(&self, n: usize) -> usize {
        4 * n + 6
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let a = &roots[0];
        let seq = moments_from(w, 2 * n + 3);
        let ga = g_sequence(w, a, 2 * n + 1);
        let g0 = g_sequence(w, &Polynomial::zero(), 2 * n + 1);
        let one = std::slice::from_ref(a);
        for (parity, shift) in [(Parity::Even, 0), (Parity::Odd, 1)] {
            let den = det_of(&seq, shift, &[], n);
            let sum: Polynomial<C> = (0..=n)
                .map(|j| {
                    let k = 2 * j + shift;
                    &ga[k] * &g0[k] * down_product(w, k..2 * n + shift)
                })
                .sum();
            let zero = det_of(&seq, shift + 1, one, n);
            ck.eq(n, &format!("dyck-beta-zero-{parity}"), &zero, &(&den * &sum));
            let lhs = det_of(&seq, shift, one, n);
            ck.eq(n, &format!("dyck-one-root-{parity}"), &lhs, &(&den * &ga[2 * n + shift]));
        }
    }
}

pub(crate) struct ThreeRoot;

impl Recipe for ThreeRoot {
    fn table_len(&self, n: usize) -> usize {
        2 * n + 4
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let seq = moments_from(w, 2 * n + 2);
        let den = det_of(&seq, 0, &[], n);
        let lhs = det_of(&seq, 0, roots, n);
        let rhs = three_root_sum(w, &roots[0], &roots[1], &roots[2], n);
        ck.eq(n, "three-root", &lhs, &(&den * &rhs));
    }
}

/// Plain Hankel determinants against their product formulas.
pub(crate) struct Product;

impl Recipe for Product {
    fn table_len(&self, n: usize) -> usize {
        4 * n + 4
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, _: &[Polynomial<C>], n: usize) {
        match w.mode {
            crate::weights::Mode::Motzkin => {
                let seq = moments_from(w, 2 * n);
                ck.eq(n, "product", &det_of(&seq, 0, &[], n), &product_formula_from(w, ProductVariant::Base, n));
            }
            crate::weights::Mode::Dyck => {
                let seq = moments_from(w, 2 * n + 1);
                let even = det_of(&seq, 0, &[], n);
                ck.eq(n, "product-even", &even, &product_formula_from(w, ProductVariant::DyckEven, n));
                let odd = det_of(&seq, 1, &[], n);
                ck.eq(n, "product-odd", &odd, &product_formula_from(w, ProductVariant::DyckOdd, n));
            }
        }
    }
}
