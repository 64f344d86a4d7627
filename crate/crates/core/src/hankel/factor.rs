//! Matrix factorizations behind the two-root determinant evaluation.
//!
//! With `A = (m(i,j))`, `D = diag(t_0 ... t_{i-1})`, the tridiagonal
//! `R` (`s_i` on the diagonal, `1` above, `t_i` below), `G(x) = R + x I` and
//! `E` the matrix unit in the bottom-right corner:
//!
//! * `det G_n(x) = f_n(x)`
//! * `(m(i+1, j)) = A R`
//! * `(m_{i+j}) = A D A^t`
//! * `(m(i+2, j)) = A (R^2 + t_{n-1} E)`
//! * `(x m_{i+j} + m_{i+j+1}) = A G(x) D A^t`
//! * `(ab m_{i+j} + (a+b) m_{i+j+1} + m_{i+j+2}) = A (G(a) G(b) + t_{n-1} E) D A^t`
//! * `[G_n(a) G_n(b)]_{n-1} = G_{n-1}(a) G_{n-1}(b) + t_{n-2} E_{n-1}`
//! * `det H_n = f_n(a) f_n(b) + t_{n-1} det H_{n-1}` where `H_n = G_n(a) G_n(b) + t_{n-1} E_n`

use serde::Serialize;

use super::{build_hankel, det_bareiss, HankelSpec, SquareMatrix};
use crate::charpoly::f_sequence;
use crate::error::{Error, Result};
use crate::moments::{moments_from, MomentTable};
use crate::ring::{Coefficient, Polynomial};
use crate::weights::{Mode, WeightSystem, WeightTable};
use crate::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationCheck {
    pub name: String,
    pub passed: bool,
    /// Offending `(row, column)` positions for matrix identities.
    pub mismatches: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub n: usize,
    pub checks: Vec<FactorizationCheck>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&FactorizationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Runs every identity for order `n` with symbolic `alpha`, `beta`.
pub fn factorization_check(ws: &WeightSystem, n: usize) -> Result<FactorizationReport> {
    if ws.mode() != Mode::Motzkin {
        return Err(Error::ModeMismatch { expected: Mode::Motzkin, found: ws.mode() });
    }
    if n == 0 {
        return Err(Error::Precondition("factorization check needs n >= 1".into()));
    }
    Ok(factorization_check_from(&ws.table(2 * n + 2), &Poly::named("alpha"), &Poly::named("beta"), n))
}

fn tridiagonal<C: Coefficient>(w: &WeightTable<C>, n: usize, x: &Polynomial<C>) -> SquareMatrix<Polynomial<C>> {
    SquareMatrix::from_fn(n, |i, j| {
        if i == j {
            x + &w.level[i]
        } else if j == i + 1 {
            Polynomial::one()
        } else if i == j + 1 {
            w.down[j].clone()
        } else {
            Polynomial::zero()
        }
    })
}

fn corner<C: Coefficient>(n: usize, c: &Polynomial<C>) -> SquareMatrix<Polynomial<C>> {
    SquareMatrix::from_fn(n, |i, j| if i == n - 1 && j == n - 1 { c.clone() } else { Polynomial::zero() })
}

/// Generic form of [`factorization_check`]; `w` must cover `2n + 2` indices.
pub fn factorization_check_from<C: Coefficient>(
    w: &WeightTable<C>,
    a: &Polynomial<C>,
    b: &Polynomial<C>,
    n: usize,
) -> FactorizationReport {
    w.need(2 * n + 2);
    let table = MomentTable::from_weights(w, n + 1);
    let seq = moments_from(w, 2 * n + 1);
    let zero = Polynomial::<C>::zero();
    let big_a = SquareMatrix::from_fn(n, |i, j| table.entry(i, j));
    let a_t = big_a.transpose();
    let mut diag = Polynomial::one();
    let big_d = {
        let mut d = SquareMatrix::zeros(n);
        for i in 0..n {
            d.set(i, i, diag.clone());
            diag = &diag * &w.down[i];
        }
        d
    };
    let r = tridiagonal(w, n, &zero);
    let ga = tridiagonal(w, n, a);
    let gb = tridiagonal(w, n, b);
    let e = corner(n, &w.down[n - 1]);
    let fa = f_sequence(w, a, n);
    let fb = f_sequence(w, b, n);

    let mut checks = Vec::new();
    let mut push_matrix = |name: &str, lhs: &SquareMatrix<Polynomial<C>>, rhs: &SquareMatrix<Polynomial<C>>| {
        let mismatches = lhs.differences(rhs);
        checks.push(FactorizationCheck { name: name.to_string(), passed: mismatches.is_empty(), mismatches });
    };

    let shifted1 = SquareMatrix::from_fn(n, |i, j| table.entry(i + 1, j));
    push_matrix("row shift by one step", &shifted1, &big_a.mul(&r));

    let plain = build_hankel(&seq, &HankelSpec::plain(0), n).unwrap();
    let adat = big_a.mul(&big_d).mul(&a_t);
    push_matrix("moment matrix splits as A D A^t", &plain, &adat);

    let shifted2 = SquareMatrix::from_fn(n, |i, j| table.entry(i + 2, j));
    push_matrix("row shift by two steps", &shifted2, &big_a.mul(&r.mul(&r).add(&e)));

    let one_root = build_hankel(&seq, &HankelSpec::new(0, vec![a.clone()]), n).unwrap();
    push_matrix("one-root matrix factors through G", &one_root, &big_a.mul(&ga).mul(&big_d).mul(&a_t));

    let h = ga.mul(&gb).add(&e);
    let two_root = build_hankel(&seq, &HankelSpec::new(0, vec![a.clone(), b.clone()]), n).unwrap();
    push_matrix("two-root matrix factors through H", &two_root, &big_a.mul(&h).mul(&big_d).mul(&a_t));

    if n >= 2 {
        let lhs = ga.mul(&gb).leading(n - 1);
        let rhs = tridiagonal(w, n - 1, a).mul(&tridiagonal(w, n - 1, b)).add(&corner(n - 1, &w.down[n - 2]));
        push_matrix("leading block of G(a) G(b)", &lhs, &rhs);
    }

    let mut scalar = |name: String, ok: bool| {
        checks.push(FactorizationCheck { name, passed: ok, mismatches: vec![] });
    };
    for k in 1..=n {
        scalar(format!("det G_{k}(a) = f_{k}(a)"), det_bareiss(&tridiagonal(w, k, a)) == fa[k]);
    }
    scalar("det A D A^t = det D".into(), det_bareiss(&adat) == det_bareiss(&big_d));
    let mut det_h_prev = Polynomial::one();
    for k in 1..=n {
        let hk = tridiagonal(w, k, a).mul(&tridiagonal(w, k, b)).add(&corner(k, &w.down[k - 1]));
        let det_hk = det_bareiss(&hk);
        let rhs = &fa[k] * &fb[k] + &w.down[k - 1] * &det_h_prev;
        scalar(format!("det H_{k} recursion"), det_hk == rhs);
        det_h_prev = det_hk;
    }

    FactorizationReport { n, checks }
}
