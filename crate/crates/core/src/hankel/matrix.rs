use std::fmt;

use rayon::prelude::*;

use crate::ring::{Coefficient, Polynomial};

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone> SquareMatrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        SquareMatrix { n, data }
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix rows must all have length {n}");
        SquareMatrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading(&self, k: usize) -> Self {
        assert!(k <= self.n);
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl<C: Coefficient> SquareMatrix<Polynomial<C>> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Polynomial::one() } else { Polynomial::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| Polynomial::zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let data: Vec<Polynomial<C>> = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let mut acc = Polynomial::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect();
        SquareMatrix { n, data }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        SquareMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Polynomial<C>) -> Self {
        self.map(|a| a * c)
    }

    /// Positions where `self` and `other` differ.
    pub fn differences(&self, other: &Self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) != other.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.n + j])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: fmt::Display> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Every division is exact over the coefficient ring, so intermediate entries
/// stay polynomial. A failed division means the elimination itself is broken,
/// and panics with the offending operands.
pub fn det_bareiss<C: Coefficient>(m: &SquareMatrix<Polynomial<C>>) -> Polynomial<C> {
    let n = m.order();
    if n == 0 {
        return Polynomial::one();
    }
    let mut rows = m.rows();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        // Smallest nonzero pivot keeps the products small.
        let pivot = (k..n).filter(|&r| !rows[r][k].is_zero()).min_by_key(|&r| rows[r][k].len());
        let Some(p) = pivot else {
            return Polynomial::zero();
        };
        if p != k {
            rows.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let akk = &pivot_row[k];
        tail.par_iter_mut().for_each(|row| {
            let aik = row[k].clone();
            for j in k + 1..n {
                let mut v = &row[j] * akk;
                if !aik.is_zero() && !pivot_row[j].is_zero() {
                    v -= &aik * &pivot_row[j];
                }
                row[j] = v.exact_div(&prev).unwrap_or_else(|e| panic!("Bareiss elimination: {e}"));
            }
            row[k] = Polynomial::zero();
        });
        prev = rows[k][k].clone();
    }
    let d = rows[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant by Laplace expansion along the first row. Exponential; an
/// independent check for small orders.
pub fn det_cofactor<C: Coefficient>(m: &SquareMatrix<Polynomial<C>>) -> Polynomial<C> {
    fn go<C: Coefficient>(m: &SquareMatrix<Polynomial<C>>, rows: &[usize], cols: &[usize]) -> Polynomial<C> {
        if rows.is_empty() {
            return Polynomial::one();
        }
        let r = rows[0];
        let mut acc = Polynomial::zero();
        for (idx, &c) in cols.iter().enumerate() {
            let a = m.get(r, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * &go(m, &rows[1..], &rest);
            if idx % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..m.order()).collect();
    go(m, &idx, &idx)
}
