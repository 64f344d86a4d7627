//! Brute-force combinatorial oracles, independent of the recurrences they check.

mod lgv;

use num_bigint::BigInt;
use num_traits::One;

use crate::ring::Var;
use crate::weights::{Mode, WeightSystem};
use crate::Poly;

pub use lgv::{lgv_expand, lgv_expand_with, LgvModel};

/// Sum of weights of all paths of length `n` from `(0,0)` to `(n,k)` that stay
/// weakly above the axis, enumerated step by step.
pub fn enum_paths(ws: &WeightSystem, n: usize, k: usize) -> Poly {
    let w = ws.table::<BigInt>(n + 1);
    let dyck = ws.mode() == Mode::Dyck;
    let mut total = Poly::zero();
    // Explicit stack of (steps taken, height, weight so far).
    let mut stack = vec![(0usize, 0usize, Poly::one())];
    while let Some((len, y, weight)) = stack.pop() {
        if y > n - len + k {
            continue;
        }
        if len == n {
            if y == k {
                total += weight;
            }
            continue;
        }
        stack.push((len + 1, y + 1, weight.clone()));
        if !dyck && !w.level[y].is_zero() {
            stack.push((len + 1, y, &weight * &w.level[y]));
        }
        if y > 0 {
            stack.push((len + 1, y - 1, &weight * &w.down[y - 1]));
        }
    }
    total
}

/// Cuts every path of length `i + j` after `i` steps: the sum over heights `k`
/// of `m(i,k) m(j,k) t_0 ... t_{k-1}`, each factor enumerated directly.
/// Reversing the second half turns its up steps into down steps, hence the `t` product.
pub fn cut_path_sum(ws: &WeightSystem, i: usize, j: usize) -> Poly {
    (0..=i.min(j))
        .map(|k| {
            let lowered: Poly = (0..k).map(|l| ws.down(l)).product();
            enum_paths(ws, i, k) * enum_paths(ws, j, k) * lowered
        })
        .sum()
}

/// One brick of a pillar, listed bottom to top.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Brick {
    /// Unit square at height `h`, weight `s_h`.
    Plain(usize),
    /// Unit square, weight `var`.
    Marked,
    /// Height-two brick with bottom at `h`, weight `-t_h`.
    Domino(usize),
}

/// All tilings of an `n x 1` column by unit squares (two kinds) and dominoes.
pub fn pillars(n: usize) -> Vec<Vec<Brick>> {
    fn go(h: usize, n: usize, cur: &mut Vec<Brick>, out: &mut Vec<Vec<Brick>>) {
        if h == n {
            out.push(cur.clone());
            return;
        }
        for b in [Brick::Plain(h), Brick::Marked] {
            cur.push(b);
            go(h + 1, n, cur, out);
            cur.pop();
        }
        if h + 2 <= n {
            cur.push(Brick::Domino(h));
            go(h + 2, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// Sum of pillar weights of height `n`; equals `f_n(var)`.
pub fn enum_pillars(ws: &WeightSystem, n: usize, var: Var) -> Poly {
    let x = Poly::var(var);
    pillars(n)
        .into_iter()
        .map(|p| {
            p.into_iter()
                .map(|b| match b {
                    Brick::Plain(h) => ws.s(h),
                    Brick::Marked => x.clone(),
                    Brick::Domino(h) => -ws.t(h),
                })
                .product::<Poly>()
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reference {
    Bell,
    Factorial,
}

/// Bell numbers from the Bell triangle; factorials as plain products.
pub fn reference_oracles(kind: Reference, n: usize) -> BigInt {
    match kind {
        Reference::Factorial => (1..=n as u64).fold(BigInt::one(), |acc, k| acc * k),
        Reference::Bell => {
            let mut row = vec![BigInt::one()];
            for _ in 0..n {
                let mut next = vec![row.last().unwrap().clone()];
                for v in &row {
                    let x = next.last().unwrap() + v;
                    next.push(x);
                }
                row = next;
            }
            row[0].clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::f_poly;
    use crate::weights::{catalog, CatalogId};

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn small_path_sums() {
        let sym = WeightSystem::symbolic(Mode::Motzkin);
        assert_eq!(enum_paths(&sym, 2, 0), p("s_0^2 + t_0"));
        assert_eq!(enum_paths(&sym, 0, 0), Poly::one());
        assert_eq!(enum_paths(&sym, 0, 1), Poly::zero());
        assert_eq!(enum_paths(&catalog(CatalogId::I), 4, 0), Poly::from(9));
        assert_eq!(enum_paths(&WeightSystem::constant_dyck(Poly::one()), 6, 0), Poly::from(5));
    }

    #[test]
    fn pillar_sums() {
        let sym = WeightSystem::symbolic(Mode::Motzkin);
        let a = Var::new("alpha");
        assert_eq!(enum_pillars(&sym, 0, a), Poly::one());
        assert_eq!(enum_pillars(&sym, 1, a), p("alpha + s_0"));
        assert_eq!(enum_pillars(&sym, 2, a), p("alpha^2 + (s_0 + s_1)*alpha + s_0*s_1 - t_0"));
        assert_eq!(pillars(2).len(), 5);
        for n in 0..=5 {
            assert_eq!(enum_pillars(&sym, n, a), f_poly(&sym, n as i64, a).unwrap());
        }
    }

    #[test]
    fn cutting_paths() {
        let sym = WeightSystem::symbolic(Mode::Motzkin);
        for (i, j) in [(0, 0), (1, 2), (2, 2), (3, 1)] {
            assert_eq!(cut_path_sum(&sym, i, j), enum_paths(&sym, i + j, 0));
        }
    }

    #[test]
    fn references() {
        let b: Vec<BigInt> = (0..8).map(|n| reference_oracles(Reference::Bell, n)).collect();
        assert_eq!(b, [1, 1, 2, 5, 15, 52, 203, 877].map(BigInt::from));
        assert_eq!(reference_oracles(Reference::Factorial, 4), BigInt::from(24));
        assert_eq!(reference_oracles(Reference::Factorial, 0), BigInt::one());
    }
}
