//! Moment tables from the weighted path recurrences
//! `m(n,k) = m(n-1,k-1) + s_k m(n-1,k) + t_k m(n-1,k+1)` (Motzkin) and
//! `c(n,k) = c(n-1,k-1) + T_k c(n-1,k+1)` (Dyck), with `m(0,k) = [k = 0]`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Coefficient, Polynomial};
use crate::weights::{Mode, Parity, WeightSystem, WeightTable};

/// The triangle `entry(n, k)` for `0 <= k <= n <= depth`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentTable<C: Coefficient = BigInt> {
    mode: Mode,
    rows: Vec<Vec<Polynomial<C>>>,
}

impl<C: Coefficient> MomentTable<C> {
    /// Full table of depth `n_max`. `weights` must cover indices `0..n_max`.
    pub fn from_weights(weights: &WeightTable<C>, n_max: usize) -> MomentTable<C> {
        weights.need(n_max);
        let rows = recurrence(weights, n_max, |n| n);
        MomentTable { mode: weights.mode, rows }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    /// `m(n, k)`, zero outside the triangle. Panics if `n` exceeds the depth.
    pub fn entry(&self, n: usize, k: usize) -> Polynomial<C> {
        assert!(n <= self.depth(), "row {n} beyond table depth {}", self.depth());
        self.rows[n].get(k).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn row(&self, n: usize) -> &[Polynomial<C>] {
        &self.rows[n]
    }

    /// `m_0..=m_{n_max}` in Motzkin mode, `c_0..=c_{n_max}` with `c_n = c(2n, 0)`
    /// in Dyck mode.
    pub fn moment_sequence(&self, n_max: usize) -> Result<Vec<Polynomial<C>>> {
        let step = match self.mode {
            Mode::Motzkin => 1,
            Mode::Dyck => 2,
        };
        let need = step * n_max;
        if need > self.depth() {
            return Err(Error::InsufficientDepth { have: self.depth(), need });
        }
        Ok((0..=n_max).map(|n| self.entry(step * n, 0)).collect())
    }
}

/// Runs the recurrence for rows `0..=depth`, keeping `k <= width(n)` in row `n`.
fn recurrence<C: Coefficient>(
    w: &WeightTable<C>,
    depth: usize,
    width: impl Fn(usize) -> usize,
) -> Vec<Vec<Polynomial<C>>> {
    let mut rows: Vec<Vec<Polynomial<C>>> = Vec::with_capacity(depth + 1);
    rows.push(vec![Polynomial::one()]);
    let dyck = w.mode == Mode::Dyck;
    for n in 1..=depth {
        let prev = &rows[n - 1];
        let get = |k: usize| prev.get(k);
        let kmax = width(n).min(n);
        let mut row = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            let mut v = match k.checked_sub(1).and_then(get) {
                Some(p) => p.clone(),
                None => Polynomial::zero(),
            };
            if !dyck {
                if let Some(p) = get(k) {
                    if !p.is_zero() {
                        v += &w.level[k] * p;
                    }
                }
            }
            if let Some(p) = get(k + 1) {
                if !p.is_zero() {
                    v += &w.down[k] * p;
                }
            }
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

/// Moments `m_0..m_{len-1}` (or `c_0..c_{len-1}` in Dyck mode), computing only
/// the part of the triangle that can still return to height zero.
pub fn moments_from<C: Coefficient>(w: &WeightTable<C>, len: usize) -> Vec<Polynomial<C>> {
    if len == 0 {
        return vec![];
    }
    let depth = match w.mode {
        Mode::Motzkin => len - 1,
        Mode::Dyck => 2 * (len - 1),
    };
    w.need(depth);
    let rows = recurrence(w, depth, |n| depth - n);
    let step = if w.mode == Mode::Dyck { 2 } else { 1 };
    (0..len).map(|i| rows[step * i][0].clone()).collect()
}

/// Full moment table for a weight system.
pub fn build_table(ws: &WeightSystem, n_max: usize) -> MomentTable {
    MomentTable::from_weights(&ws.table(n_max + 1), n_max)
}

/// `m_0..=m_{n_max}` (Motzkin) or `c_0..=c_{n_max}` (Dyck) for a weight system.
pub fn moments(ws: &WeightSystem, n_max: usize) -> Vec<crate::Poly> {
    let depth = if ws.mode() == Mode::Dyck { 2 * n_max } else { n_max };
    moments_from(&ws.table(depth + 1), n_max + 1)
}

/// See [`WeightSystem::dyck_to_motzkin`].
pub fn dyck_to_motzkin(ws: &WeightSystem, parity: Parity) -> Result<WeightSystem> {
    ws.dyck_to_motzkin(parity)
}
