//! Weight systems for weighted Motzkin and Dyck paths.
//!
//! A Motzkin system assigns `s_i` to horizontal steps and `t_i` to down steps
//! ending at height `i`. A Dyck system assigns `T_i` to down steps only.
//! Systems are an explicit prefix followed by a rule for every later index.

mod catalog;
mod descriptor;
mod q;

use std::fmt;

use serde_json::{json, Value};

use crate::ring::{Coefficient, Polynomial};
use crate::Poly;

pub use catalog::{catalog, CatalogId};
pub use descriptor::parse_weights;
pub use q::{q_binomial, q_pochhammer, rogers_szego};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Motzkin,
    Dyck,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Motzkin => "motzkin",
            Mode::Dyck => "dyck",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// The weight at one index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weight {
    Motzkin { s: Poly, t: Poly },
    Dyck(Poly),
}

/// Closed-form weight families indexed by absolute position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `s_i = t_i = i + 1`.
    Bell,
    /// `s_i = 2i + 1`, `t_i = (i + 1)^2`.
    Factorial,
    /// `s_i = q^i (t + 1)`, `t_i = q^i t (q^{i+1} - 1)`.
    RogersSzego,
    /// Moments `q^binom(n,2)`.
    QPowers,
    /// Dyck weights `T_i = q^floor((i+1)/2) (1 - q^floor((i+2)/2))`.
    QDyck,
}

impl Family {
    fn mode(self) -> Mode {
        match self {
            Family::QDyck => Mode::Dyck,
            _ => Mode::Motzkin,
        }
    }

    fn at(self, i: usize) -> Weight {
        let n = i as i64;
        let q = || Poly::named("q");
        let qp = |e: usize| q().pow(e as u32);
        match self {
            Family::Bell => Weight::Motzkin { s: Poly::from(n + 1), t: Poly::from(n + 1) },
            Family::Factorial => Weight::Motzkin { s: Poly::from(2 * n + 1), t: Poly::from((n + 1) * (n + 1)) },
            Family::RogersSzego => {
                let t = Poly::named("t");
                Weight::Motzkin {
                    s: qp(i) * (&t + &Poly::one()),
                    t: qp(i) * t * (qp(i + 1) - Poly::one()),
                }
            }
            Family::QPowers => {
                // q^{i-1}(q^{i+1} + q^i - 1) is the constant 1 at i = 0.
                let s = if i == 0 { Poly::one() } else { qp(i - 1) * (qp(i + 1) + qp(i) - Poly::one()) };
                Weight::Motzkin { s, t: qp(3 * i) * (qp(i + 1) - Poly::one()) }
            }
            Family::QDyck => Weight::Dyck(qp((i + 1) / 2) * (Poly::one() - qp((i + 2) / 2))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Tail {
    /// `(s, t)` in Motzkin mode or `T` in Dyck mode, for every index past the prefix.
    Constant(Weight),
    /// Fresh indeterminates `s_i`, `t_i` (Motzkin) or `T_i` (Dyck).
    Symbolic,
    Generator(Family),
    /// Motzkin weights whose moments are the even or odd rows of a Dyck table.
    Paired { source: Box<WeightSystem>, parity: Parity },
}

/// A total map `i -> weight` for `i >= 0`.
///
/// The tail rule is evaluated at `i + shift`, which is how shifted systems are
/// represented without materialising anything.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSystem {
    mode: Mode,
    prefix: Vec<Weight>,
    tail: Tail,
    shift: usize,
    descriptor: Value,
}

impl WeightSystem {
    /// Prefix followed by a constant tail. Every weight must match `mode`.
    pub fn new(mode: Mode, prefix: Vec<Weight>, tail: Weight) -> WeightSystem {
        let descriptor = Self::explicit_descriptor(mode, &prefix, Some(&tail));
        let ws = WeightSystem { mode, prefix, tail: Tail::Constant(tail), shift: 0, descriptor };
        ws.assert_modes();
        ws
    }

    /// Motzkin system with `s_0, t_0` free of the tail values `s, t`.
    pub fn constant_tail(s0: Poly, s: Poly, t0: Poly, t: Poly) -> WeightSystem {
        WeightSystem::new(Mode::Motzkin, vec![Weight::Motzkin { s: s0, t: t0 }], Weight::Motzkin { s, t })
    }

    /// Motzkin system with `s_i = s`, `t_i = t` everywhere.
    pub fn constant(s: Poly, t: Poly) -> WeightSystem {
        WeightSystem::new(Mode::Motzkin, vec![], Weight::Motzkin { s, t })
    }

    /// Dyck system with `T_i = t` everywhere.
    pub fn constant_dyck(t: Poly) -> WeightSystem {
        WeightSystem::new(Mode::Dyck, vec![], Weight::Dyck(t))
    }

    /// Free weights `s_i, t_i` or `T_i`.
    pub fn symbolic(mode: Mode) -> WeightSystem {
        WeightSystem {
            mode,
            prefix: vec![],
            tail: Tail::Symbolic,
            shift: 0,
            descriptor: json!({"kind": "symbolic", "mode": mode.to_string()}),
        }
    }

    pub fn generator(family: Family, prefix: Vec<Weight>, descriptor: Value) -> WeightSystem {
        let ws = WeightSystem { mode: family.mode(), prefix, tail: Tail::Generator(family), shift: 0, descriptor };
        ws.assert_modes();
        ws
    }

    fn assert_modes(&self) {
        let ok = |w: &Weight| matches!((self.mode, w), (Mode::Motzkin, Weight::Motzkin { .. }) | (Mode::Dyck, Weight::Dyck(_)));
        assert!(self.prefix.iter().all(ok), "prefix weight does not match mode {}", self.mode);
        if let Tail::Constant(w) = &self.tail {
            assert!(ok(w), "tail weight does not match mode {}", self.mode);
        }
    }

    fn explicit_descriptor(mode: Mode, prefix: &[Weight], tail: Option<&Weight>) -> Value {
        let enc = |w: &Weight| match w {
            Weight::Motzkin { s, t } => json!([s.to_string(), t.to_string()]),
            Weight::Dyck(t) => json!(t.to_string()),
        };
        let tail = match tail {
            Some(Weight::Motzkin { s, t }) => json!({"kind": "constant", "s": s.to_string(), "t": t.to_string()}),
            Some(Weight::Dyck(t)) => json!({"kind": "constant", "T": t.to_string()}),
            None => json!({"kind": "symbolic"}),
        };
        json!({"mode": mode.to_string(), "prefix": prefix.iter().map(enc).collect::<Vec<_>>(), "tail": tail})
    }

    pub(crate) fn with_descriptor(mut self, descriptor: Value) -> WeightSystem {
        self.descriptor = descriptor;
        self
    }

    /// Prefix followed by fresh indeterminates.
    pub(crate) fn symbolic_with_prefix(mode: Mode, prefix: Vec<Weight>) -> WeightSystem {
        let descriptor = Self::explicit_descriptor(mode, &prefix, None);
        let ws = WeightSystem { mode, prefix, tail: Tail::Symbolic, shift: 0, descriptor };
        ws.assert_modes();
        ws
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// JSON description suitable for reports; parseable by [`parse_weights`].
    pub fn descriptor(&self) -> &Value {
        &self.descriptor
    }

    pub fn weight_at(&self, i: usize) -> Weight {
        if let Some(w) = self.prefix.get(i) {
            return w.clone();
        }
        let j = i + self.shift;
        match &self.tail {
            Tail::Constant(w) => w.clone(),
            Tail::Symbolic => match self.mode {
                Mode::Motzkin => Weight::Motzkin {
                    s: Poly::named(&format!("s_{j}")),
                    t: Poly::named(&format!("t_{j}")),
                },
                Mode::Dyck => Weight::Dyck(Poly::named(&format!("T_{j}"))),
            },
            Tail::Generator(f) => f.at(j),
            Tail::Paired { source, parity } => {
                let big_t = |k: i64| if k < 0 { Poly::zero() } else { source.big_t(k as usize) };
                let k = j as i64;
                let (a, b, c, d) = match parity {
                    Parity::Even => (2 * k - 1, 2 * k, 2 * k, 2 * k + 1),
                    Parity::Odd => (2 * k, 2 * k + 1, 2 * k + 1, 2 * k + 2),
                };
                Weight::Motzkin { s: big_t(a) + big_t(b), t: big_t(c) * big_t(d) }
            }
        }
    }

    /// `s_i`. Panics on Dyck systems.
    pub fn s(&self, i: usize) -> Poly {
        match self.weight_at(i) {
            Weight::Motzkin { s, .. } => s,
            Weight::Dyck(_) => panic!("s_i requested from a Dyck weight system"),
        }
    }

    /// `t_i`. Panics on Dyck systems.
    pub fn t(&self, i: usize) -> Poly {
        match self.weight_at(i) {
            Weight::Motzkin { t, .. } => t,
            Weight::Dyck(_) => panic!("t_i requested from a Dyck weight system"),
        }
    }

    /// `T_i`. Panics on Motzkin systems.
    pub fn big_t(&self, i: usize) -> Poly {
        match self.weight_at(i) {
            Weight::Dyck(t) => t,
            Weight::Motzkin { .. } => panic!("T_i requested from a Motzkin weight system"),
        }
    }

    /// Down-step weight at height `i` in either mode.
    pub fn down(&self, i: usize) -> Poly {
        match self.weight_at(i) {
            Weight::Motzkin { t, .. } => t,
            Weight::Dyck(t) => t,
        }
    }

    /// Horizontal-step weight at height `i`; zero in Dyck mode.
    pub fn level(&self, i: usize) -> Poly {
        match self.weight_at(i) {
            Weight::Motzkin { s, .. } => s,
            Weight::Dyck(_) => Poly::zero(),
        }
    }

    /// The system `i -> weight_at(i + offset)`.
    pub fn shift(&self, offset: usize) -> WeightSystem {
        if offset == 0 {
            return self.clone();
        }
        let drop = offset.min(self.prefix.len());
        WeightSystem {
            mode: self.mode,
            prefix: self.prefix[drop..].to_vec(),
            tail: self.tail.clone(),
            shift: self.shift + offset,
            descriptor: json!({"kind": "shift", "of": self.descriptor, "by": offset}),
        }
    }

    /// Materialises the first `n` weights as an explicit prefix in front of the
    /// same tail, so `weight_at` agrees everywhere.
    pub fn with_prefix_len(&self, n: usize) -> WeightSystem {
        let mut out = self.clone();
        out.prefix = (0..n.max(self.prefix.len())).map(|i| self.weight_at(i)).collect();
        out
    }

    /// `(s0, s, t0, t)` when `s_i = s` and `t_i = t` for all `i >= 1`.
    pub fn constant_tail_params(&self) -> Option<(Poly, Poly, Poly, Poly)> {
        if self.mode != Mode::Motzkin {
            return None;
        }
        let Tail::Constant(Weight::Motzkin { s, t }) = &self.tail else {
            return None;
        };
        let uniform = self.prefix.iter().skip(1).all(|w| matches!(w, Weight::Motzkin { s: a, t: b } if a == s && b == t));
        if !uniform {
            return None;
        }
        Some((self.s(0), s.clone(), self.t(0), t.clone()))
    }

    /// The Motzkin system whose moment table is `c(2n, 2k)` (even) or
    /// `c(2n+1, 2k+1)` (odd), with `T_{-1} = 0`.
    pub fn dyck_to_motzkin(&self, parity: Parity) -> crate::Result<WeightSystem> {
        if self.mode != Mode::Dyck {
            return Err(crate::Error::ModeMismatch { expected: Mode::Dyck, found: self.mode });
        }
        let paired = WeightSystem {
            mode: Mode::Motzkin,
            prefix: vec![],
            tail: Tail::Paired { source: Box::new(self.clone()), parity },
            shift: 0,
            descriptor: json!({"kind": "paired", "of": self.descriptor, "parity": parity.to_string()}),
        };
        // A constant Dyck tail pairs into a constant Motzkin tail once every
        // index involved lies past the Dyck prefix.
        if let Tail::Constant(Weight::Dyck(big)) = &self.tail {
            let k = self.prefix.len() / 2 + 1;
            let tail = Weight::Motzkin { s: big + big, t: big * big };
            let prefix = (0..k).map(|i| paired.weight_at(i)).collect();
            let descriptor = paired.descriptor.clone();
            return Ok(WeightSystem::new(Mode::Motzkin, prefix, tail).with_descriptor(descriptor));
        }
        Ok(paired)
    }
}

impl WeightSystem {
    /// The first `len` weights, with coefficients in `C`.
    pub fn table<C: Coefficient>(&self, len: usize) -> WeightTable<C> {
        let conv = |p: Poly| p.map_coefficients(|c| C::from_bigint(c.clone()));
        let (mut level, mut down) = (Vec::with_capacity(len), Vec::with_capacity(len));
        for i in 0..len {
            level.push(conv(self.level(i)));
            down.push(conv(self.down(i)));
        }
        WeightTable { mode: self.mode, level, down }
    }
}

/// A finite run of weights `0..len`, over any coefficient domain.
///
/// In Dyck mode `level` is identically zero and `down` holds the `T_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable<C: Coefficient> {
    pub mode: Mode,
    pub level: Vec<Polynomial<C>>,
    pub down: Vec<Polynomial<C>>,
}

impl<C: Coefficient> WeightTable<C> {
    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    /// Drops the first `k` weights.
    pub fn shift(&self, k: usize) -> WeightTable<C> {
        let k = k.min(self.len());
        WeightTable { mode: self.mode, level: self.level[k..].to_vec(), down: self.down[k..].to_vec() }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<D>) -> WeightTable<D> {
        WeightTable { mode: self.mode, level: self.level.iter().map(&f).collect(), down: self.down.iter().map(&f).collect() }
    }

    /// Panics if fewer than `len` weights are present.
    pub fn need(&self, len: usize) {
        assert!(self.len() >= len, "weight table has {} entries, {} needed", self.len(), len);
    }
}

/// Free-function form of [`WeightSystem::shift`].
pub fn shift_weights(ws: &WeightSystem, offset: usize) -> WeightSystem {
    ws.shift(offset)
}
