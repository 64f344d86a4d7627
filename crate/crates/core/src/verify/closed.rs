//! Closed forms for weights that are constant from index one on.
//!
//! Everything is written with `S_k(a, t) = t^{k/2} U_k(a / (2 sqrt t))`, so no
//! square roots of `t` survive into the ring.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::charpoly::{chebyshev_special, f_closed_form_at, f_closed_form_times_t, f_sequence, ScaledChebyshev, SpecialPoint};
use crate::error::{Error, Result};
use crate::moments::moments_from;
use crate::ring::{Coefficient, Polynomial};
use crate::weights::WeightTable;

use super::general::{det_of, three_root_sum, two_root_sum};
use super::report::Checker;
use super::Recipe;

/// `(s0, s, t0, t)` read off a constant-tail table.
#[derive(Clone, Debug)]
pub struct TailParams<C: Coefficient> {
    pub s0: Polynomial<C>,
    pub s: Polynomial<C>,
    pub t0: Polynomial<C>,
    pub t: Polynomial<C>,
}

impl<C: Coefficient> TailParams<C> {
    pub fn from_table(w: &WeightTable<C>) -> Self {
        TailParams { s0: w.level[0].clone(), s: w.level[1].clone(), t0: w.down[0].clone(), t: w.down[1].clone() }
    }

    /// Weights `s0, s, s, ...` and `t0, t, t, ...` of length `len`.
    pub fn table(&self, len: usize) -> WeightTable<C> {
        let pick = |first: &Polynomial<C>, rest: &Polynomial<C>| {
            (0..len).map(|i| if i == 0 { first.clone() } else { rest.clone() }).collect()
        };
        WeightTable { mode: crate::weights::Mode::Motzkin, level: pick(&self.s0, &self.s), down: pick(&self.t0, &self.t) }
    }

    fn ds(&self) -> Polynomial<C> {
        &self.s - &self.s0
    }

    fn dt(&self) -> Polynomial<C> {
        &self.t - &self.t0
    }
}

/// The six-bracket numerator for two roots, with
/// `[i,j] = S_i(a+s) S_j(b+s) - S_j(a+s) S_i(b+s)`; valid for `n >= 1`.
pub fn two_root_numerator<C: Coefficient>(p: &TailParams<C>, a: &Polynomial<C>, b: &Polynomial<C>, n: usize) -> Polynomial<C> {
    let sa = ScaledChebyshev::new(a + &p.s, p.t.clone(), n + 1);
    let sb = ScaledChebyshev::new(b + &p.s, p.t.clone(), n + 1);
    let br = |i: i64, j: i64| sa.get(i) * sb.get(j) - sa.get(j) * sb.get(i);
    let (ds, dt) = (p.ds(), p.dt());
    let n = n as i64;
    br(n + 1, n) - &ds * br(n + 1, n - 1) + (&ds * &ds - &dt) * br(n, n - 1) + &dt * br(n + 1, n - 2)
        - &ds * &dt * br(n, n - 2)
        + &dt * &dt * br(n - 1, n - 2)
}

/// Umbral numerator for `d` roots: the product over `pairs` of `(U_i - U_j)`
/// times `prod_i (1 - (s-s0) t^{-1/2} U_i^{-1} + (t-t0) t^{-1} U_i^{-2}) U_i^n`,
/// scaled by `t^{(dn + #pairs)/2}`, with `U_i^k` read as `U_k((a_i+s)/(2 sqrt t))`.
///
/// Each factor is expanded with a marker `u` for `sqrt t`; a monomial
/// `u^p prod U_i^{b_i}` becomes `t^{r/2} prod S_{b_i+n-2}(a_i+s, t)` with
/// `r = #pairs + p - sum b_i`, which must be even and non-negative.
pub fn umbral_numerator<C: Coefficient>(
    p: &TailParams<C>,
    roots: &[Polynomial<C>],
    pairs: &[(usize, usize)],
    n: usize,
) -> Result<Polynomial<C>> {
    if n == 0 {
        return Err(Error::Precondition("the umbral numerator needs n >= 1".into()));
    }
    let d = roots.len();
    // (exponents of U_1..U_d, exponent of u) -> coefficient
    let mut terms: BTreeMap<(Vec<u32>, u32), Polynomial<C>> = BTreeMap::new();
    terms.insert((vec![0; d], 0), Polynomial::one());
    let add = |map: &mut BTreeMap<(Vec<u32>, u32), Polynomial<C>>, key, c: Polynomial<C>| {
        let e = map.entry(key).or_insert_with(Polynomial::zero);
        *e += c;
    };
    for &(i, j) in pairs {
        let mut next = BTreeMap::new();
        for ((b, u), c) in &terms {
            let mut bi = b.clone();
            bi[i] += 1;
            add(&mut next, (bi, *u), c.clone());
            let mut bj = b.clone();
            bj[j] += 1;
            add(&mut next, (bj, *u), -c);
        }
        terms = next;
    }
    let factor = [(2u32, 2u32, Polynomial::one()), (1, 1, -p.ds()), (0, 0, p.dt())];
    for i in 0..d {
        let mut next = BTreeMap::new();
        for ((b, u), c) in &terms {
            for (db, du, fc) in &factor {
                if fc.is_zero() {
                    continue;
                }
                let mut bi = b.clone();
                bi[i] += db;
                add(&mut next, (bi, u + du), c * fc);
            }
        }
        terms = next;
    }
    let top = n + pairs.len() + 2;
    let cheb: Vec<ScaledChebyshev<C>> = roots.iter().map(|a| ScaledChebyshev::new(a + &p.s, p.t.clone(), top)).collect();
    let mut total = Polynomial::zero();
    for ((b, u), c) in terms {
        if c.is_zero() {
            continue;
        }
        let r = pairs.len() as i64 + u as i64 - b.iter().map(|&x| x as i64).sum::<i64>();
        if r < 0 || r % 2 != 0 {
            return Err(Error::OddSqrtPower(r));
        }
        let mut term = c * p.t.pow((r / 2) as u32);
        for (i, &bi) in b.iter().enumerate() {
            term = term * cheb[i].get(bi as i64 + n as i64 - 2);
        }
        total += term;
    }
    Ok(total)
}

/// `prod_{(i,j) in pairs} (a_i - a_j)`.
pub fn vandermonde<C: Coefficient>(roots: &[Polynomial<C>], pairs: &[(usize, usize)]) -> Polynomial<C> {
    pairs.iter().map(|&(i, j)| &roots[i] - &roots[j]).product()
}

/// All pairs `i < j`.
pub fn ordered_pairs(d: usize) -> Vec<(usize, usize)> {
    (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect()
}

/// The cyclic order `(a-b)(b-c)(c-a)` used for three roots.
pub const CYCLIC: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

/// Both closed forms of `f_n` against its recurrence.
pub(crate) struct ConstantTailF;

impl Recipe for ConstantTailF {
    fn table_len(&self, n: usize) -> usize {
        n + 2
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let p = TailParams::from_table(w);
        let x = &roots[0];
        let f = f_sequence(w, x, n).pop().unwrap();
        let closed = f_closed_form_at(&p.s0, &p.s, &p.t0, &p.t, n as i64, x).unwrap();
        ck.eq(n, "three-term", &f, &closed);
        if n >= 1 {
            let scaled = f_closed_form_times_t(&p.s0, &p.s, &p.t0, &p.t, n as i64, x).unwrap();
            ck.eq(n, "two-term", &(&p.t * &f), &scaled);
        }
    }
}

pub(crate) struct ConstantTailTwoRoot;

impl Recipe for ConstantTailTwoRoot {
    fn table_len(&self, n: usize) -> usize {
        2 * n + 2
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let p = TailParams::from_table(w);
        let (a, b) = (&roots[0], &roots[1]);
        let seq = moments_from(w, 2 * n + 1);
        let den = det_of(&seq, 0, &[], n);
        let lhs = det_of(&seq, 0, roots, n);
        let num = two_root_numerator(&p, a, b, n);
        let diff = a - b;
        if diff.is_zero() {
            ck.fail(n, "distinct-roots", "the roots coincide".into());
            return;
        }
        ck.eq(n, "cross-multiplied", &(&lhs * &diff), &(&num * &den));
        match num.try_exact_div(&diff) {
            Some(q) => {
                ck.eq(n, "quotient", &(&q * &den), &lhs);
                ck.eq(n, "sum-form", &q, &two_root_sum(w, a, b, n));
            }
            None => ck.fail(n, "divisibility", format!("numerator not divisible by {diff}")),
        }
        let zero = Polynomial::zero();
        let at_zero = two_root_numerator(&p, a, &zero, n);
        let one_root = det_of(&seq, 1, std::slice::from_ref(a), n);
        ck.eq(n, "beta-zero", &(&one_root * a), &(&at_zero * &den));
    }
}

pub(crate) struct ConstantTailThreeRoot;

impl Recipe for ConstantTailThreeRoot {
    fn table_len(&self, n: usize) -> usize {
        2 * n + 4
    }

    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize) {
        let p = TailParams::from_table(w);
        let num = match umbral_numerator(&p, roots, &CYCLIC, n) {
            Ok(num) => num,
            Err(e) => {
                ck.fail(n, "sqrt-evenness", e.to_string());
                return;
            }
        };
        ck.note("every residual power of sqrt(t) in the umbral expansion was even");
        let v = vandermonde(roots, &CYCLIC);
        if v.is_zero() {
            ck.fail(n, "distinct-roots", "two roots coincide".into());
            return;
        }
        let seq = moments_from(w, 2 * n + 2);
        let den = det_of(&seq, 0, &[], n);
        let lhs = det_of(&seq, 0, roots, n);
        ck.eq(n, "cross-multiplied", &(&lhs * &v), &(&num * &den));
        match num.try_exact_div(&v) {
            Some(q) => {
                ck.eq(n, "double-sum", &q, &three_root_sum(w, &roots[0], &roots[1], &roots[2], n));
            }
            None => ck.fail(n, "divisibility", "numerator not divisible by the Vandermonde product".into()),
        }
    }
}

/// `U_n` at the special points against the scaled recurrence: with
/// `sqrt t = i` for `t = -1`, `U_n(a/(2 sqrt t)) = S_n(a, t) / i^n`.
pub(crate) fn chebyshev_values(ck: &mut Checker, n: usize) {
    let cases: [(SpecialPoint, i64, i64); 6] = [
        (SpecialPoint::Zero, 0, 1),
        (SpecialPoint::Half, 1, 1),
        (SpecialPoint::One, 2, 1),
        (SpecialPoint::ThreeHalves, 3, 1),
        (SpecialPoint::HalfI, -1, -1),
        (SpecialPoint::I, -2, -1),
    ];
    for (point, a, t) in cases {
        let s = ScaledChebyshev::<BigInt>::new(a.into(), t.into(), n).get(n as i64);
        let g = chebyshev_special(point, n as i64).unwrap();
        // S_n = value * i^{i_power} * (sqrt t)^n.
        let quarter = (g.i_power as usize + if t < 0 { n } else { 0 }) % 4;
        let expected = match quarter {
            0 => Polynomial::constant(g.value.clone()),
            2 => Polynomial::constant(-g.value.clone()),
            _ if g.value == BigInt::from(0) => Polynomial::zero(),
            _ => {
                ck.fail(n, &format!("{point:?}"), format!("non-real value {} i^{}", g.value, g.i_power));
                continue;
            }
        };
        ck.eq(n, &format!("{point:?}"), &s, &expected);
    }
}
