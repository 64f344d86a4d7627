//! Polynomial sequences attached to weight systems.
//!
//! * `f_n(x) = (x + s_{n-1}) f_{n-1}(x) - t_{n-2} f_{n-2}(x)`, `f_0 = 1`, `f_{-1} = 0`.
//! * `g_{2n} = x g_{2n-1} + T_{2n-2} g_{2n-2}`, `g_{2n+1} = g_{2n} + T_{2n-1} g_{2n-1}`,
//!   `g_0 = 1`, `g_{-1} = 0`, `T_{-1} = 0`.
//! * Chebyshev polynomials of the second kind `U_n`, and the scaled form
//!   `S_n(a, t) = t^{n/2} U_n(a / (2 sqrt t))`, which satisfies
//!   `S_{n+1} = a S_n - t S_{n-1}` and involves no square roots.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Coefficient, Polynomial, Var};
use crate::weights::{Mode, WeightSystem, WeightTable};
use crate::Poly;

/// `f_0(x)..=f_{n_max}(x)`. Needs `s_0..s_{n_max-1}` and `t_0..t_{n_max-2}`.
pub fn f_sequence<C: Coefficient>(w: &WeightTable<C>, x: &Polynomial<C>, n_max: usize) -> Vec<Polynomial<C>> {
    let mut out = vec![Polynomial::one()];
    let mut prev = Polynomial::zero();
    for n in 1..=n_max {
        let cur = &out[n - 1];
        let mut next = &(x + &w.level[n - 1]) * cur;
        if n >= 2 {
            next -= &w.down[n - 2] * &prev;
        }
        prev = cur.clone();
        out.push(next);
    }
    out
}

/// `g_0(x)..=g_{n_max}(x)` for Dyck weights `T_i = w.down[i]`.
pub fn g_sequence<C: Coefficient>(w: &WeightTable<C>, x: &Polynomial<C>, n_max: usize) -> Vec<Polynomial<C>> {
    let big_t = |k: i64| if k < 0 { Polynomial::zero() } else { w.down[k as usize].clone() };
    let mut g: Vec<Polynomial<C>> = vec![Polynomial::one()];
    let at = |g: &Vec<Polynomial<C>>, k: i64| if k < 0 { Polynomial::zero() } else { g[k as usize].clone() };
    for m in 1..=n_max as i64 {
        let next = if m % 2 == 0 {
            x * &at(&g, m - 1) + big_t(m - 2) * at(&g, m - 2)
        } else {
            at(&g, m - 1) + big_t(m - 2) * at(&g, m - 2)
        };
        g.push(next);
    }
    g
}

fn check_index(n: i64, min: i64, what: &str) -> Result<()> {
    if n < min {
        Err(Error::Domain(format!("{what} is defined for n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `f_n` in the indeterminate `var`, for `n >= -1`.
pub fn f_poly(ws: &WeightSystem, n: i64, var: Var) -> Result<Poly> {
    if ws.mode() != Mode::Motzkin {
        return Err(Error::ModeMismatch { expected: Mode::Motzkin, found: ws.mode() });
    }
    check_index(n, -1, "f_n")?;
    if n == -1 {
        return Ok(Poly::zero());
    }
    let n = n as usize;
    Ok(f_sequence(&ws.table(n), &Poly::var(var), n).pop().unwrap())
}

/// `g_n` in the indeterminate `var`, for `n >= -1`.
pub fn g_poly(ws: &WeightSystem, n: i64, var: Var) -> Result<Poly> {
    if ws.mode() != Mode::Dyck {
        return Err(Error::ModeMismatch { expected: Mode::Dyck, found: ws.mode() });
    }
    check_index(n, -1, "g_n")?;
    if n == -1 {
        return Ok(Poly::zero());
    }
    let n = n as usize;
    Ok(g_sequence(&ws.table(n), &Poly::var(var), n).pop().unwrap())
}

/// `U_n(var)` for `n >= -2`, with `U_{-1} = 0` and `U_{-2} = -1`.
pub fn chebyshev_u(n: i64, var: Var) -> Result<Poly> {
    check_index(n, -2, "U_n")?;
    let two_x = Poly::var(var).scale(&BigInt::from(2));
    Ok(scaled_chebyshev_at(n, &two_x, &Poly::one()).unwrap_or_else(|_| Poly::from(-1)))
}

/// `S_n(a, t)` in the indeterminates `a_var`, `t_var`, for `n >= -1`.
pub fn scaled_chebyshev(n: i64, a_var: Var, t_var: Var) -> Result<Poly> {
    scaled_chebyshev_at(n, &Poly::var(a_var), &Poly::var(t_var))
}

/// `S_n(a, t)` for arbitrary `a`, `t`. `S_{-2} = -1/t` is not a polynomial and is refused.
pub fn scaled_chebyshev_at<C: Coefficient>(n: i64, a: &Polynomial<C>, t: &Polynomial<C>) -> Result<Polynomial<C>> {
    check_index(n, -1, "S_n")?;
    Ok(ScaledChebyshev::new(a.clone(), t.clone(), n.max(0) as usize).get(n))
}

/// `S_{-1}..=S_{n_max}` for fixed `a`, `t`.
#[derive(Clone, Debug)]
pub struct ScaledChebyshev<C: Coefficient> {
    values: Vec<Polynomial<C>>,
}

impl<C: Coefficient> ScaledChebyshev<C> {
    pub fn new(a: Polynomial<C>, t: Polynomial<C>, n_max: usize) -> Self {
        let mut values = vec![Polynomial::zero(), Polynomial::one()];
        for k in 1..=n_max {
            let next = &a * &values[k] - &t * &values[k - 1];
            values.push(next);
        }
        ScaledChebyshev { values }
    }

    /// `S_n` for `-1 <= n <= n_max`.
    pub fn get(&self, n: i64) -> Polynomial<C> {
        assert!(n >= -1, "S_{n} is not a polynomial");
        self.values[(n + 1) as usize].clone()
    }
}

/// Constant-tail closed form `S_n - (s - s0) S_{n-1} + (t - t0) S_{n-2}` at
/// `a = var + s`; `f_0 = 1` and `f_1 = var + s0`.
pub fn f_closed_form(s0: &Poly, s: &Poly, t0: &Poly, t: &Poly, n: i64, var: Var) -> Result<Poly> {
    f_closed_form_at(s0, s, t0, t, n, &Poly::var(var))
}

pub fn f_closed_form_at<C: Coefficient>(
    s0: &Polynomial<C>,
    s: &Polynomial<C>,
    t0: &Polynomial<C>,
    t: &Polynomial<C>,
    n: i64,
    x: &Polynomial<C>,
) -> Result<Polynomial<C>> {
    check_index(n, 0, "closed-form f_n")?;
    match n {
        0 => Ok(Polynomial::one()),
        1 => Ok(x + s0),
        _ => {
            let sc = ScaledChebyshev::new(x + s, t.clone(), n as usize);
            Ok(sc.get(n) - (s - s0) * sc.get(n - 1) + (t - t0) * sc.get(n - 2))
        }
    }
}

/// The other constant-tail closed form, multiplied through by `t`:
/// `t f_n = t0 S_n + ((t - t0)(x + s) - t (s - s0)) S_{n-1}` for `n >= 1`.
pub fn f_closed_form_times_t<C: Coefficient>(
    s0: &Polynomial<C>,
    s: &Polynomial<C>,
    t0: &Polynomial<C>,
    t: &Polynomial<C>,
    n: i64,
    x: &Polynomial<C>,
) -> Result<Polynomial<C>> {
    check_index(n, 1, "closed-form t*f_n")?;
    let a = x + s;
    let sc = ScaledChebyshev::new(a.clone(), t.clone(), n as usize);
    Ok(t0 * &sc.get(n) + ((t - t0) * &a - t * &(s - s0)) * sc.get(n - 1))
}

/// Points where `U_n` has a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialPoint {
    Zero,
    Half,
    One,
    ThreeHalves,
    HalfI,
    I,
}

impl std::str::FromStr for SpecialPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "0" => SpecialPoint::Zero,
            "1/2" => SpecialPoint::Half,
            "1" => SpecialPoint::One,
            "3/2" => SpecialPoint::ThreeHalves,
            "i/2" => SpecialPoint::HalfI,
            "i" => SpecialPoint::I,
            other => return Err(Error::Domain(format!("no closed form for U_n at {other}"))),
        })
    }
}

/// `value * i^i_power`, with `i_power` in `0..4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianValue {
    pub value: BigInt,
    pub i_power: u8,
}

impl GaussianValue {
    fn real(value: BigInt) -> Self {
        GaussianValue { value, i_power: 0 }
    }
}

/// `U_n(point)` from its closed form.
pub fn chebyshev_special(point: SpecialPoint, n: i64) -> Result<GaussianValue> {
    check_index(n, 0, "U_n special value")?;
    let ipow = (n.rem_euclid(4)) as u8;
    Ok(match point {
        SpecialPoint::Zero => GaussianValue::real(if n % 2 == 1 {
            BigInt::zero()
        } else if (n / 2) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }),
        SpecialPoint::Half => GaussianValue::real(BigInt::from(match n % 6 {
            0 | 1 => 1,
            2 | 5 => 0,
            _ => -1,
        })),
        SpecialPoint::One => GaussianValue::real(BigInt::from(n + 1)),
        SpecialPoint::ThreeHalves => GaussianValue::real(reference_sequence(Sequence::Fibonacci, (2 * n + 2) as usize)),
        SpecialPoint::HalfI => GaussianValue { value: reference_sequence(Sequence::Fibonacci, (n + 1) as usize), i_power: ipow },
        SpecialPoint::I => GaussianValue { value: reference_sequence(Sequence::Pell, (n + 1) as usize), i_power: ipow },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    Fibonacci,
    Lucas,
    Pell,
    Bell,
    Factorial,
    Motzkin,
    Catalan,
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn linear2(a0: i64, a1: i64, c: i64, n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(a0), BigInt::from(a1));
    for _ in 0..n {
        let next = &b * c + &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Members of classical integer sequences, computed from their definitions.
pub fn reference_sequence(kind: Sequence, n: usize) -> BigInt {
    let nn = n as u64;
    match kind {
        Sequence::Fibonacci => linear2(0, 1, 1, n),
        Sequence::Lucas => linear2(2, 1, 1, n),
        Sequence::Pell => linear2(0, 1, 2, n),
        Sequence::Factorial => (1..=nn).map(BigInt::from).product(),
        Sequence::Catalan => binomial(2 * nn, nn) / BigInt::from(nn + 1),
        Sequence::Motzkin => (0..=nn / 2).map(|k| binomial(nn, 2 * k) * binomial(2 * k, k) / BigInt::from(k + 1)).sum(),
        Sequence::Bell => {
            // Stirling numbers of the second kind, row by row.
            let mut row = vec![BigInt::one()];
            for m in 1..=n {
                let mut next = vec![BigInt::zero(); m + 1];
                for k in 1..=m {
                    let stay = if k < m { &row[k] * BigInt::from(k) } else { BigInt::zero() };
                    next[k] = &row[k - 1] + stay;
                }
                row = next;
            }
            row.into_iter().sum()
        }
    }
}
