//! Closed-form evaluations for specific sequences. Left sides are determinants
//! of explicitly defined sequences (binomial formulas, q-binomial sums), not of
//! path moments; the path moments are compared with those sequences separately.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::charpoly::{reference_sequence, ScaledChebyshev, Sequence};
use crate::hankel::build_hankel;
use crate::hankel::HankelSpec;
use crate::moments::moments;
use crate::weights::{catalog, q_binomial, q_pochhammer, rogers_szego, CatalogId, WeightSystem};
use crate::Poly;

use super::general::det_of;
use super::report::Checker;

pub(crate) struct Named {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub n_min: usize,
    pub n_max: usize,
    pub check: fn(&mut Checker, usize),
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(k: usize) -> BigInt {
    binom(2 * k, k) / (k + 1)
}

fn shifted_catalan(k: usize) -> BigInt {
    catalan(k + 1)
}

fn motzkin(k: usize) -> BigInt {
    (0..=k / 2).map(|i| binom(k, 2 * i) * catalan(i)).sum()
}

fn central(k: usize) -> BigInt {
    binom(2 * k, k)
}

fn shifted_central(k: usize) -> BigInt {
    binom(2 * k + 2, k + 1)
}

fn middle(k: usize) -> BigInt {
    binom(k, k / 2)
}

/// `[k even] (-1)^{k/2} C_{k/2}`.
fn alternating(k: usize) -> BigInt {
    if k % 2 == 1 {
        BigInt::zero()
    } else if (k / 2) % 2 == 0 {
        catalan(k / 2)
    } else {
        -catalan(k / 2)
    }
}

fn fib(k: usize) -> BigInt {
    reference_sequence(Sequence::Fibonacci, k)
}

fn lucas(k: usize) -> BigInt {
    reference_sequence(Sequence::Lucas, k)
}

fn sign(odd: bool) -> BigInt {
    if odd {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

fn c2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn c3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn int(v: impl Into<BigInt>) -> Poly {
    Poly::constant(v.into())
}

fn seq(f: fn(usize) -> BigInt, len: usize) -> Vec<Poly> {
    (0..len).map(|k| int(f(k))).collect()
}

/// `det(sum_k e_{d-k}(roots) f(i+j+k))` for integer roots.
fn int_det(f: fn(usize) -> BigInt, roots: &[i64], n: usize) -> Poly {
    let roots: Vec<Poly> = roots.iter().map(|&r| Poly::from(r)).collect();
    det_of(&seq(f, 2 * n + roots.len()), 0, &roots, n)
}

/// Compares two sequences, reporting the first index where they differ.
fn seq_eq(ck: &mut Checker, n: usize, check: &str, got: &[Poly], want: &[Poly]) {
    if got.len() != want.len() {
        ck.fail(n, check, format!("lengths {} and {}", got.len(), want.len()));
        return;
    }
    let at = (0..got.len()).find(|&k| got[k] != want[k]).unwrap_or(got.len() - 1);
    ck.eq(n, &format!("{check}[{at}]"), &got[at], &want[at]);
}

/// Compares the first terms of a catalog moment sequence, times `scale`, with `f`.
fn sequence_check(ck: &mut Checker, n: usize, ws: &WeightSystem, f: fn(usize) -> BigInt, scale: i64) {
    let len = 2 * n + 3;
    let m: Vec<Poly> = moments(ws, len).into_iter().map(|p| p * Poly::from(scale)).collect();
    seq_eq(ck, n, "moments", &m, &seq(f, len + 1));
}

fn integer(ck: &mut Checker, n: usize, f: fn(usize) -> BigInt, roots: &[i64], scale: BigInt, rhs: BigInt) {
    ck.eq(n, "evaluation", &int_det(f, roots, n), &int(scale * rhs));
}

fn sum_of(n: usize, term: impl Fn(usize) -> BigInt) -> BigInt {
    (0..=n).map(term).sum()
}

fn alpha() -> Poly {
    Poly::named("alpha")
}

fn beta() -> Poly {
    Poly::named("beta")
}

/// `S_k(root + offset, 1)` for both roots, i.e. `U_k((root + offset)/2)`.
struct Brackets {
    a: ScaledChebyshev<BigInt>,
    b: ScaledChebyshev<BigInt>,
}

impl Brackets {
    fn new(offset: i64, n: usize) -> Self {
        let mk = |r: Poly| ScaledChebyshev::new(r + Poly::from(offset), Poly::one(), n + 1);
        Brackets { a: mk(alpha()), b: mk(beta()) }
    }

    /// `U_i(x) U_j(y) - U_j(x) U_i(y)`.
    fn get(&self, i: i64, j: i64) -> Poly {
        self.a.get(i) * self.b.get(j) - self.a.get(j) * self.b.get(i)
    }
}

/// `det * (alpha - beta) = scale * num` for symbolic roots.
fn two_root_closed(ck: &mut Checker, n: usize, f: fn(usize) -> BigInt, scale: BigInt, num: Poly) {
    let lhs = det_of(&seq(f, 2 * n + 2), 0, &[alpha(), beta()], n) * (alpha() - beta());
    ck.eq(n, "closed-form", &lhs, &(num * int(scale)));
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn q() -> Poly {
    Poly::named("q")
}

fn qq(k: usize) -> Poly {
    q_pochhammer(&q(), k as i64).unwrap()
}

fn qbin(n: usize, k: usize) -> Poly {
    q_binomial(n as i64, k as i64).unwrap()
}

fn qpow(e: usize) -> Poly {
    q().pow(e as u32)
}

fn qq_product(n: usize) -> Poly {
    (1..n).map(qq).product()
}

fn rs(k: usize) -> Poly {
    rogers_szego(k as i64).unwrap()
}

/// `sum_k [n,k] sum_j q^{C(j,2)+C(k-j,2)} [k,j] t^j x^{n-k}`.
fn rs_f(n: usize, x: &Poly) -> Poly {
    let t = Poly::named("t");
    (0..=n)
        .map(|k| {
            let inner: Poly = (0..=k).map(|j| qpow(c2(j) + c2(k - j)) * qbin(k, j) * t.pow(j as u32)).sum();
            qbin(n, k) * inner * x.pow((n - k) as u32)
        })
        .sum()
}

/// `(-t)^{C(n,2)} q^{C(n,3)} prod_{i<n} (q;q)_i`.
fn rs_den(n: usize) -> Poly {
    (-Poly::named("t")).pow(c2(n) as u32) * qpow(c3(n)) * qq_product(n)
}

fn rs_seq(len: usize, t: Option<i64>) -> Vec<Poly> {
    (0..len)
        .map(|k| match t {
            Some(v) => rs(k).subs(crate::Var::new("t"), &Poly::from(v)),
            None => rs(k),
        })
        .collect()
}

fn q_powers_f(j: usize, x: &Poly) -> Poly {
    (0..=j).map(|k| qbin(j, k) * qpow(j.saturating_sub(1) * k) * x.pow((j - k) as u32)).sum()
}

/// `(q; q^2)_k`.
fn q_odd(k: usize) -> Poly {
    (0..k).map(|i| Poly::one() - qpow(2 * i + 1)).product()
}

fn printed_alternating_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![1, -1, -1, 2, 2],
        vec![-1, -1, 2, 2, -5],
        vec![-1, 2, 2, -5, -5],
        vec![2, 2, -5, -5, 14],
        vec![2, -5, -5, 14, 14],
    ]
}

fn alternating_one_root(ck: &mut Checker, n: usize) {
    let ws = WeightSystem::constant(Poly::zero(), Poly::from(-1));
    sequence_check(ck, n, &ws, alternating, 1);
    let rhs = sign(c2(n) % 2 == 1) * fib(n + 1);
    integer(ck, n, alternating, &[1], BigInt::one(), rhs.clone());
    // The same matrix written with floor indices.
    let floor = |k: usize| {
        let h = (k + 1) / 2;
        sign(h % 2 == 1) * catalan(h)
    };
    let m = crate::hankel::SquareMatrix::from_fn(n, |i, j| int(floor(i + j)));
    ck.eq(n, "floor-form", &crate::hankel::det_bareiss(&m), &int(rhs));
    let spec = HankelSpec::new(0, vec![Poly::one()]);
    let direct = build_hankel(&seq(alternating, 2 * n + 1), &spec, n).unwrap();
    if n == 5 {
        let printed = crate::hankel::SquareMatrix::from_rows(
            printed_alternating_matrix().into_iter().map(|r| r.into_iter().map(Poly::from).collect()).collect(),
        );
        let flat = |m: &crate::hankel::SquareMatrix<Poly>| m.rows().into_iter().flatten().collect::<Vec<_>>();
        seq_eq(ck, n, "displayed-matrix", &flat(&direct), &flat(&printed));
        ck.exhibit("matrix n=5", direct.to_string());
        ck.exhibit("determinant n=5", crate::hankel::det_bareiss(&direct).to_string());
    }
}

fn branch3(n: usize, low: fn(i64) -> i64, mid: fn(i64) -> i64, high: fn(i64) -> i64) -> BigInt {
    // n = 3n0 - 1, 3n0 or 3n0 + 1.
    let n = n as i64;
    BigInt::from(match n.mod_floor(&3) {
        2 => low((n + 1) / 3),
        0 => mid(n / 3),
        _ => high((n - 1) / 3),
    })
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub(crate) static NAMED: &[Named] = &[
    Named {
        id: "catalan-one-root",
        aliases: &["1.1"],
        n_min: 1,
        n_max: 10,
        check: |ck, n| {
            sequence_check(ck, n, &catalog(CatalogId::Ii), catalan, 1);
            integer(ck, n, catalan, &[1], BigInt::one(), fib(2 * n + 1));
        },
    },
    Named {
        id: "shifted-catalan-one-root",
        aliases: &["1.2"],
        n_min: 1,
        n_max: 10,
        check: |ck, n| {
            sequence_check(ck, n, &catalog(CatalogId::Iii), shifted_catalan, 1);
            integer(ck, n, shifted_catalan, &[1], BigInt::one(), fib(2 * n + 2));
        },
    },
    Named {
        id: "catalan-two-root-ones",
        aliases: &["1.3"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, catalan, &[1, 1], BigInt::one(), sum_of(n, |j| fib(2 * j + 1).pow(2))),
    },
    Named {
        id: "shifted-central-binomial-ones",
        aliases: &["1.4"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| {
            sequence_check(ck, n, &catalog(CatalogId::Xiv), shifted_central, 2);
            integer(ck, n, shifted_central, &[1, 1], pow2(n), sum_of(n, |j| lucas(2 * j + 1).pow(2)));
        },
    },
    Named {
        id: "shifted-catalan-two-root-ones",
        aliases: &["4.12"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, shifted_catalan, &[1, 1], BigInt::one(), sum_of(n, |j| fib(2 * j + 2).pow(2))),
    },
    Named {
        id: "catalan-two-root-minus-ones",
        aliases: &["4.13"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, catalan, &[-1, -1], BigInt::one(), BigInt::from((2 * n + 3) / 3)),
    },
    Named {
        id: "shifted-catalan-two-root-minus-ones",
        aliases: &["4.14"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, shifted_catalan, &[-1, -1], BigInt::one(), BigInt::from((2 * n + 4) / 3)),
    },
    Named {
        id: "catalan-two-root",
        aliases: &["4.15"],
        n_min: 1,
        n_max: 6,
        check: |ck, n| {
            let b = Brackets::new(2, n);
            let n = n as i64;
            let num = b.get(n + 1, n) - b.get(n + 1, n - 1) + b.get(n, n - 1);
            two_root_closed(ck, n as usize, catalan, BigInt::one(), num);
        },
    },
    Named {
        id: "shifted-catalan-two-root",
        aliases: &["4.16"],
        n_min: 1,
        n_max: 6,
        check: |ck, n| {
            let b = Brackets::new(2, n);
            let n = n as i64;
            two_root_closed(ck, n as usize, shifted_catalan, BigInt::one(), b.get(n + 1, n));
        },
    },
    Named {
        id: "motzkin-two-root",
        aliases: &["4.17"],
        n_min: 1,
        n_max: 6,
        check: |ck, n| {
            sequence_check(ck, n, &catalog(CatalogId::I), motzkin, 1);
            let b = Brackets::new(1, n);
            let rhs: Poly = (0..=n as i64).map(|j| b.a.get(j) * b.b.get(j)).sum();
            ck.eq(n, "closed-form", &det_of(&seq(motzkin, 2 * n + 2), 0, &[alpha(), beta()], n), &rhs);
        },
    },
    Named {
        id: "motzkin-two-root-ones",
        aliases: &["4.18"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, motzkin, &[1, 1], BigInt::one(), BigInt::from((n + 1) * (n + 2) * (2 * n + 3) / 6)),
    },
    Named {
        id: "motzkin-two-root-minus-ones",
        aliases: &["4.19"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, motzkin, &[-1, -1], BigInt::one(), BigInt::from((n + 2) / 2)),
    },
    Named {
        id: "motzkin-one-root-two",
        aliases: &["4.20"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, motzkin, &[2], BigInt::one(), fib(2 * n + 2)),
    },
    Named {
        id: "motzkin-two-root-twos",
        aliases: &["4.21"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, motzkin, &[2, 2], BigInt::one(), sum_of(n, |j| fib(2 * j + 2).pow(2))),
    },
    Named {
        id: "central-binomial-two-root",
        aliases: &["4.22"],
        n_min: 1,
        n_max: 6,
        check: |ck, n| {
            sequence_check(ck, n, &catalog(CatalogId::Iv), central, 1);
            let b = Brackets::new(2, n);
            let m = n as i64;
            let num = b.get(m + 1, m) + b.get(m, m - 1) - b.get(m + 1, m - 2) + b.get(m - 1, m - 2);
            two_root_closed(ck, n, central, pow2(n - 1), num);
        },
    },
    Named {
        id: "central-binomial-two-root-ones",
        aliases: &["4.23"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| {
            let rhs = sum_of(n, |j| lucas(2 * j).pow(2)) - 2;
            integer(ck, n, central, &[1, 1], pow2(n - 1), rhs);
        },
    },
    Named {
        id: "shifted-central-binomial-two-root",
        aliases: &["4.24"],
        n_min: 1,
        n_max: 6,
        check: |ck, n| {
            let b = Brackets::new(2, n);
            let m = n as i64;
            let num = b.get(m + 1, m) + b.get(m + 1, m - 1) + b.get(m, m - 1);
            two_root_closed(ck, n, shifted_central, pow2(n), num);
        },
    },
    Named {
        id: "middle-binomial-two-root",
        aliases: &["4.25"],
        n_min: 1,
        n_max: 6,
        check: |ck, n| {
            sequence_check(ck, n, &catalog(CatalogId::Xv), middle, 1);
            let b = Brackets::new(0, n);
            let m = n as i64;
            let num = b.get(m + 1, m) + b.get(m + 1, m - 1) + b.get(m, m - 1);
            two_root_closed(ck, n, middle, BigInt::one(), num);
        },
    },
    Named {
        id: "middle-binomial-two-root-ones",
        aliases: &["4.26"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| {
            let rhs = match n % 3 {
                0 => 2 * n + 1,
                1 => 2 * n + 3,
                _ => 2 * n + 2,
            };
            ck.note("for n = 2 (mod 3) the value is 2n+2, the sum of f_j(1)^2 over j <= n; 2n+4 is off by two");
            integer(ck, n, middle, &[1, 1], BigInt::one(), BigInt::from(rhs));
        },
    },
    Named {
        id: "middle-binomial-two-root-minus-ones",
        aliases: &["4.27"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, middle, &[-1, -1], BigInt::one(), BigInt::from((2 * n + 3) / 3)),
    },
    Named {
        id: "middle-binomial-one-root-two",
        aliases: &["4.28"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, middle, &[2], BigInt::one(), BigInt::from(2 * n + 1)),
    },
    Named {
        id: "middle-binomial-one-root-three",
        aliases: &["4.29"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| integer(ck, n, middle, &[3], BigInt::one(), lucas(2 * n + 1)),
    },
    Named {
        id: "alternating-catalan-one-root",
        aliases: &["4.30"],
        n_min: 1,
        n_max: 8,
        check: alternating_one_root,
    },
    Named {
        id: "alternating-catalan-two-root",
        aliases: &["4.31"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| {
            let rhs = sign(c2(n + 1) % 2 == 1) * sum_of(n, |j| sign(j % 2 == 1) * fib(j + 1).pow(2));
            integer(ck, n, alternating, &[1, 1], BigInt::one(), rhs);
        },
    },
    Named {
        id: "rogers-szego-moments",
        aliases: &["rogers-szego"],
        n_min: 1,
        n_max: 8,
        check: |ck, n| {
            let m = moments(&catalog(CatalogId::RogersSzego), n);
            ck.eq(n, "moment", &m[n], &rs(n));
        },
    },
    Named {
        id: "rogers-szego-one-root",
        aliases: &["4.34"],
        n_min: 1,
        n_max: 4,
        check: |ck, n| {
            let r = rs_seq(2 * n + 1, None);
            ck.eq(n, "denominator", &det_of(&r, 0, &[], n), &rs_den(n));
            ck.eq(n, "evaluation", &det_of(&r, 0, &[alpha()], n), &(rs_den(n) * rs_f(n, &alpha())));
        },
    },
    Named {
        id: "rogers-szego-two-root",
        aliases: &["4.35"],
        n_min: 1,
        n_max: 4,
        check: |ck, n| {
            ck.note("middle entry read as (alpha+beta) r_{i+j+1}(t)");
            let r = rs_seq(2 * n + 2, None);
            let t = Poly::named("t");
            let rhs: Poly = (0..=n)
                .map(|j| {
                    rs_f(j, &alpha())
                        * rs_f(j, &beta())
                        * (-&t).pow((n - j) as u32)
                        * qpow(c2(n) - c2(j))
                        * q_pochhammer(&qpow(j + 1), (n - j) as i64).unwrap()
                })
                .sum();
            ck.eq(n, "evaluation", &det_of(&r, 0, &[alpha(), beta()], n), &(rs_den(n) * rhs));
        },
    },
    Named {
        id: "rogers-szego-minus-one",
        aliases: &["4.36"],
        n_min: 1,
        n_max: 4,
        check: |ck, n| {
            let r = rs_seq(2 * n + 1, Some(-1));
            let den = qpow(c3(n)) * qq_product(n);
            ck.eq(n, "denominator", &det_of(&r, 0, &[], n), &den);
            let rhs: Poly = (0..=n / 2)
                .map(|k| {
                    qbin(n, 2 * k) * Poly::from(sgn(k as i64)) * qpow(k * k - k) * q_odd(k) * alpha().pow((n - 2 * k) as u32)
                })
                .sum();
            ck.eq(n, "evaluation", &det_of(&r, 0, &[alpha()], n), &(den * rhs));
        },
    },
    Named {
        id: "rogers-szego-minus-one-ones",
        aliases: &["4.37"],
        n_min: 1,
        n_max: 5,
        check: |ck, n| {
            let r = rs_seq(2 * n + 1, Some(-1));
            let den = qpow(c3(n)) * qq_product(n);
            ck.eq(n, "evaluation", &det_of(&r, 0, &[Poly::one()], n), &(den * qpow(c2(n))));
        },
    },
    Named {
        id: "q-powers-two-root",
        aliases: &["4.38"],
        n_min: 1,
        n_max: 4,
        check: |ck, n| {
            let len = 2 * n + 2;
            let m: Vec<Poly> = (0..len).map(|k| qpow(c2(k))).collect();
            seq_eq(ck, n, "moments", &moments(&catalog(CatalogId::QPowers), len - 1), &m);
            let den = Poly::from(sgn(c2(n) as i64)) * qpow(3 * c3(n)) * qq_product(n);
            ck.eq(n, "denominator", &det_of(&m, 0, &[], n), &den);
            let rhs: Poly = (0..=n)
                .map(|j| {
                    Poly::from(sgn((n - j) as i64))
                        * qpow(3 * c2(n) - 3 * c2(j))
                        * q_pochhammer(&qpow(j + 1), (n - j) as i64).unwrap()
                        * q_powers_f(j, &alpha())
                        * q_powers_f(j, &beta())
                })
                .sum();
            ck.eq(n, "evaluation", &det_of(&m, 0, &[alpha(), beta()], n), &(den * rhs));
        },
    },
    Named {
        id: "q-dyck-even",
        aliases: &["4.39"],
        n_min: 1,
        n_max: 4,
        check: |ck, n| {
            ck.note("matrix entries read as (q;q)_{i+j} + (q;q)_{i+j+1}; the floor-index entries as displayed do not give this ratio");
            let c: Vec<Poly> = (0..2 * n + 1).map(qq).collect();
            seq_eq(ck, n, "moments", &moments(&catalog(CatalogId::QDyck), 2 * n), &c);
            let den = qpow(n * (n - 1) * (2 * n - 1) / 6) * qq_product(n).pow(2);
            ck.eq(n, "denominator", &det_of(&c, 0, &[], n), &den);
            let rhs: Poly = (0..=n).map(|k| qpow(c2(k)) * qq(k) * qbin(n, k).pow(2)).sum();
            ck.eq(n, "evaluation", &det_of(&c, 0, &[Poly::one()], n), &(den * rhs));
        },
    },
    Named {
        id: "q-dyck-odd",
        aliases: &["4.40"],
        n_min: 1,
        n_max: 4,
        check: |ck, n| {
            ck.note("matrix entries read as (q;q)_{i+j+1} + (q;q)_{i+j+2}; the floor-index entries as displayed do not give this ratio");
            let c: Vec<Poly> = (0..2 * n + 2).map(qq).collect();
            let den = qpow(2 * c3(n + 1)) * qq(n) * qq_product(n).pow(2);
            ck.eq(n, "denominator", &det_of(&c, 1, &[], n), &den);
            let rhs: Poly = (0..=n).map(|k| qpow(c2(k)) * qq(k) * qbin(n + 1, k) * qbin(n, k)).sum();
            ck.eq(n, "evaluation", &det_of(&c, 1, &[Poly::one()], n), &(den * rhs));
        },
    },
    Named {
        id: "motzkin-three-root-ones",
        aliases: &["7.3"],
        n_min: 1,
        n_max: 7,
        check: |ck, n| {
            let v = (n + 1) * (n + 2) * (n + 2) * (n + 3) * (2 * n + 3) * (2 * n + 5) / 180;
            integer(ck, n, motzkin, &[1, 1, 1], BigInt::one(), BigInt::from(v));
            let shifted = |k: usize| catalan(k + 4);
            ck.eq(n, "catalan-coincidence", &int_det(shifted, &[], n), &int(BigInt::from(v)));
        },
    },
    Named {
        id: "motzkin-three-root-minus-ones",
        aliases: &["7.4"],
        n_min: 1,
        n_max: 7,
        check: |ck, n| {
            let v = if n % 2 == 0 { sgn((n / 2) as i64) * ((n / 2 + 1) * (n / 2 + 1)) as i64 } else { 0 };
            integer(ck, n, motzkin, &[-1, -1, -1], BigInt::one(), BigInt::from(v));
        },
    },
    Named {
        id: "motzkin-three-root-mixed",
        aliases: &["7.5"],
        n_min: 1,
        n_max: 7,
        check: |ck, n| {
            let v = if n % 2 == 0 {
                let n0 = (n / 2) as i64;
                BigInt::from(sgn(n0) * (n0 + 1) * (n0 + 1))
            } else {
                let n0 = (n + 1) / 2;
                BigInt::from(sgn(n0 as i64 - 1)) * binom(2 * n0 + 2, 3)
            };
            integer(ck, n, motzkin, &[1, 1, -1], BigInt::one(), v);
        },
    },
    Named {
        id: "catalan-three-root-minus-ones",
        aliases: &["7.6"],
        n_min: 1,
        n_max: 7,
        check: |ck, n| {
            let v = branch3(
                n,
                |n0| sgn(n0) * n0 * (2 * n0 + 1),
                |n0| sgn(n0) * (2 * n0 + 1) * (2 * n0 + 1),
                |n0| sgn(n0) * (n0 + 1) * (2 * n0 + 1),
            );
            integer(ck, n, catalan, &[-1, -1, -1], BigInt::one(), v);
        },
    },
    Named {
        id: "shifted-catalan-three-root-minus-ones",
        aliases: &["7.7"],
        n_min: 1,
        n_max: 7,
        check: |ck, n| {
            let v = branch3(
                n,
                |n0| sgn(n0 - 1) * n0 * (2 * n0 + 1),
                |n0| sgn(n0) * (n0 + 1) * (2 * n0 + 1),
                |n0| sgn(n0) * (2 * n0 + 2) * (2 * n0 + 2),
            );
            integer(ck, n, shifted_catalan, &[-1, -1, -1], BigInt::one(), v);
        },
    },
];
