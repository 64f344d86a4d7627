//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Closed forms are evaluated here from scratch (own binomials, Fibonacci and
//! Lucas numbers, q-Pochhammer symbols, rational elimination) and compared with
//! what the library computes.

use hankel_core::charpoly::f_poly;
use hankel_core::hankel::{det_bareiss, factorization_check, hankel_det, HankelSpec, SquareMatrix};
use hankel_core::moments::{build_table, moments};
use hankel_core::oracle::{cut_path_sum, enum_paths, enum_pillars, lgv_expand, LgvModel};
use hankel_core::verify::{recurrence_pipeline, verify, Status, VerificationReport, VerifyOptions};
use hankel_core::weights::{catalog, rogers_szego, CatalogId, Mode, WeightSystem};
use hankel_core::{Poly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::io::Write;

/// Criteria that cannot pass because the statement they check is false as
/// printed, with the reason. Each must still fail, so a change in behaviour
/// is noticed.
const KNOWN_FAILURES: &[(usize, &str)] = &[
    (7, "one entry's printed value is wrong for n = 2 (mod 3): the determinant is 2n+2, not 2n+4"),
    (8, "the two q-Dyck determinants with floor-index entries do not give the printed ratios"),
];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, ok: &str) -> Outcome {
        if failures.is_empty() {
            Outcome { pass: true, detail: ok.to_string() }
        } else {
            Outcome { pass: false, detail: failures.join("; ") }
        }
    }
}

// ---- independent arithmetic -------------------------------------------------

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn catalan(n: usize) -> BigInt {
    binom(2 * n, n) / (n + 1)
}

fn motzkin(n: usize) -> BigInt {
    (0..=n / 2).map(|k| binom(n, 2 * k) * catalan(k)).sum()
}

fn fib(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    a
}

fn lucas(n: usize) -> BigInt {
    if n == 0 {
        int(2)
    } else {
        fib(n - 1) + fib(n + 1)
    }
}

fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// Determinant by Gaussian elimination over the rationals.
fn rational_det(rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows.into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// `det(sum_k e_{d-k}(roots) seq[i+j+k])` with the matrix written out here.
fn explicit_det(seq: impl Fn(usize) -> BigInt, combo: &[i64], n: usize) -> BigInt {
    rational_det((0..n).map(|i| (0..n).map(|j| combo.iter().enumerate().map(|(k, &c)| int(c) * seq(i + j + k)).sum()).collect()).collect())
}

/// The library's determinant for catalog weights and integer roots.
fn library_det(id: CatalogId, shift: usize, roots: &[i64], n: usize) -> BigInt {
    weights_det(&catalog(id), shift, roots, n)
}

fn weights_det(ws: &WeightSystem, shift: usize, roots: &[i64], n: usize) -> BigInt {
    let spec = HankelSpec::new(shift, roots.iter().map(|&r| Poly::from(r)).collect());
    let seq = moments(ws, spec.required_len(n) - 1);
    hankel_det(&seq, &spec, n).unwrap().as_constant().expect("numeric determinant")
}

fn check_values(failures: &mut Vec<String>, label: &str, n: usize, library: BigInt, explicit: BigInt, printed: BigInt) {
    if library != explicit {
        failures.push(format!("{label} n={n}: library {library} vs explicit matrix {explicit}"));
    }
    if explicit != printed {
        failures.push(format!("{label} n={n}: determinant {explicit} vs printed {printed}"));
    }
}

fn report_ok(r: &VerificationReport, failures: &mut Vec<String>) {
    if r.status != Status::Verified {
        failures.push(format!("{}: {} {:?}", r.identity, r.status.as_str(), r.witnesses.first()));
    }
}

// ---- criteria ---------------------------------------------------------------

fn criterion_1() -> Outcome {
    let mut f = vec![];
    for n in 1..=10 {
        let lib = library_det(CatalogId::Ii, 0, &[1], n);
        check_values(&mut f, "C_{i+j}+C_{i+j+1}", n, lib, explicit_det(catalan, &[1, 1], n), fib(2 * n + 1));
        let lib = library_det(CatalogId::Iii, 0, &[1], n);
        check_values(&mut f, "C_{i+j+1}+C_{i+j+2}", n, lib, explicit_det(|k| catalan(k + 1), &[1, 1], n), fib(2 * n + 2));
    }
    Outcome::from_failures(f, "F_{2n+1} and F_{2n+2} for n = 1..10")
}

fn criterion_2() -> Outcome {
    let mut f = vec![];
    for n in 1..=8 {
        let printed: BigInt = (0..=n).map(|j| fib(2 * j + 1).pow(2)).sum();
        check_values(&mut f, "C two roots at 1", n, library_det(CatalogId::Ii, 0, &[1, 1], n), explicit_det(catalan, &[1, 2, 1], n), printed);
    }
    Outcome::from_failures(f, "sum of F_{2j+1}^2 for n = 1..8")
}

fn criterion_3() -> Outcome {
    let mut f = vec![];
    let m = |k: usize| binom(2 * k + 2, k + 1);
    for n in 1..=6 {
        let printed: BigInt = (0..=n).map(|j| lucas(2 * j + 1).pow(2)).sum::<BigInt>() * pow2(n);
        // The catalog moments are binom(2k+2, k+1)/2, so the library determinant is scaled by 2^{-n}.
        let lib = library_det(CatalogId::Xiv, 0, &[1, 1], n) * pow2(n);
        check_values(&mut f, "2^-n det(binomial combination)", n, lib, explicit_det(m, &[1, 2, 1], n), printed);
    }
    Outcome::from_failures(f, "2^-n det = sum of L_{2j+1}^2 for n = 1..6, scaling as printed")
}

fn criterion_4() -> Outcome {
    let mut f = vec![];
    let r = verify("two-root-sum", &VerifyOptions::default().with_n_max(6)).unwrap();
    report_ok(&r, &mut f);
    if r.n != (1..=6).collect::<Vec<_>>() {
        f.push(format!("orders checked {:?}", r.n));
    }
    if r.params["symbolic_depth"] != 4 || !r.notes.iter().any(|n| n.contains("random rational")) {
        f.push("orders 5 and 6 were not escalated to random rational weights".into());
    }
    // Independent spot check: n = 1 has the single-entry matrix alpha*beta*m0 + (alpha+beta)*m1 + m2.
    let ws = WeightSystem::symbolic(Mode::Motzkin);
    let m = moments(&ws, 2);
    let (a, b) = (Poly::named("alpha"), Poly::named("beta"));
    let lhs = &a * &b * &m[0] + (&a + &b) * &m[1] + &m[2];
    let x = Var::new("alpha");
    let y = Var::new("beta");
    let rhs = f_poly(&ws, 0, x).unwrap() * f_poly(&ws, 0, y).unwrap() * ws.t(0) + f_poly(&ws, 1, x).unwrap() * f_poly(&ws, 1, y).unwrap();
    if lhs != rhs {
        f.push(format!("n=1 by hand: {lhs} vs {rhs}"));
    }
    Outcome::from_failures(f, "symbolic for n = 1..4, random rational weights for n = 5, 6; no mismatches")
}

fn criterion_5() -> Outcome {
    let mut f = vec![];
    for id in ["dyck-two-root-even", "dyck-two-root-odd"] {
        let r = verify(id, &VerifyOptions::default().with_n_max(3)).unwrap();
        report_ok(&r, &mut f);
        if !r.notes.is_empty() {
            f.push(format!("{id}: symbolic run was sampled"));
        }
        let ones = WeightSystem::constant_dyck(Poly::one());
        let r = verify(id, &VerifyOptions::default().with_weights(ones).with_n_max(8)).unwrap();
        report_ok(&r, &mut f);
        if r.n.last() != Some(&8) {
            f.push(format!("{id}: T_i = 1 stopped at {:?}", r.n.last()));
        }
    }
    Outcome::from_failures(f, "symbolic T_i for n = 1..3, T_i = 1 for n = 1..8, both parities")
}

fn criterion_6() -> Outcome {
    let mut f = vec![];
    let r = verify("constant-tail-two-root", &VerifyOptions::default().with_n_max(4)).unwrap();
    report_ok(&r, &mut f);
    if !r.notes.is_empty() {
        f.push("symbolic run was sampled".into());
    }
    if r.witnesses.iter().any(|w| w.check == "divisibility") {
        f.push("numerator not divisible by alpha - beta".into());
    }
    Outcome::from_failures(f, "cross-multiplied and exactly divisible by alpha - beta, symbolic, n = 1..4")
}

fn criterion_7() -> Outcome {
    let mut f = vec![];
    let middle = |k: usize| binom(k, k / 2);
    let alternating = |k: usize| if k % 2 == 0 { catalan(k / 2) * if (k / 2) % 2 == 0 { 1 } else { -1 } } else { BigInt::zero() };
    let floor = |a: usize, b: usize| int((a / b) as i64);
    for n in 1..=8usize {
        let c_shift = |k: usize| catalan(k + 1);
        let rows: [(&str, CatalogId, &dyn Fn(usize) -> BigInt, &[i64], &[i64], BigInt, BigInt); 11] = [
            ("Catalan at -1,-1", CatalogId::Ii, &catalan, &[-1, -1], &[1, -2, 1], BigInt::one(), floor(2 * n + 3, 3)),
            ("shifted Catalan at -1,-1", CatalogId::Iii, &c_shift, &[-1, -1], &[1, -2, 1], BigInt::one(), floor(2 * n + 4, 3)),
            ("Motzkin at 1,1", CatalogId::I, &motzkin, &[1, 1], &[1, 2, 1], BigInt::one(), int(((n + 1) * (n + 2) * (2 * n + 3) / 6) as i64)),
            ("Motzkin at -1,-1", CatalogId::I, &motzkin, &[-1, -1], &[1, -2, 1], BigInt::one(), floor(n + 2, 2)),
            ("Motzkin at 2", CatalogId::I, &motzkin, &[2], &[2, 1], BigInt::one(), fib(2 * n + 2)),
            ("Motzkin at 2,2", CatalogId::I, &motzkin, &[2, 2], &[4, 4, 1], BigInt::one(), (0..=n).map(|j| fib(2 * j + 2).pow(2)).sum()),
            (
                "central binomial at 1,1",
                CatalogId::Iv,
                &|k| binom(2 * k, k),
                &[1, 1],
                &[1, 2, 1],
                pow2(n - 1),
                (0..=n).map(|j| lucas(2 * j).pow(2)).sum::<BigInt>() - 2,
            ),
            (
                "middle binomial at 1,1",
                CatalogId::Xv,
                &middle,
                &[1, 1],
                &[1, 2, 1],
                BigInt::one(),
                int([2 * n + 1, 2 * n + 3, 2 * n + 4][n % 3] as i64),
            ),
            ("middle binomial at -1,-1", CatalogId::Xv, &middle, &[-1, -1], &[1, -2, 1], BigInt::one(), floor(2 * n + 3, 3)),
            ("middle binomial at 2", CatalogId::Xv, &middle, &[2], &[2, 1], BigInt::one(), int(2 * n as i64 + 1)),
            ("middle binomial at 3", CatalogId::Xv, &middle, &[3], &[3, 1], BigInt::one(), lucas(2 * n + 1)),
        ];
        for (label, id, seq, roots, combo, scale, printed) in rows {
            let explicit = explicit_det(seq, combo, n);
            check_values(&mut f, label, n, library_det(id, 0, roots, n), explicit, scale * printed);
        }
        let sign = if (n * (n - 1) / 2) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let explicit = explicit_det(alternating, &[1, 1], n);
                // s_i = 0 and t_i = -1 at every height, t_0 included.
        let ws = WeightSystem::constant(Poly::zero(), Poly::from(-1));
        check_values(&mut f, "alternating Catalan at 1", n, weights_det(&ws, 0, &[1], n), explicit, sign * fib(n + 1));
    }
    let printed = vec![
        vec![1, -1, -1, 2, 2],
        vec![-1, -1, 2, 2, -5],
        vec![-1, 2, 2, -5, -5],
        vec![2, 2, -5, -5, 14],
        vec![2, -5, -5, 14, 14],
    ];
    let built: Vec<Vec<i64>> = (0..5)
        .map(|i| (0..5).map(|j| i64::try_from(alternating(i + j) + alternating(i + j + 1)).unwrap()).collect())
        .collect();
    if built != printed {
        f.push("alternating Catalan 5x5 matrix differs from the displayed one".into());
    }
    let det5 = rational_det(printed.into_iter().map(|r| r.into_iter().map(int).collect()).collect());
    if det5 != int(8) {
        f.push(format!("alternating Catalan 5x5 determinant {det5}, printed 8"));
    }
    let wrong: Vec<String> = f.iter().filter(|m| m.starts_with("middle binomial at 1,1 ")).cloned().collect();
    let other = f.len() - wrong.len();
    if !wrong.is_empty() {
        let corrected = verify("middle-binomial-two-root-ones", &VerifyOptions::default()).unwrap();
        f.push(format!(
            "{other} other failures; with 2n+2 for n = 2 (mod 3) that entry is {}",
            corrected.status.as_str()
        ));
    }
    Outcome::from_failures(f, "all twelve evaluations exact for n = 1..8; alternating Catalan 5x5 determinant = 8")
}

/// `(a; q)_k` with `a` a polynomial in q.
fn poch(a: &Poly, k: usize) -> Poly {
    let q = Poly::named("q");
    (0..k).map(|i| Poly::one() - a * q.pow(i as u32)).product()
}

fn qq(k: usize) -> Poly {
    poch(&Poly::named("q"), k)
}

fn qbinom(n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    (qq(n).exact_div(&(qq(k) * qq(n - k)))).unwrap()
}

fn qpow(e: usize) -> Poly {
    Poly::named("q").pow(e as u32)
}

fn poly_det(n: usize, entry: impl Fn(usize, usize) -> Poly) -> Poly {
    det_bareiss(&SquareMatrix::from_fn(n, entry))
}

fn criterion_8() -> Outcome {
    let mut f = vec![];
    let c2 = |n: usize| n * n.saturating_sub(1) / 2;
    let c3 = |n: usize| if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
    let prod_qq = |n: usize| (1..n).map(qq).product::<Poly>();
    let t = Var::new("t");
    let r_at_minus_one = |k: usize| rogers_szego(k as i64).unwrap().subs(t, &Poly::from(-1));

    for n in 1..=8 {
        let own: Poly = (0..=n).map(|k| qbinom(n, k) * Poly::named("t").pow(k as u32)).sum();
        if own != rogers_szego(n as i64).unwrap() {
            f.push(format!("r_{n}(t) differs from the q-binomial sum"));
        }
        if moments(&catalog(CatalogId::RogersSzego), n)[n] != own {
            f.push(format!("m_{n} of the Rogers-Szego weights is not r_{n}(t)"));
        }
    }
    for n in 1..=5 {
        let det = poly_det(n, |i, j| r_at_minus_one(i + j) + r_at_minus_one(i + j + 1));
        if det != qpow(c3(n)) * prod_qq(n) * qpow(c2(n)) {
            f.push(format!("Rogers-Szego at t = -1, root 1, n={n}"));
        }
    }
    // Dyck moments c_k = (q;q)_{k/2} for even k, 0 for odd k, exactly as displayed.
    let printed_even_ok = (1..=4).all(|n| {
        let det = poly_det(n, |i, j| qq((i + j + 1) / 2));
        let den = qpow(n * (2 * n * n + 1 - 3 * n) / 6) * prod_qq(n).pow(2);
        let rhs: Poly = (0..=n).map(|k| qpow(c2(k)) * qq(k) * qbinom(n, k).pow(2)).sum();
        det == den * rhs
    });
    let printed_odd_ok = (1..=4).all(|n| {
        let det = poly_det(n, |i, j| qq((i + j + 2) / 2));
        let den = qpow(2 * c3(n + 1)) * qq(n) * prod_qq(n).pow(2);
        let rhs: Poly = (0..=n).map(|k| qpow(c2(k)) * qq(k) * qbinom(n + 1, k) * qbinom(n, k)).sum();
        det == den * rhs
    });
    if !printed_even_ok || !printed_odd_ok {
        f.push(format!(
            "as displayed, the even q-Dyck ratio {} and the odd one {}",
            if printed_even_ok { "holds" } else { "fails" },
            if printed_odd_ok { "holds" } else { "fails" }
        ));
        let even = verify("q-dyck-even", &VerifyOptions::default()).unwrap();
        let odd = verify("q-dyck-odd", &VerifyOptions::default()).unwrap();
        f.push(format!(
            "with entries (q;q)_{{i+j}} + (q;q)_{{i+j+1}} (resp. shifted by one) they are {} / {}",
            even.status.as_str(),
            odd.status.as_str()
        ));
    }
    Outcome::from_failures(f, "Rogers-Szego at t = -1 for n = 1..5, q-Dyck ratios for n = 1..4, r_n(t) for n = 1..8")
}

fn criterion_9() -> Outcome {
    let mut f = vec![];
    let r = verify("three-root-sum", &VerifyOptions::default().with_n_max(2)).unwrap();
    report_ok(&r, &mut f);
    if !r.notes.is_empty() {
        f.push("symbolic run was sampled".into());
    }
    for id in [CatalogId::I, CatalogId::Ii] {
        let r = verify("three-root-sum", &VerifyOptions::default().with_weights(catalog(id)).with_n_max(5)).unwrap();
        report_ok(&r, &mut f);
    }
    for id in [
        "motzkin-three-root-ones",
        "motzkin-three-root-minus-ones",
        "motzkin-three-root-mixed",
        "catalan-three-root-minus-ones",
        "shifted-catalan-three-root-minus-ones",
    ] {
        let r = verify(id, &VerifyOptions::default().with_n_max(7)).unwrap();
        report_ok(&r, &mut f);
    }
    // Independent: three roots at 1 with Motzkin weights at n = 1 is m0 + 3 m1 + 3 m2 + m3.
    let m = |k| motzkin(k);
    if library_det(CatalogId::I, 0, &[1, 1, 1], 1) != m(0) + 3 * m(1) + 3 * m(2) + m(3) {
        f.push("single-entry three-root matrix".into());
    }
    Outcome::from_failures(f, "symbolic n = 1, 2; catalog (i)/(ii) n = 1..5; branch formulas n = 1..7")
}

fn criterion_10() -> Outcome {
    let mut f = vec![];
    let r = verify("constant-tail-three-root", &VerifyOptions::default().with_n_max(4)).unwrap();
    report_ok(&r, &mut f);
    if r.witnesses.iter().any(|w| w.check == "sqrt-evenness") {
        f.push("odd power of sqrt(t) left over".into());
    }
    for id in [CatalogId::I, CatalogId::Ii, CatalogId::Iv, CatalogId::Vi] {
        let r = verify("constant-tail-three-root", &VerifyOptions::default().with_weights(catalog(id)).with_n_max(4)).unwrap();
        report_ok(&r, &mut f);
    }
    Outcome::from_failures(f, "agrees with the double sum for n = 1..4; no odd sqrt(t) powers")
}

fn criterion_11() -> Outcome {
    let mut f = vec![];
    let ws = catalog(CatalogId::Ii);
    let q = |x: i64| BigRational::from_integer(int(x));
    for (roots, terms, max) in [(vec![q(1), q(2)], 14, 4), (vec![q(1), q(2), q(3)], 18, 8)] {
        let out = recurrence_pipeline(&ws, &roots, terms, max, 4).unwrap();
        match &out.recurrence {
            None => f.push(format!("{} roots: no recurrence of order <= {max}", roots.len())),
            Some(r) if r.order > max => f.push(format!("order {} > {max}", r.order)),
            Some(_) if !out.predictions_hold => f.push(format!("{} roots: held-out terms mispredicted", roots.len())),
            Some(_) => {}
        }
        if out.actual.len() != 4 {
            f.push("fewer than 4 held-out terms".into());
        }
    }
    Outcome::from_failures(f, "orders <= 4 and <= 8 found, 4 held-out terms predicted each")
}

fn criterion_12() -> Outcome {
    let mut f = vec![];
    let r = verify("d-root", &VerifyOptions::default().with_n_max(4)).unwrap();
    if r.status == Status::Mismatch {
        f.push(format!("known cases failed: {:?}", r.witnesses.first()));
    }
    if !matches!(r.status, Status::ConjecturePass | Status::ConjectureFail) {
        f.push(format!("status {}", r.status.as_str()));
    }
    let points = r.params["cases"].as_array().unwrap().iter().filter(|c| c["roots"].as_array().unwrap().len() == 4).count();
    if points < 3 {
        f.push(format!("d = 4 ran at {points} points"));
    }
    if r.n != vec![1, 2, 3, 4] {
        f.push(format!("orders {:?}", r.n));
    }
    Outcome::from_failures(f, &format!("d = 1..3 exact; d = 4 at {points} points reports {}", r.status.as_str()))
}

fn criterion_13() -> Outcome {
    let mut f = vec![];
    let sym = WeightSystem::symbolic(Mode::Motzkin);
    let numeric = [catalog(CatalogId::I), catalog(CatalogId::Ii), catalog(CatalogId::Vi), catalog(CatalogId::Xii)];
    for (ws, top) in numeric.iter().map(|w| (w, 10)).chain([(&sym, 6), (&WeightSystem::symbolic(Mode::Dyck), 6)]) {
        let table = build_table(ws, top);
        for n in 0..=top {
            for k in 0..=n {
                if table.entry(n, k) != enum_paths(ws, n, k) {
                    f.push(format!("paths m({n},{k}) {}", ws.descriptor()));
                }
            }
        }
    }
    let x = Var::new("alpha");
    for (ws, top) in [(&numeric[0], 8), (&numeric[2], 8), (&sym, 5)] {
        for n in 0..=top {
            if enum_pillars(ws, n, x) != f_poly(ws, n as i64, x).unwrap() {
                f.push(format!("pillars n={n}"));
            }
        }
    }
    let dyck = WeightSystem::constant_dyck(Poly::one());
    let models = [
        (LgvModel::TwoRoot, &numeric[0]),
        (LgvModel::ThreeRoot, &numeric[1]),
        (LgvModel::DyckEven, &dyck),
        (LgvModel::DyckOdd, &dyck),
    ];
    for (model, ws) in models {
        for n in 1..=3 {
            let roots: Vec<Poly> = ["alpha", "beta", "gamma"][..model.root_count()].iter().map(|s| Poly::named(s)).collect();
            let spec = HankelSpec::new(usize::from(model == LgvModel::DyckOdd), roots);
            let det = hankel_det(&moments(ws, spec.required_len(n) - 1), &spec, n).unwrap();
            if lgv_expand(ws, n, model).unwrap() != det {
                f.push(format!("lgv {} n={n}", model.name()));
            }
        }
    }
    for n in 1..=2 {
        let spec = HankelSpec::new(0, vec![Poly::named("alpha"), Poly::named("beta")]);
        let det = hankel_det(&moments(&sym, spec.required_len(n) - 1), &spec, n).unwrap();
        if lgv_expand(&sym, n, LgvModel::TwoRoot).unwrap() != det {
            f.push(format!("lgv symbolic n={n}"));
        }
    }
    let m = moments(&numeric[0], 10);
    let ms = moments(&sym, 6);
    for total in 0..=10 {
        for i in 0..=total {
            if cut_path_sum(&numeric[0], i, total - i) != m[total] {
                f.push(format!("split {i}+{}", total - i));
            }
            if total <= 6 && cut_path_sum(&sym, i, total - i) != ms[total] {
                f.push(format!("symbolic split {i}+{}", total - i));
            }
        }
    }
    for n in 1..=4 {
        let rep = factorization_check(&sym, n).unwrap();
        for c in rep.failures() {
            f.push(format!("factorization {} n={n}", c.name));
        }
    }
    Outcome::from_failures(f, "paths, pillars, all four path-family models, splitting and factorizations agree")
}

fn criterion_14() -> Outcome {
    let mut f = vec![];
    for id in ["hankel-product", "dyck-hankel-product"] {
        let r = verify(id, &VerifyOptions::default().with_n_max(6)).unwrap();
        report_ok(&r, &mut f);
        if r.params["symbolic_depth"] != 4 {
            f.push(format!("{id}: symbolic depth {}", r.params["symbolic_depth"]));
        }
    }
    // Independent: Catalan and Motzkin Hankel determinants are all 1.
    for n in 1..=6 {
        if explicit_det(catalan, &[1], n) != BigInt::one() || library_det(CatalogId::Ii, 0, &[], n) != BigInt::one() {
            f.push(format!("det(C_{{i+j}}) n={n}"));
        }
        if library_det(CatalogId::I, 0, &[], n) != BigInt::one() {
            f.push(format!("det(M_{{i+j}}) n={n}"));
        }
        let central = library_det(CatalogId::Iv, 0, &[], n);
        if central != pow2(n - 1) || explicit_det(|k| binom(2 * k, k), &[1], n).abs() != pow2(n - 1) {
            f.push(format!("det(binom(2i+2j, i+j)) n={n}"));
        }
    }
    Outcome::from_failures(f, "base and both Dyck product formulas, n = 1..6, symbolic for n <= 4")
}

/// Writes past the harness's output capture so the lines show in a plain `cargo test`.
fn say(line: String) {
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance_criteria() {
    let criteria: [(usize, &str, fn() -> Outcome); 14] = [
        (1, "Fibonacci determinants", criterion_1),
        (2, "two Catalan roots at one", criterion_2),
        (3, "shifted central binomial, scaled", criterion_3),
        (4, "two-root sum, general weights", criterion_4),
        (5, "Dyck two-root sums", criterion_5),
        (6, "constant-tail two-root closed form", criterion_6),
        (7, "named integer evaluations", criterion_7),
        (8, "q-identities", criterion_8),
        (9, "three-root double sum", criterion_9),
        (10, "constant-tail three-root closed form", criterion_10),
        (11, "recurrences of scaled determinants", criterion_11),
        (12, "d-root conjecture harness", criterion_12),
        (13, "enumeration oracles", criterion_13),
        (14, "product formulas", criterion_14),
    ];
    say(String::new());
    let mut failed = vec![];
    for (k, name, run) in criteria {
        let out = run();
        say(format!("{} {k:>2} {name}: {}", if out.pass { "PASS" } else { "FAIL" }, out.detail));
        if !out.pass {
            failed.push(k);
        }
    }
    for &(k, why) in KNOWN_FAILURES {
        say(format!("note {k:>2}: {why}"));
    }
    let known: Vec<usize> = KNOWN_FAILURES.iter().map(|p| p.0).collect();
    assert_eq!(failed, known, "failing criteria differ from the recorded ones");
}
