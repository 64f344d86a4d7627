//! The umbral closed form for any number of roots, and recurrences of the
//! scaled two- and three-root determinants.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::charpoly::f_sequence;
use crate::error::{Error, Result};
use crate::moments::moments_from;
use crate::ring::{Polynomial, Var};
use crate::weights::WeightSystem;
use crate::QPoly;

use super::closed::{two_root_numerator, umbral_numerator, vandermonde, TailParams, CYCLIC};
use super::general::{det_of, three_root_sum, two_root_sum};
use super::recurrence::{detect_recurrence, Recurrence};
use super::report::{Checker, VerificationReport};
use super::{ordered_pairs, sample, VerifyOptions};

/// Constant-tail parameters and distinct numeric roots.
#[derive(Clone, Debug)]
pub struct DRootCase {
    pub label: String,
    pub params: TailParams<BigRational>,
    pub roots: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn konst(c: &BigRational) -> QPoly {
    Polynomial::constant(c.clone())
}

fn tail(s0: i64, s: i64, t0: i64, t: i64) -> TailParams<BigRational> {
    TailParams { s0: konst(&rat(s0)), s: konst(&rat(s)), t0: konst(&rat(t0)), t: konst(&rat(t)) }
}

/// Numeric `(s0, s, t0, t)` from a weight system after applying `bindings`.
fn numeric_params(ws: &WeightSystem, bindings: &HashMap<Var, QPoly>) -> Result<TailParams<BigRational>> {
    let (s0, s, t0, t) = ws
        .constant_tail_params()
        .ok_or_else(|| Error::Precondition("weights must be constant from index one on".into()))?;
    let eval = |p: crate::Poly| {
        let q = p.to_rational().substitute(bindings);
        q.as_constant().map(|c| konst(&c)).ok_or_else(|| Error::Precondition(format!("weight {q} has unbound indeterminates")))
    };
    let p = TailParams { s0: eval(s0)?, s: eval(s)?, t0: eval(t0)?, t: eval(t)? };
    if p.t0.is_zero() || p.t.is_zero() {
        return Err(Error::Precondition("a down-step weight vanishes".into()));
    }
    Ok(p)
}

fn distinct(roots: &[BigRational]) -> Result<()> {
    for (i, a) in roots.iter().enumerate() {
        if roots[i + 1..].contains(a) {
            return Err(Error::Precondition(format!("root {a} is repeated")));
        }
    }
    Ok(())
}

fn d_root_check(ck: &mut Checker, case: &DRootCase, n: usize) {
    let p = &case.params;
    let d = case.roots.len();
    let roots: Vec<QPoly> = case.roots.iter().map(konst).collect();
    let pairs = ordered_pairs(d);
    let w = p.table(2 * n + d + 1);
    let seq = moments_from(&w, 2 * n + d);
    let den = det_of(&seq, 0, &[], n);
    let lhs = det_of(&seq, 0, &roots, n);
    let num = match umbral_numerator(p, &roots, &pairs, n) {
        Ok(num) => num,
        Err(e) => return ck.fail(n, "sqrt-evenness", e.to_string()),
    };
    let v = vandermonde(&roots, &pairs);
    let tag = |what: &str| format!("{what} [{}]", case.label);
    match d {
        1 => {
            ck.eq(n, &tag("one-root-closed-form"), &num, &f_sequence(&w, &roots[0], n)[n]);
        }
        2 => {
            ck.eq(n, &tag("two-root-closed-form"), &num, &two_root_numerator(p, &roots[0], &roots[1], n));
            ck.eq(n, &tag("two-root-sum"), &num, &(&v * &two_root_sum(&w, &roots[0], &roots[1], n)));
        }
        3 => {
            let cyclic = match umbral_numerator(p, &roots, &CYCLIC, n) {
                Ok(c) => c,
                Err(e) => return ck.fail(n, &tag("sqrt-evenness"), e.to_string()),
            };
            ck.eq(n, &tag("three-root-closed-form"), &(&num * &vandermonde(&roots, &CYCLIC)), &(&cyclic * &v));
            let sum = three_root_sum(&w, &roots[0], &roots[1], &roots[2], n);
            ck.eq(n, &tag("three-root-sum"), &num, &(&v * &sum));
        }
        _ => {}
    }
    let label = tag(&format!("{d}-root"));
    if d <= 3 {
        ck.eq(n, &label, &(&lhs * &v), &(&num * &den));
    } else {
        ck.conjectured(n, &label, &(&lhs * &v), &(&num * &den));
    }
}

/// Checks the umbral closed form on every case for `n = 1..=n_max`.
/// Fewer than four roots are proven cases and count as hard checks.
pub fn d_root_report(cases: &[DRootCase], n_max: usize, seed: u64) -> Result<VerificationReport> {
    for case in cases {
        distinct(&case.roots)?;
    }
    let mut ck = Checker::conjecture();
    for case in cases {
        for n in 1..=n_max {
            d_root_check(&mut ck, case, n);
        }
    }
    ck.note("every residual power of sqrt(t) in the umbral expansions was even");
    let described: Vec<_> = cases
        .iter()
        .map(|c| {
            let p = &c.params;
            json!({
                "label": c.label,
                "s0": p.s0.to_string(), "s": p.s.to_string(), "t0": p.t0.to_string(), "t": p.t.to_string(),
                "roots": c.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let report = ck.finish("d-root", json!({ "cases": described }), seed);
    Ok(report)
}

fn default_cases(seed: u64) -> Vec<DRootCase> {
    let mut rng = sample::rng(seed);
    let mut points = vec![("motzkin".to_string(), tail(1, 1, 1, 1)), ("catalan".to_string(), tail(1, 2, 1, 1))];
    for k in 0..2 {
        let mut r = || konst(&sample::random_rational(&mut rng));
        points.push((format!("random-{k}"), TailParams { s0: r(), s: r(), t0: r(), t: r() }));
    }
    let root_sets: [&[i64]; 4] = [&[1], &[1, 2], &[1, 2, 3], &[1, 2, 3, 5]];
    let mut out = vec![];
    for (name, p) in &points {
        for set in root_sets {
            out.push(DRootCase {
                label: format!("{name}, d={}", set.len()),
                params: p.clone(),
                roots: set.iter().map(|&r| rat(r)).collect(),
            });
        }
    }
    out
}

pub(crate) fn d_root_run(opts: &VerifyOptions) -> Result<VerificationReport> {
    let n_max = opts.n_max.unwrap_or(4);
    let bindings = opts.binding_map()?;
    let roots: Vec<BigRational> = (1..)
        .map_while(|k| opts.bindings.iter().find(|(name, _)| *name == format!("alpha_{k}")).map(|(_, v)| v.clone()))
        .collect();
    if roots.is_empty() {
        if opts.weights.is_some() {
            return Err(Error::Precondition("custom weights need roots bound as alpha_1, alpha_2, ...".into()));
        }
        return d_root_report(&default_cases(opts.seed), n_max, opts.seed);
    }
    let ws = opts.weights.clone().unwrap_or_else(|| crate::weights::catalog(crate::weights::CatalogId::I));
    let case = DRootCase { label: "custom".into(), params: numeric_params(&ws, &bindings)?, roots };
    d_root_report(&[case], n_max, opts.seed)
}

/// `det(M_n) / (t0^{n-1} t^{binom(n-1,2)})` for `n = 1..=count`.
pub fn scaled_determinants(p: &TailParams<BigRational>, roots: &[BigRational], count: usize) -> Vec<BigRational> {
    let d = roots.len();
    let roots: Vec<QPoly> = roots.iter().map(konst).collect();
    let w = p.table(2 * count + d + 1);
    let seq = moments_from(&w, 2 * count + d);
    let t0 = p.t0.as_constant().expect("numeric t0");
    let t = p.t.as_constant().expect("numeric t");
    (1..=count)
        .map(|n| {
            let det = det_of(&seq, 0, &roots, n).as_constant().unwrap_or_else(BigRational::zero);
            let k = n - 1;
            let scale = num_traits::pow(t0.clone(), k) * num_traits::pow(t.clone(), k * k.saturating_sub(1) / 2);
            det / scale
        })
        .collect()
}

/// A recurrence fitted to the first terms and tested on the rest.
#[derive(Clone, Debug, Serialize)]
pub struct RecurrenceOutcome {
    pub terms: Vec<String>,
    pub recurrence: Option<Recurrence>,
    pub predicted: Vec<String>,
    pub actual: Vec<String>,
    pub predictions_hold: bool,
}

/// Fits a recurrence of order at most `max_order` to `terms` scaled
/// determinants and predicts the next `held_out` ones.
pub fn recurrence_pipeline(
    ws: &WeightSystem,
    roots: &[BigRational],
    terms: usize,
    max_order: usize,
    held_out: usize,
) -> Result<RecurrenceOutcome> {
    distinct(roots)?;
    let p = numeric_params(ws, &HashMap::new())?;
    let all = scaled_determinants(&p, roots, terms + held_out);
    let (fit, rest) = all.split_at(terms);
    let recurrence = detect_recurrence(fit, max_order)?;
    let predicted = recurrence.as_ref().map(|r| r.extend(fit, held_out)).unwrap_or_default();
    let strings = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    Ok(RecurrenceOutcome {
        terms: strings(fit),
        predictions_hold: recurrence.is_some() && predicted == rest,
        predicted: strings(&predicted),
        actual: strings(rest),
        recurrence,
    })
}

pub(crate) fn recurrence_report(
    id: &str,
    opts: &VerifyOptions,
    default_roots: &[i64],
    default_terms: usize,
    max_order: usize,
) -> Result<VerificationReport> {
    const HELD_OUT: usize = 4;
    let names = ["alpha", "beta", "gamma"];
    let roots: Vec<BigRational> = default_roots
        .iter()
        .zip(names)
        .map(|(&r, name)| opts.bindings.iter().find(|(k, _)| k == name).map(|(_, v)| v.clone()).unwrap_or_else(|| rat(r)))
        .collect();
    if let Some((k, _)) = opts.bindings.iter().find(|(k, _)| !names[..roots.len()].contains(&k.as_str())) {
        return Err(Error::Precondition(format!("`{id}` only binds roots, not {k}")));
    }
    let ws = opts.weights.clone().unwrap_or_else(|| crate::weights::catalog(crate::weights::CatalogId::Ii));
    let terms = opts.n_max.unwrap_or(default_terms);
    let out = recurrence_pipeline(&ws, &roots, terms, max_order, HELD_OUT)?;
    let mut ck = Checker::new();
    match &out.recurrence {
        None => ck.fail(terms, "recurrence", format!("no recurrence of order <= {max_order} fits {terms} terms")),
        Some(r) => {
            ck.exhibit("recurrence", r.to_string());
            for (i, (p, a)) in out.predicted.iter().zip(&out.actual).enumerate() {
                let n = terms + i + 1;
                let parse = |s: &str| konst(&s.parse::<BigRational>().expect("rational"));
                ck.eq(n, "prediction", &parse(p), &parse(a));
            }
        }
    }
    ck.exhibit("terms", out.terms.join(", "));
    let params = json!({
        "weights": ws.descriptor(),
        "roots": roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "terms": terms,
        "held_out": HELD_OUT,
        "max_order": max_order,
    });
    Ok(ck.finish(id, params, opts.seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn motzkin_two_roots_by_every_route() {
        let case = DRootCase { label: "m".into(), params: tail(1, 1, 1, 1), roots: vec![rat(1), rat(-2)] };
        let r = d_root_report(&[case], 4, 0).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
        assert!(r.checks >= 12);
    }

    #[test]
    fn repeated_roots_are_refused() {
        let case = DRootCase { label: "m".into(), params: tail(1, 1, 1, 1), roots: vec![rat(2), rat(2)] };
        assert!(matches!(d_root_report(&[case], 2, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn catalan_recurrence_predicts() {
        let ws = crate::weights::catalog(crate::weights::CatalogId::Ii);
        let out = recurrence_pipeline(&ws, &[rat(1), rat(2)], 14, 4, 4).unwrap();
        let r = out.recurrence.expect("recurrence");
        assert!(r.order <= 4);
        assert!(out.predictions_hold);
    }

    #[test]
    fn scaling_divides_out_the_plain_determinant() {
        let s = scaled_determinants(&tail(1, 2, 1, 1), &[], 6);
        assert!(s.iter().all(|x| x.is_one()));
    }
}
