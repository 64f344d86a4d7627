//! Suite entries that compare recurrence-based quantities with brute-force
//! enumeration.

use serde_json::json;

use crate::charpoly::f_poly;
use crate::error::{Error, Result};
use crate::hankel::{factorization_check, hankel_det, HankelSpec};
use crate::moments::{build_table, moments};
use crate::oracle::{cut_path_sum, enum_paths, enum_pillars, lgv_expand, reference_oracles, LgvModel, Reference};
use crate::ring::Var;
use crate::weights::{catalog, CatalogId, Mode, WeightSystem};
use crate::Poly;

use super::report::{Checker, VerificationReport};
use super::VerifyOptions;

type Run = fn(&VerifyOptions) -> Result<VerificationReport>;

pub(crate) static ENTRIES: &[(&str, &[&str], &str, Run)] = &[
    ("path-enumeration", &[], "moment table entries against enumerated paths", path_enumeration),
    ("path-splitting", &["5.3"], "cutting paths of length i+j after i steps", path_splitting),
    ("pillars", &[], "f_n as a sum over pillars of bricks", pillars),
    ("lgv-families", &["lgv"], "determinants as signed sums over non-intersecting path families", lgv_families),
    ("matrix-factorization", &["5.2", "5.4", "5.5"], "triangular factorizations of the Hankel matrices", factorization),
];

fn motzkin_weights(id: &str, opts: &VerifyOptions) -> Result<WeightSystem> {
    if !opts.bindings.is_empty() {
        return Err(Error::Precondition(format!("`{id}` takes no bindings")));
    }
    Ok(opts.weights.clone().unwrap_or_else(|| WeightSystem::symbolic(Mode::Motzkin)))
}

fn path_enumeration(opts: &VerifyOptions) -> Result<VerificationReport> {
    let n_max = opts.n_max.unwrap_or(6);
    let mut systems = vec![motzkin_weights("path-enumeration", opts)?];
    if opts.weights.is_none() {
        systems.push(WeightSystem::symbolic(Mode::Dyck));
        systems.extend(CatalogId::all().filter(|&id| id != CatalogId::QDyck).map(catalog));
    }
    let mut ck = Checker::new();
    for ws in &systems {
        let table = build_table(ws, n_max);
        for n in 0..=n_max {
            for k in 0..=n {
                ck.eq(n, &format!("m({n},{k}) {}", ws.descriptor()), &table.entry(n, k), &enum_paths(ws, n, k));
            }
        }
    }
    if opts.weights.is_none() {
        let bell = moments(&catalog(CatalogId::Xii), n_max);
        let fact = moments(&catalog(CatalogId::Xiii), n_max);
        for n in 0..=n_max {
            ck.eq(n, "bell", &bell[n], &Poly::constant(reference_oracles(Reference::Bell, n)));
            ck.eq(n, "factorial", &fact[n], &Poly::constant(reference_oracles(Reference::Factorial, n)));
        }
    }
    Ok(ck.finish("path-enumeration", json!({"systems": systems.len()}), opts.seed))
}

fn path_splitting(opts: &VerifyOptions) -> Result<VerificationReport> {
    let ws = motzkin_weights("path-splitting", opts)?;
    let n_max = opts.n_max.unwrap_or(8);
    let m = moments(&ws, n_max);
    let mut ck = Checker::new();
    for total in 0..=n_max {
        for i in 0..=total {
            let cut = cut_path_sum(&ws, i, total - i);
            ck.eq(total, &format!("split at {i}"), &cut, &m[total]);
        }
    }
    Ok(ck.finish("path-splitting", json!({"weights": ws.descriptor()}), opts.seed))
}

fn pillars(opts: &VerifyOptions) -> Result<VerificationReport> {
    let ws = motzkin_weights("pillars", opts)?;
    let n_max = opts.n_max.unwrap_or(6);
    let x = Var::new("alpha");
    let mut ck = Checker::new();
    for n in 0..=n_max {
        ck.eq(n, "pillars", &enum_pillars(&ws, n, x), &f_poly(&ws, n as i64, x)?);
    }
    Ok(ck.finish("pillars", json!({"weights": ws.descriptor()}), opts.seed))
}

fn lgv_families(opts: &VerifyOptions) -> Result<VerificationReport> {
    if !opts.bindings.is_empty() {
        return Err(Error::Precondition("`lgv-families` takes no bindings".into()));
    }
    let n_max = opts.n_max.unwrap_or(3);
    let cases: Vec<(LgvModel, WeightSystem)> = match &opts.weights {
        Some(ws) => {
            let models = [LgvModel::TwoRoot, LgvModel::ThreeRoot, LgvModel::DyckEven, LgvModel::DyckOdd];
            models.into_iter().filter(|m| m.mode() == ws.mode()).map(|m| (m, ws.clone())).collect()
        }
        None => vec![
            (LgvModel::TwoRoot, catalog(CatalogId::I)),
            (LgvModel::TwoRoot, WeightSystem::symbolic(Mode::Motzkin)),
            (LgvModel::ThreeRoot, catalog(CatalogId::Ii)),
            (LgvModel::DyckEven, WeightSystem::constant_dyck(Poly::one())),
            (LgvModel::DyckOdd, WeightSystem::constant_dyck(Poly::from(2))),
        ],
    };
    let mut ck = Checker::new();
    for (model, ws) in &cases {
        for n in 1..=n_max {
            let family_sum = lgv_expand(ws, n, *model)?;
            let det = model_determinant(ws, n, *model)?;
            ck.eq(n, &format!("{} {}", model.name(), ws.descriptor()), &family_sum, &det);
        }
    }
    Ok(ck.finish("lgv-families", json!({}), opts.seed))
}

/// The Hankel determinant a path model is meant to count.
fn model_determinant(ws: &WeightSystem, n: usize, model: LgvModel) -> Result<Poly> {
    let roots: Vec<Poly> = ["alpha", "beta", "gamma"][..model.root_count()].iter().map(|s| Poly::named(s)).collect();
    let spec = HankelSpec::new(usize::from(model == LgvModel::DyckOdd), roots);
    hankel_det(&moments(ws, spec.required_len(n) - 1), &spec, n)
}

fn factorization(opts: &VerifyOptions) -> Result<VerificationReport> {
    let ws = motzkin_weights("matrix-factorization", opts)?;
    let n_max = opts.n_max.unwrap_or(4);
    let mut ck = Checker::new();
    for n in 1..=n_max {
        for c in factorization_check(&ws, n)?.checks {
            if c.passed {
                ck.eq(n, &c.name, &Poly::one(), &Poly::one());
            } else {
                ck.fail(n, &c.name, format!("entries differ at {:?}", c.mismatches));
            }
        }
    }
    Ok(ck.finish("matrix-factorization", json!({"weights": ws.descriptor()}), opts.seed))
}
