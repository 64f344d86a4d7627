//! Identity verification. Each identity computes both sides independently and
//! compares them exactly; ratios are always cross-multiplied.

mod closed;
mod general;
mod harness;
mod named;
mod oracles;
mod recurrence;
mod report;
mod sample;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use regex::Regex;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::{Coefficient, Polynomial, Var};
use crate::weights::{Mode, Parity, WeightSystem, WeightTable};
use crate::{Poly, QPoly};

pub use closed::{ordered_pairs, two_root_numerator, umbral_numerator, vandermonde, TailParams, CYCLIC};
pub use harness::{d_root_report, DRootCase};
pub use recurrence::{detect_recurrence, Recurrence};
pub use harness::{recurrence_pipeline, scaled_determinants, RecurrenceOutcome};
pub use report::{Exhibit, Status, VerificationReport, Witness};
pub use sample::random_rational;

use report::Checker;

/// Random rational points used per order once symbolic checking stops.
pub const RANDOM_POINTS: usize = 3;

/// One side-by-side check, run for each order `n` on a weight table and roots.
pub(crate) trait Recipe: Sync {
    fn table_len(&self, n: usize) -> usize;
    fn check<C: Coefficient>(&self, ck: &mut Checker, w: &WeightTable<C>, roots: &[Polynomial<C>], n: usize);
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest order checked; each identity has its own default.
    pub n_max: Option<usize>,
    /// Replaces the identity's default weights, where it takes any.
    pub weights: Option<WeightSystem>,
    /// Values for roots (`alpha`, `beta`, ...) or for weight indeterminates.
    pub bindings: Vec<(String, BigRational)>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { n_max: None, weights: None, bindings: vec![], seed: 1 }
    }
}

impl VerifyOptions {
    pub fn with_n_max(mut self, n: usize) -> Self {
        self.n_max = Some(n);
        self
    }

    pub fn with_weights(mut self, ws: WeightSystem) -> Self {
        self.weights = Some(ws);
        self
    }

    pub fn bind(mut self, name: &str, value: BigRational) -> Self {
        self.bindings.push((name.to_string(), value));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn binding_map(&self) -> Result<HashMap<Var, QPoly>> {
        self.bindings.iter().map(|(k, v)| Ok((Var::try_new(k)?, Polynomial::constant(v.clone())))).collect()
    }

    fn bindings_json(&self) -> Value {
        Value::Object(self.bindings.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect())
    }

    fn fixed_inputs(&self, id: &str) -> Result<()> {
        if self.weights.is_some() || !self.bindings.is_empty() {
            return Err(Error::Precondition(format!("`{id}` has fixed weights and roots; drop --weights/--bind")));
        }
        Ok(())
    }
}

/// How a general identity is exercised.
struct Plan {
    mode: Mode,
    roots: &'static [&'static str],
    n_min: usize,
    n_max: usize,
    /// Orders up to this are checked with all weight indeterminates kept free.
    symbolic_depth: usize,
    weights: fn() -> WeightSystem,
    constant_tail: bool,
}

fn symbolic_motzkin() -> WeightSystem {
    WeightSystem::symbolic(Mode::Motzkin)
}

fn symbolic_dyck() -> WeightSystem {
    WeightSystem::symbolic(Mode::Dyck)
}

fn symbolic_tail() -> WeightSystem {
    WeightSystem::constant_tail(Poly::named("s0"), Poly::named("s"), Poly::named("t0"), Poly::named("t"))
}

fn to_integer(w: &WeightTable<BigRational>) -> Option<WeightTable<BigInt>> {
    let conv = |v: &[QPoly]| v.iter().map(|p| Poly::from_rational_poly(p).ok()).collect::<Option<Vec<_>>>();
    Some(WeightTable { mode: w.mode, level: conv(&w.level)?, down: conv(&w.down)? })
}

fn run_general<R: Recipe>(id: &str, recipe: &R, plan: &Plan, opts: &VerifyOptions) -> Result<VerificationReport> {
    let ws = opts.weights.clone().unwrap_or_else(plan.weights);
    if ws.mode() != plan.mode {
        return Err(Error::ModeMismatch { expected: plan.mode, found: ws.mode() });
    }
    if plan.constant_tail && ws.constant_tail_params().is_none() {
        return Err(Error::Precondition(format!("`{id}` needs weights that are constant from index one on")));
    }
    let n_max = opts.n_max.unwrap_or(plan.n_max);
    if n_max < plan.n_min {
        return Err(Error::Precondition(format!("`{id}` starts at n = {}", plan.n_min)));
    }
    let bindings = opts.binding_map()?;
    let root_vars: Vec<Var> = plan.roots.iter().map(|r| Var::new(r)).collect();
    let table = ws.table::<BigInt>(recipe.table_len(n_max)).map(|p| p.to_rational().substitute(&bindings));
    if table.down.iter().any(|d| d.is_zero()) {
        return Err(Error::Precondition("a down-step weight vanishes".into()));
    }
    let roots: Vec<QPoly> = root_vars.iter().map(|&v| QPoly::var(v).substitute(&bindings)).collect();
    let free = table.level.iter().chain(&table.down).any(|p| !p.is_constant());
    let exact_int = to_integer(&table).zip(roots.iter().map(|r| Poly::from_rational_poly(r).ok()).collect::<Option<Vec<_>>>());

    let mut ck = Checker::new();
    let mut rng = sample::rng(opts.seed);
    let mut sampled = false;
    for n in plan.n_min..=n_max {
        if !free || n <= plan.symbolic_depth {
            match &exact_int {
                Some((w, r)) => recipe.check(&mut ck, w, r, n),
                None => recipe.check(&mut ck, &table, &roots, n),
            }
        } else {
            sampled = true;
            for _ in 0..RANDOM_POINTS {
                let w = sample::specialize(&table, &root_vars, &mut rng);
                recipe.check(&mut ck, &w, &roots, n);
            }
        }
    }
    if sampled {
        ck.note(format!(
            "orders above {} checked at {RANDOM_POINTS} random rational weight points each",
            plan.symbolic_depth
        ));
    }
    let root_values: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
    let params = json!({
        "weights": ws.descriptor(),
        "roots": root_values,
        "bindings": opts.bindings_json(),
        "symbolic_depth": plan.symbolic_depth,
    });
    Ok(ck.finish(id, params, opts.seed))
}

/// Registry entry for one identity.
#[derive(Clone, Copy, Debug)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub summary: &'static str,
}

#[derive(Clone, Copy)]
enum Runner {
    Custom(fn(&VerifyOptions) -> Result<VerificationReport>),
    Named(&'static named::Named),
}

#[derive(Clone, Copy)]
struct Entry {
    info: IdentityInfo,
    runner: Runner,
}

macro_rules! general {
    ($id:expr, $recipe:expr, $plan:expr) => {
        Runner::Custom(|opts| run_general($id, &$recipe, &$plan, opts))
    };
}

const TWO: &[&str] = &["alpha", "beta"];
const ONE: &[&str] = &["alpha"];
const THREE: &[&str] = &["alpha", "beta", "gamma"];

fn entries() -> Vec<Entry> {
    let info = |id, aliases, summary| IdentityInfo { id, aliases, summary };
    let mut out = vec![
        Entry {
            info: info("two-root-sum", &["thm1", "2.5"], "two-root Hankel determinant as a sum of f_j(alpha) f_j(beta)"),
            runner: general!(
                "two-root-sum",
                general::TwoRoot,
                Plan { mode: Mode::Motzkin, roots: TWO, n_min: 1, n_max: 6, symbolic_depth: 4, weights: symbolic_motzkin, constant_tail: false }
            ),
        },
        Entry {
            info: info("dyck-two-root-even", &["cor2_even", "2.9"], "two-root determinant of c_{i+j} via g_{2j}"),
            runner: general!(
                "dyck-two-root-even",
                general::DyckTwoRoot(Parity::Even),
                Plan { mode: Mode::Dyck, roots: TWO, n_min: 1, n_max: 5, symbolic_depth: 3, weights: symbolic_dyck, constant_tail: false }
            ),
        },
        Entry {
            info: info("dyck-two-root-odd", &["cor2_odd", "2.10"], "two-root determinant of c_{i+j+1} via g_{2j+1}"),
            runner: general!(
                "dyck-two-root-odd",
                general::DyckTwoRoot(Parity::Odd),
                Plan { mode: Mode::Dyck, roots: TWO, n_min: 1, n_max: 5, symbolic_depth: 3, weights: symbolic_dyck, constant_tail: false }
            ),
        },
        Entry {
            info: info("one-root", &["lim_beta0", "lim_betainf", "3.1", "3.2"], "second root at zero and at infinity"),
            runner: general!(
                "one-root",
                general::OneRoot,
                Plan { mode: Mode::Motzkin, roots: ONE, n_min: 1, n_max: 6, symbolic_depth: 4, weights: symbolic_motzkin, constant_tail: false }
            ),
        },
        Entry {
            info: info("dyck-one-root", &["lim_dyck", "3.3", "3.4", "3.5", "3.6"], "one-root Dyck determinants, both parities"),
            runner: general!(
                "dyck-one-root",
                general::DyckOneRoot,
                Plan { mode: Mode::Dyck, roots: ONE, n_min: 1, n_max: 5, symbolic_depth: 3, weights: symbolic_dyck, constant_tail: false }
            ),
        },
        Entry {
            info: info("hankel-product", &["2.6"], "det(m_{i+j}) as a product of down weights"),
            runner: general!(
                "hankel-product",
                general::Product,
                Plan { mode: Mode::Motzkin, roots: &[], n_min: 1, n_max: 6, symbolic_depth: 4, weights: symbolic_motzkin, constant_tail: false }
            ),
        },
        Entry {
            info: info("dyck-hankel-product", &["2.11", "2.12"], "det(c_{i+j}) and det(c_{i+j+1}) as products"),
            runner: general!(
                "dyck-hankel-product",
                general::Product,
                Plan { mode: Mode::Dyck, roots: &[], n_min: 1, n_max: 6, symbolic_depth: 4, weights: symbolic_dyck, constant_tail: false }
            ),
        },
        Entry {
            info: info("constant-tail-f", &["cor3_closed", "4.1", "4.2"], "f_n for constant-tail weights in Chebyshev form"),
            runner: general!(
                "constant-tail-f",
                closed::ConstantTailF,
                Plan { mode: Mode::Motzkin, roots: ONE, n_min: 0, n_max: 10, symbolic_depth: 10, weights: symbolic_tail, constant_tail: true }
            ),
        },
        Entry {
            info: info("chebyshev-values", &["4.6", "4.7", "4.8", "4.9", "4.10", "4.11"], "U_n at 0, 1/2, 1, 3/2, i/2 and i"),
            runner: Runner::Custom(|opts| {
                opts.fixed_inputs("chebyshev-values")?;
                let mut ck = Checker::new();
                for n in 0..=opts.n_max.unwrap_or(16) {
                    closed::chebyshev_values(&mut ck, n);
                }
                Ok(ck.finish("chebyshev-values", json!({}), opts.seed))
            }),
        },
        Entry {
            info: info("constant-tail-two-root", &["cor3_num", "4.3"], "two-root determinant in closed form for constant-tail weights"),
            runner: general!(
                "constant-tail-two-root",
                closed::ConstantTailTwoRoot,
                Plan { mode: Mode::Motzkin, roots: TWO, n_min: 1, n_max: 6, symbolic_depth: 4, weights: symbolic_tail, constant_tail: true }
            ),
        },
        Entry {
            info: info("two-root-recurrence", &["rec_order4", "4.32"], "scaled two-root determinants satisfy a recurrence of order 4"),
            runner: Runner::Custom(|opts| harness::recurrence_report("two-root-recurrence", opts, &[1, 2], 14, 4)),
        },
        Entry {
            info: info("three-root-sum", &["thm5", "7.1"], "three-root Hankel determinant as a double sum"),
            runner: general!(
                "three-root-sum",
                general::ThreeRoot,
                Plan { mode: Mode::Motzkin, roots: THREE, n_min: 1, n_max: 4, symbolic_depth: 2, weights: symbolic_motzkin, constant_tail: false }
            ),
        },
        Entry {
            info: info("constant-tail-three-root", &["cor6", "7.2"], "three-root determinant in umbral closed form"),
            runner: general!(
                "constant-tail-three-root",
                closed::ConstantTailThreeRoot,
                Plan { mode: Mode::Motzkin, roots: THREE, n_min: 1, n_max: 4, symbolic_depth: 2, weights: symbolic_tail, constant_tail: true }
            ),
        },
        Entry {
            info: info("three-root-recurrence", &["rec_order8", "7.8"], "scaled three-root determinants satisfy a recurrence of order 8"),
            runner: Runner::Custom(|opts| harness::recurrence_report("three-root-recurrence", opts, &[1, 2, 3], 18, 8)),
        },
        Entry {
            info: info("d-root", &["conj8", "7.9"], "conjectured umbral closed form for any number of roots"),
            runner: Runner::Custom(harness::d_root_run),
        },
    ];
    out.extend(oracles::ENTRIES.iter().map(|(id, aliases, summary, run)| Entry {
        info: IdentityInfo { id, aliases, summary },
        runner: Runner::Custom(*run),
    }));
    out.extend(named::NAMED.iter().map(|n| Entry {
        info: IdentityInfo { id: n.id, aliases: n.aliases, summary: "named evaluation" },
        runner: Runner::Named(n),
    }));
    out
}

/// Every identity the harness knows, in suite order.
pub fn identities() -> Vec<IdentityInfo> {
    entries().into_iter().map(|e| e.info).collect()
}

fn find(id: &str) -> Result<Entry> {
    entries()
        .into_iter()
        .find(|e| e.info.id == id || e.info.aliases.contains(&id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Canonical id for an id or alias.
pub fn resolve(id: &str) -> Result<&'static str> {
    Ok(find(id)?.info.id)
}

fn run_named(n: &named::Named, opts: &VerifyOptions) -> Result<VerificationReport> {
    opts.fixed_inputs(n.id)?;
    let n_max = opts.n_max.unwrap_or(n.n_max);
    let mut ck = Checker::new();
    for k in n.n_min..=n_max {
        (n.check)(&mut ck, k);
    }
    Ok(ck.finish(n.id, json!({"aliases": n.aliases}), opts.seed))
}

/// Runs one identity by id or alias.
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    let entry = find(id)?;
    match entry.runner {
        Runner::Custom(f) => f(opts),
        Runner::Named(n) => run_named(n, opts),
    }
}

/// Runs every identity whose id or alias matches `filter`, concurrently,
/// returning reports in registry order.
pub fn named_suite(filter: Option<&str>, seed: u64) -> Result<Vec<VerificationReport>> {
    let re = filter.map(Regex::new).transpose().map_err(|e| Error::Precondition(format!("bad filter: {e}")))?;
    let selected: Vec<Entry> = entries()
        .into_iter()
        .filter(|e| match &re {
            None => true,
            Some(re) => re.is_match(e.info.id) || e.info.aliases.iter().any(|a| re.is_match(a)),
        })
        .collect();
    let opts = VerifyOptions { seed, ..VerifyOptions::default() };
    Ok(selected
        .par_iter()
        .map(|e| {
            let run = match e.runner {
                Runner::Custom(f) => f(&opts),
                Runner::Named(n) => run_named(n, &opts),
            };
            run.unwrap_or_else(|err| {
                let mut ck = Checker::new();
                ck.fail(0, "run", err.to_string());
                ck.finish(e.info.id, json!({}), seed)
            })
        })
        .collect())
}
