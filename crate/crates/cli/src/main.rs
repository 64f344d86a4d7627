//! `hankel`: moments, Hankel determinants and identity verification from the shell.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use hankel_core::charpoly::f_poly;
use hankel_core::hankel::{hankel_det, HankelSpec};
use hankel_core::moments::moments;
use hankel_core::verify::{self, recurrence_pipeline, VerificationReport, VerifyOptions};
use hankel_core::weights::{parse_weights, WeightSystem};
use hankel_core::{Error, Poly, Var};

#[derive(Parser)]
#[command(name = "hankel", version, about = "Exact Hankel determinants of path-counting moment sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleCheck {
    Paths,
    Pillars,
    Lgv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the moments m_0..m_N (c_0..c_N for Dyck weights).
    Moments {
        #[arg(long, value_parser = weights_arg)]
        weights: WeightSystem,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Print det of the N x N matrix with entries sum_k e_{d-k}(roots) m_{i+j+shift+k}.
    Det {
        #[arg(long, value_parser = weights_arg)]
        weights: WeightSystem,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        /// Comma-separated polynomials, e.g. `1,-2` or `alpha,beta`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        roots: Vec<String>,
        #[arg(long)]
        n: usize,
    },
    /// Print f_0..f_N in the given indeterminate.
    Fpoly {
        #[arg(long, value_parser = weights_arg)]
        weights: WeightSystem,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "alpha")]
        var: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check one identity and print its report as JSON.
    Verify {
        /// Identity id or alias; `hankel suite --list` shows them all.
        #[arg(long)]
        identity: String,
        #[arg(long, value_parser = weights_arg)]
        weights: Option<WeightSystem>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Comma-separated `name=value` pairs with rational values.
        #[arg(long, value_delimiter = ',', value_parser = binding_arg, allow_hyphen_values = true)]
        bind: Vec<(String, BigRational)>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Omit elapsed time so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check every registered identity; exits 1 if any mismatches.
    Suite {
        /// Only identities whose id or an alias matches.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print full JSON reports instead of one line each.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timing: bool,
        /// List identities and aliases without running them.
        #[arg(long)]
        list: bool,
    },
    /// Fit a recurrence to scaled root determinants and test its predictions.
    Recurrence {
        #[arg(long, value_parser = weights_arg)]
        weights: WeightSystem,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        roots: Vec<BigRational>,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 4)]
        held_out: usize,
    },
    /// Compare recurrences with brute-force enumeration.
    Oracle {
        #[arg(long, value_enum)]
        check: OracleCheck,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = weights_arg)]
        weights: Option<WeightSystem>,
        #[arg(long)]
        no_timing: bool,
    },
}

fn weights_arg(s: &str) -> Result<WeightSystem, String> {
    parse_weights(s).map_err(|e| e.to_string())
}

fn binding_arg(s: &str) -> Result<(String, BigRational), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let value = value.trim().parse::<BigRational>().map_err(|e| format!("bad value in `{s}`: {e}"))?;
    Ok((name.trim().to_string(), value))
}

/// A failure and the exit code it maps to.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn table<T: ToString>(out: &mut String, values: &[T], format: Format, key: &str, ws: &WeightSystem) {
    match format {
        Format::Csv => {
            out.push_str("n,value\n");
            for (n, v) in values.iter().enumerate() {
                out.push_str(&format!("{n},{}\n", v.to_string()));
            }
        }
        Format::Json => {
            let vals: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            let doc = json!({ "weights": ws.descriptor(), key: vals });
            out.push_str(&serde_json::to_string_pretty(&doc).unwrap());
            out.push('\n');
        }
    }
}

fn witnesses(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports.iter().filter(|r| !r.passed()) {
        for w in &r.witnesses {
            s.push_str(&format!("{}: n={} {}: {} != {}\n", r.identity, w.n, w.check, w.lhs, w.rhs));
        }
    }
    s
}

fn report_json(report: VerificationReport, no_timing: bool, out: &mut String) -> Result<(), Failure> {
    let report = if no_timing { report.without_timing() } else { report };
    out.push_str(&serde_json::to_string_pretty(&report).unwrap());
    out.push('\n');
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch(witnesses(&[report])))
    }
}

fn run(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Moments { weights, n, format } => table(out, &moments(&weights, n), format, "moments", &weights),
        Command::Det { weights, shift, roots, n } => {
            let roots = roots.iter().map(|r| r.trim().parse::<Poly>()).collect::<Result<Vec<_>, _>>()?;
            let spec = HankelSpec::new(shift, roots);
            let seq = moments(&weights, spec.required_len(n).saturating_sub(1));
            out.push_str(&format!("{}\n", hankel_det(&seq, &spec, n)?));
        }
        Command::Fpoly { weights, n, var, format } => {
            let v = Var::try_new(&var)?;
            let fs = (0..=n as i64).map(|k| f_poly(&weights, k, v)).collect::<Result<Vec<_>, _>>()?;
            table(out, &fs, format, "f", &weights);
        }
        Command::Verify { identity, weights, nmax, bind, seed, no_timing } => {
            let opts = VerifyOptions { n_max: nmax, weights, bindings: bind, seed };
            report_json(verify::verify(&identity, &opts)?, no_timing, out)?;
        }
        Command::Suite { filter, seed, json, no_timing, list } => {
            if list {
                for info in verify::identities() {
                    out.push_str(&format!("{:<40} {:<28} {}\n", info.id, info.aliases.join(" "), info.summary));
                }
                return Ok(());
            }
            let reports = verify::named_suite(filter.as_deref(), seed)?;
            let reports: Vec<_> =
                reports.into_iter().map(|r| if no_timing { r.without_timing() } else { r }).collect();
            if json {
                out.push_str(&serde_json::to_string_pretty(&reports).unwrap());
                out.push('\n');
            } else {
                for r in &reports {
                    let ns = match (r.n.first(), r.n.last()) {
                        (Some(a), Some(b)) => format!("n={a}..{b}"),
                        _ => "-".into(),
                    };
                    out.push_str(&format!("{:<16} {:<40} {:<10} {} checks\n", r.status.as_str(), r.identity, ns, r.checks));
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Mismatch(witnesses(&reports)));
            }
        }
        Command::Recurrence { weights, roots, terms, max_order, held_out } => {
            let outcome = recurrence_pipeline(&weights, &roots, terms, max_order, held_out)?;
            out.push_str(&serde_json::to_string_pretty(&outcome).unwrap());
            out.push('\n');
            if !outcome.predictions_hold {
                let why = match &outcome.recurrence {
                    None => format!("no recurrence of order <= {max_order} fits {terms} terms\n"),
                    Some(r) => format!("{r} fails on held-out terms: predicted {:?}, actual {:?}\n", outcome.predicted, outcome.actual),
                };
                return Err(Failure::Mismatch(why));
            }
        }
        Command::Oracle { check, n, weights, no_timing } => {
            let id = match check {
                OracleCheck::Paths => "path-enumeration",
                OracleCheck::Pillars => "pillars",
                OracleCheck::Lgv => "lgv-families",
            };
            let opts = VerifyOptions { n_max: Some(n), weights, ..VerifyOptions::default() };
            report_json(verify::verify(id, &opts)?, no_timing, out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(w)) => {
            eprint!("mismatch\n{w}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
