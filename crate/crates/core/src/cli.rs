//! Command-line front end.
//!
//! [`run`] takes the full argument vector and returns the exit code with
//! the text for stdout and stderr, so the whole interface can be tested
//! without spawning processes. Exit codes: 0 when every check passes, 1
//! for usage and parse errors, 2 when a check fails (a counterexample).

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{with_jobs, Execution};
use crate::identities::{Mode, SweepContext, SweepReport, Theorem, DEFAULT_SEED};
use crate::inverses::{
    classify, gzhou_constructive, inverse_bruteforce_bounded, verify_certificate, ClassRow,
    InverseKind, WitnessExponents,
};
use crate::matrix::{
    drazin_index, drazin_matrix, gzhou_matrix_bounded, is_nilpotent_matrix, period_bound,
    replay_matrix_certificate, RationalMatrix,
};
use crate::ring::{FiniteRing, RingOptions, DEFAULT_CAP};
use crate::structure::{idempotents, jacobson_radical, nilpotents, sqrt_jacobson, units};
use crate::suite::{run_suite, SuiteReport};

#[derive(Debug, Parser)]
#[command(
    name = "ringlab",
    version,
    about = "Generalized inverses in finite rings and rational matrices"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest ring cardinality accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Override the search bound for the exponent n.
    #[arg(long, global = true)]
    bound: Option<u64>,
    /// Report zero durations so output is byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetName {
    #[value(name = "U")]
    Units,
    #[value(name = "N")]
    Nil,
    #[value(name = "J")]
    Jacobson,
    #[value(name = "sqrtJ")]
    SqrtJ,
    #[value(name = "idem")]
    Idempotents,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List a structural subset of a ring.
    Table {
        ring: String,
        #[arg(long)]
        set: SetName,
    },
    /// Compute one inverse with its certificate.
    Inverse {
        ring: String,
        element: String,
        #[arg(long, value_parser = parse_kind)]
        kind: InverseKind,
    },
    /// Every inverse of every element.
    Classify { ring: String },
    /// Run a theorem sweep.
    Verify {
        #[arg(value_parser = parse_theorem)]
        theorem: Theorem,
        ring: String,
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a named suite of sweeps and examples.
    Report {
        #[arg(long, default_value = "desk")]
        suite: String,
    },
}

fn parse_kind(s: &str) -> std::result::Result<InverseKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> std::result::Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Output of a command body before formatting.
struct Rendered {
    json: String,
    csv: Vec<Vec<String>>,
    passed: bool,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = cli.format;
    match with_jobs(cli.jobs, || execute(&cli)) {
        Ok(rendered) => {
            let stdout = match format {
                Format::Json => rendered.json + "\n",
                Format::Csv => to_csv(&rendered.csv),
            };
            Outcome {
                code: if rendered.passed { 0 } else { 2 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => error_outcome(&e),
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let mut doc = serde_json::json!({ "error": e.to_string() });
    if let Error::Syntax { offset, .. } = e {
        doc["offset"] = (*offset).into();
    }
    Outcome {
        code: if e.is_fault() { 2 } else { 1 },
        stdout: format!("{doc}\n"),
        stderr: format!("error: {e}\n"),
    }
}

fn to_csv(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV of UTF-8 strings")
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn execute(cli: &Cli) -> Result<Rendered> {
    let exec = Execution::default();
    let opts = RingOptions {
        cap: cli.cap,
        ..RingOptions::default()
    };
    let bound = cli.bound.map(|b| b.clamp(1, u32::MAX as u64));
    match &cli.command {
        Command::Table { ring, set } => {
            let r = finite_ring(ring, opts)?;
            let members = match set {
                SetName::Units => units(&r),
                SetName::Nil => nilpotents(&r).into_iter().map(|(x, _)| x).collect(),
                SetName::Jacobson => jacobson_radical(&r),
                SetName::SqrtJ => sqrt_jacobson(&r),
                SetName::Idempotents => idempotents(&r),
            };
            let names: Vec<String> = members.into_iter().map(|x| r.format_element(x)).collect();
            let mut csv = vec![vec!["element".to_string()]];
            csv.extend(names.iter().map(|n| vec![n.clone()]));
            Ok(Rendered {
                json: to_json(&names),
                csv,
                passed: true,
            })
        }
        Command::Inverse {
            ring,
            element,
            kind,
        } => {
            let out = match matrix_dimension(ring) {
                Some(k) => matrix_inverse(ring, k?, element, *kind, bound)?,
                None => finite_inverse(&finite_ring(ring, opts)?, ring, element, *kind, bound)?,
            };
            let passed =
                out.checks.values().all(|&ok| ok) && out.constructive_agrees != Some(false);
            let csv = vec![
                INVERSE_COLUMNS.iter().map(|s| s.to_string()).collect(),
                out.csv_row(),
            ];
            Ok(Rendered {
                json: to_json(&out),
                csv,
                passed,
            })
        }
        Command::Classify { ring } => {
            let r = finite_ring(ring, opts)?;
            let rows = classify(&r, exec)?;
            let passed = rows
                .iter()
                .all(|row| row.gzhou.as_deref() == Some(row.constructive.as_str()));
            Ok(Rendered {
                csv: classify_csv(&rows),
                json: to_json(&rows),
                passed,
            })
        }
        Command::Verify {
            theorem,
            ring,
            exhaustive: _,
            samples,
            seed,
        } => {
            let r = finite_ring(ring, opts)?;
            let mode = match (samples, seed) {
                (None, None) => Mode::Exhaustive,
                (samples, seed) => Mode::Sampled {
                    samples: samples.unwrap_or(1000),
                    seed: seed.unwrap_or(DEFAULT_SEED),
                },
            };
            let ctx = SweepContext::new(&r, exec)?;
            let mut report = theorem.run(&ctx, mode)?;
            if cli.no_timing {
                report.duration_ms = 0;
            }
            let mut csv = vec![SWEEP_COLUMNS.iter().map(|s| s.to_string()).collect()];
            csv.push(sweep_row(&report));
            Ok(Rendered {
                passed: report.ok(),
                json: to_json(&report),
                csv,
            })
        }
        Command::Report { suite } => {
            let mut report = run_suite(suite, exec)?;
            if cli.no_timing {
                report.strip_timing();
            }
            Ok(Rendered {
                passed: report.ok(),
                csv: suite_csv(&report),
                json: to_json(&report),
            })
        }
    }
}

fn finite_ring(text: &str, opts: RingOptions) -> Result<FiniteRing> {
    if matrix_dimension(text).is_some() {
        return Err(Error::Precondition(format!(
            "'{text}' is a rational matrix ring; only `inverse` accepts it"
        )));
    }
    FiniteRing::parse_with(text, opts)
}

/// `Some` for the rational matrix rings `Q1`, `Q2`, ...
fn matrix_dimension(text: &str) -> Option<Result<usize>> {
    let digits = text.trim().strip_prefix('Q')?;
    Some(match digits.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(Error::syntax(
            1,
            format!("expected a positive dimension after 'Q' in '{text}'"),
        )),
    })
}

const INVERSE_COLUMNS: [&str; 13] = [
    "ring",
    "kind",
    "a",
    "b",
    "n",
    "p",
    "e",
    "w",
    "bound",
    "conclusive",
    "constructive",
    "constructive_agrees",
    "checks_passed",
];

#[derive(Debug, Serialize)]
struct InverseOutput {
    ring: String,
    kind: InverseKind,
    a: String,
    b: Option<String>,
    n: Option<u64>,
    p: Option<String>,
    e: Option<String>,
    w: Option<String>,
    witness_exponents: Option<WitnessExponents>,
    checks: BTreeMap<String, bool>,
    /// Largest exponent searched.
    bound: u64,
    /// Whether a missing inverse is a proof of non-existence.
    conclusive: bool,
    constructive: Option<String>,
    constructive_agrees: Option<bool>,
}

impl InverseOutput {
    fn csv_row(&self) -> Vec<String> {
        let opt = |x: &Option<String>| x.clone().unwrap_or_default();
        vec![
            self.ring.clone(),
            self.kind.to_string(),
            self.a.clone(),
            opt(&self.b),
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            opt(&self.p),
            opt(&self.e),
            opt(&self.w),
            self.bound.to_string(),
            self.conclusive.to_string(),
            opt(&self.constructive),
            self.constructive_agrees
                .map(|v| v.to_string())
                .unwrap_or_default(),
            self.checks.values().all(|&v| v).to_string(),
        ]
    }
}

fn finite_inverse(
    r: &FiniteRing,
    label: &str,
    element: &str,
    kind: InverseKind,
    bound: Option<u64>,
) -> Result<InverseOutput> {
    let a = r.parse_element(element)?;
    let natural = r.power_orbit(a).search_bound() as u64;
    let bound = bound.unwrap_or(natural);
    let cert = inverse_bruteforce_bounded(r, a, kind, bound as u32)?;
    let constructive = match kind {
        InverseKind::GZhou => Some(gzhou_constructive(r, a)?.b),
        _ => None,
    };
    let mut out = InverseOutput {
        ring: label.to_string(),
        kind,
        a: r.format_element(a),
        b: None,
        n: None,
        p: None,
        e: None,
        w: None,
        witness_exponents: None,
        checks: BTreeMap::new(),
        bound,
        conclusive: bound >= natural || kind == InverseKind::PDrazin,
        constructive: constructive.map(|c| r.format_element(c)),
        constructive_agrees: None,
    };
    if let Some(cert) = cert {
        let report = cert.to_report(r);
        out.checks = verify_certificate(r, &cert)
            .checks
            .iter()
            .map(|c| (c.name.to_string(), c.passed))
            .collect();
        out.b = Some(report.b);
        out.n = report.n.map(u64::from);
        out.p = Some(report.p);
        out.e = Some(report.e);
        out.w = Some(report.w);
        out.witness_exponents = Some(report.witness_exponents);
        out.constructive_agrees = constructive.map(|c| c == cert.b);
    } else {
        out.constructive_agrees = constructive.map(|_| false).filter(|_| out.conclusive);
    }
    Ok(out)
}

fn matrix_inverse(
    label: &str,
    k: usize,
    element: &str,
    kind: InverseKind,
    bound: Option<u64>,
) -> Result<InverseOutput> {
    let a = RationalMatrix::parse(element)?;
    if a.dim() != k {
        return Err(Error::DimensionMismatch(a.dim(), k));
    }
    let natural = period_bound(k);
    let bound = bound.unwrap_or(natural);
    let mut out = InverseOutput {
        ring: label.to_string(),
        kind,
        a: a.to_string(),
        b: None,
        n: None,
        p: None,
        e: None,
        w: None,
        witness_exponents: None,
        checks: BTreeMap::new(),
        bound,
        conclusive: bound >= natural,
        constructive: None,
        constructive_agrees: None,
    };
    let identity = RationalMatrix::identity(k);
    let (x, n, w) = match kind {
        // every rational matrix has a Drazin inverse; J(M_k(ℚ)) = 0 so p-Drazin agrees with it
        InverseKind::Drazin | InverseKind::PDrazin => {
            let x = drazin_matrix(&a)?;
            let (n, w) = if kind == InverseKind::Drazin {
                let n = drazin_index(&a, &x)
                    .ok_or_else(|| Error::Falsified(format!("no Drazin index for {a}")))?;
                (Some(n), &a.pow(n) - &(&a.pow(n + 1) * &x))
            } else {
                (None, &a - &(&(&a * &a) * &x))
            };
            out.checks.insert("bab = b".into(), &(&x * &a) * &x == x);
            out.checks.insert("ab = ba".into(), &a * &x == &x * &a);
            let residual_ok = if kind == InverseKind::Drazin {
                w.is_zero()
            } else {
                is_nilpotent_matrix(&w).is_some()
            };
            out.checks
                .insert(kind.residual_condition().into(), residual_ok);
            out.conclusive = true;
            (x, n, w)
        }
        InverseKind::Zhou | InverseKind::GZhou => {
            let Some(cert) = gzhou_matrix_bounded(&a, bound)? else {
                return Ok(out);
            };
            for (name, ok) in replay_matrix_certificate(&a, &cert) {
                out.checks.insert(name.into(), ok);
            }
            let w = &a.pow(cert.n) - &(&a * &cert.inverse);
            (cert.inverse, Some(cert.n), w)
        }
    };
    let p = &a * &x;
    out.b = Some(x.to_string());
    out.n = n;
    out.e = Some((&identity - &p).to_string());
    out.p = Some(p.to_string());
    out.witness_exponents = Some(WitnessExponents {
        nilpotent: is_nilpotent_matrix(&w),
        sqrt_j: is_nilpotent_matrix(&w),
    });
    out.w = Some(w.to_string());
    Ok(out)
}

fn classify_csv(rows: &[ClassRow]) -> Vec<Vec<String>> {
    let header = [
        "a",
        "drazin",
        "pdrazin",
        "zhou",
        "gzhou",
        "constructive",
        "n",
        "p",
        "unit",
        "nilpotent",
        "J",
        "sqrtJ",
        "idempotent",
    ];
    let opt = |x: &Option<String>| x.clone().unwrap_or_default();
    let mut out = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    out.extend(rows.iter().map(|r| {
        vec![
            r.a.clone(),
            opt(&r.drazin),
            opt(&r.pdrazin),
            opt(&r.zhou),
            opt(&r.gzhou),
            r.constructive.clone(),
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            opt(&r.p),
            r.unit.to_string(),
            r.nilpotent.to_string(),
            r.in_j.to_string(),
            r.in_sqrt_j.to_string(),
            r.idempotent.to_string(),
        ]
    }));
    out
}

const SWEEP_COLUMNS: [&str; 8] = [
    "theorem",
    "ring",
    "mode",
    "population",
    "passes",
    "fails",
    "duration_ms",
    "seed",
];

fn sweep_row(s: &SweepReport) -> Vec<String> {
    vec![
        s.theorem.clone(),
        s.ring.clone(),
        s.mode.clone(),
        s.population.to_string(),
        s.passes.to_string(),
        s.fails.to_string(),
        s.duration_ms.to_string(),
        s.seed.map(|x| x.to_string()).unwrap_or_default(),
    ]
}

fn suite_csv(report: &SuiteReport) -> Vec<Vec<String>> {
    let mut out = vec![SWEEP_COLUMNS
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()];
    out.extend(report.sweeps.iter().map(sweep_row));
    out.push(vec!["check".into(), "passed".into(), "detail".into()]);
    out.extend(
        report
            .checks
            .iter()
            .map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]),
    );
    out
}
