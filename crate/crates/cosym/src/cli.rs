//! Command line front end: ingest a manifold file or a builtin model
//! selector, run the verification suites, and emit text or JSON reports.
//!
//! Exit codes: 0 all selected checks pass, 1 a check failed (or a
//! deformation was rejected), 2 input error.

use std::fs;

use clap::{Args, Parser as ClapParser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::accs::{
    check_acm_axioms, check_almost_cosymplectic, check_cosymplectic, check_kahler_leaves,
    check_kmn, check_kmn_relations, d_conformal_deform, estimate_kmn, ChartStructure,
};
use crate::cr::{check_cr_integrability, check_hermitian_connection, check_levi_flatness};
use crate::error::{Error, Result};
use crate::expr::{Expr, Parser};
use crate::fields::Sample;
use crate::manifold::{render_structure, LoadedManifold, ManifoldFile};
use crate::models::registry;
use crate::report::{VerificationReport, IDENTITY_TOL};

#[derive(ClapParser, Debug)]
#[command(name = "cosym", about = "Verification engine for almost cosymplectic CR geometry")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run structural checks and gate the exit code on the results.
    Verify(RunArgs),
    /// Fit nullity coefficients (kappa, mu, nu) at each sampled point.
    EstimateKmn(RunArgs),
    /// Apply a D-conformal deformation and print the deformed manifold file.
    Deform(DeformArgs),
    /// List the builtin model registry.
    ListModels {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every applicable check and report without gating the exit code.
    Report(RunArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Manifold file (JSON); alternative to --model.
    pub file: Option<String>,
    /// Builtin model name (see list-models).
    #[arg(long)]
    pub model: Option<String>,
    /// Model parameter mu.
    #[arg(long, default_value_t = 0.0)]
    pub mu: f64,
    /// CR dimension n (manifold dimension 2n+1).
    #[arg(long, default_value_t = 1)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Sample points per check.
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    /// Residual tolerance.
    #[arg(long, default_value_t = IDENTITY_TOL)]
    pub tol: f64,
    /// Sampling seed.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Comma-separated check names; defaults to all applicable.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
}

#[derive(Args, Debug)]
pub struct DeformArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Deformation constant alpha (> 0).
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Deformation function beta, an expression in the chart coordinates.
    #[arg(long)]
    pub beta: String,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    #[arg(long, default_value_t = IDENTITY_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
pub enum Format {
    Text,
    Json,
}

const CHECK_NAMES: &[&str] = &[
    "axioms",
    "almost-cosymplectic",
    "kahler-leaves",
    "cr-integrability",
    "levi-flatness",
    "cosymplectic",
    "kmn",
    "hermitian-connection",
];

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Serialize)]
struct CheckOutcome {
    check: String,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct RunReport {
    seed: u64,
    points: usize,
    tolerance: f64,
    pass: bool,
    checks: Vec<CheckOutcome>,
}

fn load_input(input: &InputArgs) -> Result<LoadedManifold> {
    let file = match (&input.file, &input.model) {
        (Some(path), None) => {
            let src = fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            ManifoldFile::from_json(&src)?
        }
        (None, Some(name)) => {
            let mut file = ManifoldFile::from_model(name, input.n, input.mu);
            // builtin model spaces come with known nullity coefficients
            file.kmn = match name.as_str() {
                "flat" => Some(crate::manifold::KmnSpec {
                    kappa: "0".into(),
                    mu: "0".into(),
                    nu: "0".into(),
                }),
                "model-frame" | "model-global-cr" => Some(crate::manifold::KmnSpec {
                    kappa: "-1".into(),
                    mu: format!("{}", input.mu),
                    nu: "0".into(),
                }),
                _ => None,
            };
            file
        }
        (Some(_), Some(_)) => {
            return Err(Error::InvalidInput(
                "give either a manifold file or --model, not both".into(),
            ))
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "no input: give a manifold file or --model".into(),
            ))
        }
    };
    file.load()
}

fn outcome(name: &str, report: VerificationReport) -> CheckOutcome {
    CheckOutcome {
        check: name.to_string(),
        status: if report.pass { Status::Pass } else { Status::Fail },
        report: Some(serde_json::to_value(&report).expect("report serializes")),
        note: None,
    }
}

fn skip(name: &str, note: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        check: name.to_string(),
        status: Status::Skip,
        report: None,
        note: Some(note.into()),
    }
}

fn run_checks(m: &LoadedManifold, cfg: &RunArgs) -> Result<RunReport> {
    if cfg.points == 0 {
        return Err(Error::InvalidInput("--points must be at least 1".into()));
    }
    if !(cfg.tol > 0.0) {
        return Err(Error::InvalidInput("--tol must be positive".into()));
    }
    let selected: Vec<String> = if cfg.checks.is_empty() {
        CHECK_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        for c in &cfg.checks {
            if !CHECK_NAMES.contains(&c.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "unknown check `{c}`; known checks: {}",
                    CHECK_NAMES.join(", ")
                )));
            }
        }
        cfg.checks.clone()
    };
    let explicit = !cfg.checks.is_empty();

    let s = &m.structure;
    let sample = Sample::draw(&s.chart, cfg.seed, cfg.points);
    let mut checks = Vec::new();
    let mut cr_integrable = true;
    for name in &selected {
        let out = match name.as_str() {
            "axioms" => outcome(name, check_acm_axioms(s, &sample, cfg.tol)?),
            "almost-cosymplectic" => outcome(name, check_almost_cosymplectic(s, &sample, cfg.tol)?),
            "kahler-leaves" => outcome(name, check_kahler_leaves(s, &sample, cfg.tol)?),
            "cr-integrability" => {
                let rep = check_cr_integrability(s, &sample, cfg.tol)?;
                cr_integrable = rep.pass;
                outcome(name, rep)
            }
            "levi-flatness" => outcome(name, check_levi_flatness(s, &sample, cfg.tol)?),
            "cosymplectic" => {
                // the three characterizations must agree with each other;
                // a manifold that is coherently non-cosymplectic passes
                let rep = check_cosymplectic(s, &sample, cfg.tol)?;
                CheckOutcome {
                    check: name.clone(),
                    status: if rep.verdicts_agree { Status::Pass } else { Status::Fail },
                    report: Some(serde_json::to_value(&rep).expect("report serializes")),
                    note: None,
                }
            }
            "kmn" => match &m.kmn {
                Some((k, mu, nu)) => {
                    let nullity = check_kmn(s, k, mu, nu, &sample, cfg.tol)?;
                    let relations = check_kmn_relations(s, k, mu, nu, &sample, cfg.tol)?;
                    checks.push(outcome("kmn", nullity));
                    outcome("kmn-relations", relations)
                }
                None if explicit => {
                    return Err(Error::InvalidInput(
                        "check `kmn` needs kappa/mu/nu expressions in the input".into(),
                    ))
                }
                None => skip(name, "no nullity coefficients in the input"),
            },
            "hermitian-connection" => {
                if cr_integrable {
                    match check_hermitian_connection(s, &sample, cfg.tol.max(1e-8)) {
                        Ok(rep) => outcome(name, rep),
                        Err(Error::NotCrIntegrable { .. }) => {
                            skip(name, "structure is not CR-integrable")
                        }
                        Err(e) => return Err(e),
                    }
                } else {
                    skip(name, "structure is not CR-integrable")
                }
            }
            _ => unreachable!("validated above"),
        };
        checks.push(out);
    }
    let pass = checks.iter().all(|c| !matches!(c.status, Status::Fail));
    Ok(RunReport {
        seed: cfg.seed,
        points: cfg.points,
        tolerance: cfg.tol,
        pass,
        checks,
    })
}

fn print_run_report(rep: &RunReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(rep).unwrap()),
        Format::Text => {
            for c in &rep.checks {
                let (status, detail) = match c.status {
                    Status::Pass => ("pass", residual_note(c)),
                    Status::Fail => ("FAIL", residual_note(c)),
                    Status::Skip => ("skip", c.note.clone().unwrap_or_default()),
                };
                println!("{status}  {:<22} {detail}", c.check);
            }
            println!(
                "{}  ({} checks, {} points, seed {})",
                if rep.pass { "PASS" } else { "FAIL" },
                rep.checks.len(),
                rep.points,
                rep.seed
            );
        }
    }
}

fn residual_note(c: &CheckOutcome) -> String {
    let Some(rep) = &c.report else {
        return String::new();
    };
    match rep.get("max_residual").and_then(|v| v.as_f64()) {
        Some(r) => format!("max residual {r:.3e}"),
        // composite report: show the three sub-verdicts
        None => ["normality", "nabla_phi", "goldberg_yano"]
            .iter()
            .filter_map(|k| {
                let sub = rep.get(*k)?;
                let p = sub.get("pass")?.as_bool()?;
                Some(format!("{k}={}", if p { "pass" } else { "fail" }))
            })
            .collect::<Vec<_>>()
            .join(" "),
    }
}

fn cmd_verify(args: &RunArgs, gate: bool) -> Result<i32> {
    let m = load_input(&args.input)?;
    let rep = run_checks(&m, args)?;
    print_run_report(&rep, args.format);
    Ok(if !gate || rep.pass { 0 } else { 1 })
}

#[derive(Serialize)]
struct KmnRunReport {
    seed: u64,
    points: Vec<PointEstimate>,
}

#[derive(Serialize)]
struct PointEstimate {
    point: Vec<f64>,
    kappa: Option<f64>,
    mu: Option<f64>,
    nu: Option<f64>,
    residual: f64,
    underdetermined: bool,
}

fn cmd_estimate_kmn(args: &RunArgs) -> Result<i32> {
    let m = load_input(&args.input)?;
    if args.points == 0 {
        return Err(Error::InvalidInput("--points must be at least 1".into()));
    }
    let sample = Sample::draw(&m.structure.chart, args.seed, args.points);
    let mut points = Vec::new();
    for p in &sample.points {
        let fit = estimate_kmn(&m.structure, p)?;
        points.push(PointEstimate {
            point: p.clone(),
            kappa: fit.kappa,
            mu: fit.mu,
            nu: fit.nu,
            residual: fit.residual,
            underdetermined: fit.underdetermined,
        });
    }
    let rep = KmnRunReport {
        seed: args.seed,
        points,
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rep).unwrap()),
        Format::Text => {
            for e in &rep.points {
                let show = |v: Option<f64>| match v {
                    Some(x) => format!("{x:+.9}"),
                    None => "underdetermined".to_string(),
                };
                println!(
                    "kappa {}  mu {}  nu {}  residual {:.3e}",
                    show(e.kappa),
                    show(e.mu),
                    show(e.nu),
                    e.residual
                );
            }
        }
    }
    Ok(0)
}

fn cmd_deform(args: &DeformArgs) -> Result<i32> {
    let m = load_input(&args.input)?;
    let s: &ChartStructure = &m.structure;
    let param_names: Vec<String> = s.params.keys().cloned().collect();
    let beta: Expr = Parser::new(&s.chart)
        .with_param_names(&param_names)
        .parse(&args.beta)
        .map_err(|e| Error::InvalidInput(format!("in beta expression: {e}")))?;
    let sample = Sample::draw(&s.chart, args.seed, args.points);
    let deformed = d_conformal_deform(s, args.alpha, &beta, &sample, args.tol)?;
    println!("{}", render_structure(&deformed).to_json());
    Ok(0)
}

fn cmd_list_models(format: Format) -> i32 {
    let entries = registry();
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = entries
                .iter()
                .map(|(name, desc)| serde_json::json!({ "name": name, "description": desc }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&items).unwrap());
        }
        Format::Text => {
            for (name, desc) in entries {
                println!("{name:<18} {desc}");
            }
        }
    }
    0
}

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args, true),
        Command::Report(args) => cmd_verify(args, false),
        Command::EstimateKmn(args) => cmd_estimate_kmn(args),
        Command::Deform(args) => cmd_deform(args),
        Command::ListModels { format } => return cmd_list_models(*format),
    };
    match result {
        Ok(code) => code,
        Err(e @ Error::DeformationNotAdmissible { .. }) => {
            eprintln!("error: {e}");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
