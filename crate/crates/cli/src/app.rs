//! Command definitions and dispatch. Every command renders to a string; the
//! binary prints it and maps errors to exit codes (1 for computation-level
//! failures, 2 for usage errors).

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use leibniz_core::catalog;
use leibniz_core::cohomology::{derivation_space, second_cohomology};
use leibniz_core::degeneration::{builtin_fixtures, fixture_label, run_fixture, DegenerationFixture};
use leibniz_core::invariants::{
    c11_exact, cij_sampled, degeneration_report, orbit_dim, Verdict,
    DEFAULT_SAMPLE_SEED,
};
use leibniz_core::matrix::Matrix;
use leibniz_core::scalar::Rational;
use leibniz_core::Algebra;

use crate::json::{self as schema};
use crate::report;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Computation(_) => 1,
        }
    }
}

fn computation(e: impl std::fmt::Display) -> AppError {
    AppError::Computation(e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "leibniz",
    about = "Exact structure-constant computations for finite-dimensional Leibniz algebras",
    after_help = "Algebras are named by the grammar KEY(n[,param=value]...), e.g. \
\"R2(5,alpha=1/2)\", \"R5(6,a4=1)\", \"RL3(6,j=4)\"; run `leibniz catalog` for \
the family list. A target may also be a path to an algebra JSON file."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of human-readable tables
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the constructible algebra families and parameter schemas
    Catalog,
    /// Print an algebra's multiplication table
    Show { target: String },
    /// Check the Leibniz identity; nonzero defects exit with status 1
    Check { target: String },
    /// Compute the derivation space: dimension and basis matrices
    Der { target: String },
    /// Compute second-cohomology dimensions (ZL2, BL2, HL2)
    Cohomology { target: String },
    /// Evaluate a trace invariant or the orbit dimension
    Invariant {
        kind: InvariantKind,
        target: String,
        /// First power (cij only)
        #[arg(long, default_value_t = 1)]
        i: u32,
        /// Second power (cij only)
        #[arg(long, default_value_t = 1)]
        j: u32,
        /// Number of sample pairs (cij only)
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Run degeneration fixtures: the built-in six or one from a JSON file
    Degenerate {
        /// Path to a fixture JSON file
        fixture: Option<String>,
        /// Run the built-in fixtures instead of a file
        #[arg(long)]
        builtin: bool,
        /// Size for --builtin
        #[arg(long)]
        n: Option<usize>,
    },
    /// Grade the degeneration necessary conditions for source -> target
    Compare { source: String, target: String },
    /// Regenerate the verification tables
    Report {
        #[command(subcommand)]
        what: ReportKind,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum InvariantKind {
    C11,
    Cij,
    Orbit,
}

#[derive(Subcommand, Debug)]
pub enum ReportKind {
    /// Recompute every table row and degeneration over a size range
    Paper {
        #[arg(long, default_value_t = 4)]
        nmin: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Sample pairs per sampled-invariant row
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

/// Reads `LEIBNIZ_SEED` (decimal or 0x-prefixed hex), falling back to the
/// documented default.
pub fn sampling_seed() -> Result<u64, AppError> {
    match std::env::var("LEIBNIZ_SEED") {
        Err(_) => Ok(DEFAULT_SAMPLE_SEED),
        Ok(raw) => {
            let raw = raw.trim();
            let parsed = if let Some(hex) = raw.strip_prefix("0x") {
                u64::from_str_radix(hex, 16)
            } else {
                raw.parse()
            };
            parsed.map_err(|_| AppError::Usage(format!("invalid LEIBNIZ_SEED `{raw}`")))
        }
    }
}

/// Resolves a target: a catalog name when it looks like one, otherwise a
/// JSON file path.
fn resolve_target(target: &str) -> Result<Algebra, AppError> {
    if target.contains('(') {
        catalog::build_from_name(target).map_err(|e| AppError::Usage(e.to_string()))
    } else {
        let path = Path::new(target);
        let text = std::fs::read_to_string(path)
            .map_err(|e| AppError::Usage(format!("cannot read `{target}`: {e}")))?;
        let parsed: schema::AlgebraJson = serde_json::from_str(&text)
            .map_err(|e| AppError::Usage(format!("invalid algebra JSON in `{target}`: {e}")))?;
        schema::algebra_from_json(&parsed).map_err(|e| AppError::Usage(e.to_string()))
    }
}

/// Resolves and insists on a Leibniz algebra (the computations downstream
/// assume the identity holds).
fn resolve_leibniz(target: &str) -> Result<Algebra, AppError> {
    let a = resolve_target(target)?;
    let defects = a.tensor.leibniz_defects();
    if !defects.is_empty() {
        return Err(AppError::Computation(format!(
            "`{}` violates the Leibniz identity on {} basis triples (run `check` for details)",
            a.name,
            defects.len()
        )));
    }
    Ok(a)
}

fn label_term(labels: &[String], k: usize, c: &Rational) -> String {
    use num_traits::One;
    if c.is_one() {
        labels[k].clone()
    } else if *c == -Rational::one() {
        format!("-{}", labels[k])
    } else {
        format!("{c}*{}", labels[k])
    }
}

fn render_vector(labels: &[String], v: &[Rational]) -> String {
    use num_traits::Zero;
    let mut parts = Vec::new();
    for (k, c) in v.iter().enumerate() {
        if !c.is_zero() {
            parts.push(label_term(labels, k, c));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

fn render_table(a: &Algebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} (dim {})", a.name, a.dim());
    let _ = writeln!(out, "basis: {}", a.basis_labels.join(", "));
    if let Some(nr) = &a.nilradical {
        let names: Vec<&str> = nr.iter().map(|&i| a.basis_labels[i].as_str()).collect();
        let _ = writeln!(out, "nilradical: span{{{}}}", names.join(", "));
    }
    let d = a.dim();
    let mut any = false;
    for i in 0..d {
        for j in 0..d {
            let v = a.tensor.basis_bracket(i, j);
            if v.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                let _ = writeln!(
                    out,
                    "[{}, {}] = {}",
                    a.basis_labels[i],
                    a.basis_labels[j],
                    render_vector(&a.basis_labels, v)
                );
                any = true;
            }
        }
    }
    if !any {
        let _ = writeln!(out, "all products are zero");
    }
    out
}

fn render_matrix(m: &Matrix<Rational>) -> String {
    (0..m.rows())
        .map(|r| {
            let cells: Vec<String> = m.row(r).iter().map(|v| v.to_string()).collect();
            format!("  [{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn run(cli: &Cli) -> Result<String, AppError> {
    match &cli.command {
        Command::Catalog => {
            let entries = catalog::list_entries();
            if cli.json {
                let value: Vec<serde_json::Value> = entries
                    .iter()
                    .map(|e| {
                        json!({
                            "key": e.key,
                            "params": e.params,
                            "validity": e.validity,
                            "summary": e.summary,
                        })
                    })
                    .collect();
                Ok(serde_json::to_string_pretty(&value).unwrap() + "\n")
            } else {
                let mut out = String::new();
                for e in entries {
                    let _ = writeln!(out, "{:<7} params: {:<50} validity: {}", e.key, e.params, e.validity);
                    let _ = writeln!(out, "        {}", e.summary);
                }
                Ok(out)
            }
        }
        Command::Show { target } => {
            let a = resolve_target(target)?;
            if cli.json {
                Ok(serde_json::to_string_pretty(&schema::algebra_to_json(&a)).unwrap() + "\n")
            } else {
                Ok(render_table(&a))
            }
        }
        Command::Check { target } => {
            let a = resolve_target(target)?;
            let defects = a.tensor.leibniz_defects();
            if cli.json {
                let value = json!({
                    "name": a.name,
                    "leibniz": defects.is_empty(),
                    "defects": defects.iter().map(|d| json!({
                        "x": d.x + 1, "y": d.y + 1, "z": d.z + 1,
                        "defect": d.defect.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
                let text = serde_json::to_string_pretty(&value).unwrap() + "\n";
                if defects.is_empty() {
                    Ok(text)
                } else {
                    Err(AppError::Computation(text))
                }
            } else if defects.is_empty() {
                Ok(format!("ok: {} satisfies the Leibniz identity\n", a.name))
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "{} violates the Leibniz identity:", a.name);
                for d in &defects {
                    let _ = writeln!(
                        out,
                        "  ({}, {}, {}): defect = {}",
                        a.basis_labels[d.x],
                        a.basis_labels[d.y],
                        a.basis_labels[d.z],
                        render_vector(&a.basis_labels, &d.defect)
                    );
                }
                Err(AppError::Computation(out))
            }
        }
        Command::Der { target } => {
            let a = resolve_leibniz(target)?;
            let basis = derivation_space(&a.tensor);
            if cli.json {
                let value = json!({
                    "name": a.name,
                    "dim": basis.len(),
                    "basis": basis.iter().map(|m| {
                        (0..m.rows()).map(|r| {
                            m.row(r).iter().map(|v| v.to_string()).collect::<Vec<_>>()
                        }).collect::<Vec<_>>()
                    }).collect::<Vec<_>>(),
                });
                Ok(serde_json::to_string_pretty(&value).unwrap() + "\n")
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "dim Der({}) = {}", a.name, basis.len());
                for (idx, m) in basis.iter().enumerate() {
                    let _ = writeln!(out, "d_{}:", idx + 1);
                    let _ = writeln!(out, "{}", render_matrix(m));
                }
                Ok(out)
            }
        }
        Command::Cohomology { target } => {
            let a = resolve_leibniz(target)?;
            let coh = second_cohomology(&a.tensor).map_err(computation)?;
            if cli.json {
                let value = json!({
                    "name": a.name,
                    "zl2": coh.cocycles.dim(),
                    "bl2": coh.coboundaries.dim(),
                    "hl2": coh.quotient_dim,
                });
                Ok(serde_json::to_string_pretty(&value).unwrap() + "\n")
            } else {
                Ok(format!(
                    "dim ZL2({name}) = {}\ndim BL2({name}) = {}\ndim HL2({name}) = {}\n",
                    coh.cocycles.dim(),
                    coh.coboundaries.dim(),
                    coh.quotient_dim,
                    name = a.name
                ))
            }
        }
        Command::Invariant {
            kind,
            target,
            i,
            j,
            samples,
        } => {
            let a = resolve_leibniz(target)?;
            let (label, value) = match kind {
                InvariantKind::C11 => ("c11".to_string(), c11_exact(&a.tensor).to_string()),
                InvariantKind::Cij => {
                    if *i < 1 || *j < 1 {
                        return Err(AppError::Usage("powers must be at least 1".into()));
                    }
                    let seed = sampling_seed()?;
                    (
                        format!("c{i}{j}"),
                        cij_sampled(&a.tensor, *i, *j, *samples, seed).to_string(),
                    )
                }
                InvariantKind::Orbit => ("orbit".to_string(), orbit_dim(&a.tensor).to_string()),
            };
            if cli.json {
                let v = json!({ "name": a.name, "invariant": label, "value": value });
                Ok(serde_json::to_string_pretty(&v).unwrap() + "\n")
            } else {
                Ok(format!("{value}\n"))
            }
        }
        Command::Degenerate {
            fixture,
            builtin,
            n,
        } => {
            let fixtures: Vec<DegenerationFixture> = if *builtin {
                let n = n.ok_or_else(|| AppError::Usage("--builtin requires --n".into()))?;
                builtin_fixtures(n).map_err(|e| AppError::Usage(e.to_string()))?
            } else {
                let path = fixture
                    .as_ref()
                    .ok_or_else(|| AppError::Usage("pass a fixture file or --builtin --n N".into()))?;
                let text = std::fs::read_to_string(path)
                    .map_err(|e| AppError::Usage(format!("cannot read `{path}`: {e}")))?;
                let parsed: schema::FixtureJson = serde_json::from_str(&text)
                    .map_err(|e| AppError::Usage(format!("invalid fixture JSON: {e}")))?;
                vec![schema::fixture_from_json(&parsed).map_err(|e| AppError::Usage(e.to_string()))?]
            };
            let mut out = String::new();
            let mut json_rows = Vec::new();
            let mut failure: Option<String> = None;
            for f in &fixtures {
                let label = fixture_label(f);
                match run_fixture(f) {
                    Ok(outcome) => {
                        let consistent = matches!(outcome.report.verdict, Verdict::Possible);
                        if cli.json {
                            json_rows.push(json!({
                                "fixture": label,
                                "verdict": "verified",
                                "conditions_consistent": consistent,
                                "report": serde_json::to_value(schema::report_to_json(&outcome.report)).unwrap(),
                            }));
                        } else {
                            let _ = writeln!(out, "verified: {label}");
                            if !consistent {
                                let _ = writeln!(out, "  warning: necessary conditions rule this pair out");
                            }
                        }
                    }
                    Err(e) => {
                        failure.get_or_insert_with(|| format!("{label}: {e}"));
                        if cli.json {
                            json_rows.push(json!({
                                "fixture": label,
                                "verdict": "failed",
                                "error": e.to_string(),
                            }));
                        } else {
                            let _ = writeln!(out, "FAILED: {label}: {e}");
                        }
                    }
                }
            }
            let rendered = if cli.json {
                serde_json::to_string_pretty(&json_rows).unwrap() + "\n"
            } else {
                out
            };
            match failure {
                None => Ok(rendered),
                Some(_) => Err(AppError::Computation(rendered)),
            }
        }
        Command::Compare { source, target } => {
            let a = resolve_leibniz(source)?;
            let b = resolve_leibniz(target)?;
            let report = degeneration_report(&a, &b).map_err(computation)?;
            if cli.json {
                Ok(
                    serde_json::to_string_pretty(&schema::report_to_json(&report)).unwrap()
                        + "\n",
                )
            } else {
                let mut out = String::new();
                let _ = writeln!(out, "degeneration candidate {} -> {}", report.source, report.target);
                for c in &report.conditions {
                    let lhs = c.lhs.as_deref().unwrap_or("-");
                    let rhs = c.rhs.as_deref().unwrap_or("-");
                    let _ = writeln!(out, "  {:<24} {:<9} ({lhs} vs {rhs})", c.condition, c.status.to_string());
                }
                match &report.verdict {
                    Verdict::Possible => {
                        let _ = writeln!(out, "verdict: possible (no necessary condition fails)");
                    }
                    Verdict::RuledOut(reasons) => {
                        let _ = writeln!(out, "verdict: ruled out ({})", reasons.join(", "));
                    }
                }
                Ok(out)
            }
        }
        Command::Report { what } => {
            let ReportKind::Paper {
                nmin,
                nmax,
                samples,
            } = what;
            if nmin > nmax || *nmin < 4 {
                return Err(AppError::Usage(
                    "report paper requires 4 <= nmin <= nmax".into(),
                ));
            }
            let seed = sampling_seed()?;
            let rep = report::paper_report(*nmin, *nmax, seed, *samples);
            let rendered = if cli.json {
                serde_json::to_string_pretty(&rep).unwrap() + "\n"
            } else {
                report::render_text(&rep)
            };
            if rep.failed == 0 {
                Ok(rendered)
            } else {
                Err(AppError::Computation(rendered))
            }
        }
    }
}
