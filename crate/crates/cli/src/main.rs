//! `horoaut`: automorphism-group reports for toric, horospherical and
//! projective-bundle inputs.
//!
//! Exit codes: 0 success, 2 unreadable or schema-invalid input, 3 an input
//! invariant is violated, 4 two independent computations disagree. On failure
//! stdout stays empty and stderr names the invariant.

mod input;
mod render;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use horoaut::bundle::{bundle_batch, to_horospherical_datum};
use horoaut::fan::{classify_roots, demazure_roots, demazure_roots_bruteforce, toric_aut_report};
use horoaut::horospherical::{aut_report, extendable_fiber_roots};
use horoaut::par::Execution;
use horoaut::{BundleReport, BundleSpec, Error};
use serde::Serialize;

use input::{read_document, wrong_kind, InputDocument};
use render::{BundleOutput, FanRootsOutput, HoroAutOutput, Style};

#[derive(Parser, Debug)]
#[command(name = "horoaut", version, about = "Automorphism groups of toroidal horospherical varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Demazure roots and the toric automorphism report of a fan.
    FanRoots {
        /// Input document (`-` for stdin).
        path: PathBuf,
        #[command(flatten)]
        format: Format,
        /// Also scan `|m|_inf <= N` by brute force and require the same roots.
        #[arg(long, value_name = "N")]
        oracle_radius: Option<u64>,
    },
    /// B+-roots and the automorphism report of a horospherical datum.
    HoroAut {
        path: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Roots and certificates of a decomposable projective bundle (or a batch).
    Bundle {
        path: PathBuf,
        #[command(flatten)]
        format: Format,
        /// Recompute through the horospherical pipeline and require agreement.
        #[arg(long)]
        check_pipeline: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    /// One compact JSON object per report.
    #[arg(long)]
    json: bool,
    /// Human-readable report (default).
    #[arg(long)]
    text: bool,
}

/// A failed run: exit code plus the invariant it names.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub invariant: String,
    pub message: String,
}

impl Failure {
    pub fn schema(message: String) -> Self {
        Failure {
            code: 2,
            invariant: "SchemaError".into(),
            message,
        }
    }

    fn mismatch(invariant: &str, message: String) -> Self {
        Failure {
            code: 4,
            invariant: invariant.into(),
            message,
        }
    }
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e = e.into();
        Failure {
            code: 3,
            invariant: e.invariant().into(),
            message: e.to_string(),
        }
    }
}

fn use_color() -> bool {
    match std::env::var("HOROAUT_COLOR").as_deref() {
        Ok("never") => false,
        Ok("always") => true,
        _ => std::io::stdout().is_terminal(),
    }
}

/// Canonical JSON: compact, object keys sorted, one line.
fn json_line<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("reports serialize");
    let mut s = value.to_string();
    s.push('\n');
    s
}

fn fan_roots(path: PathBuf, format: Format, oracle_radius: Option<u64>, st: Style) -> Result<String, Failure> {
    let fan = match read_document(&path)? {
        InputDocument::Fan(f) => f,
        other => return Err(wrong_kind("fan", &other)),
    };
    let v = fan.validate()?;
    let roots = demazure_roots(&v);
    if let Some(r) = oracle_radius {
        let scanned = demazure_roots_bruteforce(&v, r);
        if scanned != roots {
            return Err(Failure::mismatch(
                "OracleMismatch",
                format!(
                    "enumeration found {} roots, brute-force scan at radius {r} found {}",
                    roots.len(),
                    scanned.len()
                ),
            ));
        }
    }
    let out = FanRootsOutput {
        partition: classify_roots(&roots),
        report: toric_aut_report(&v),
        roots,
        oracle_radius,
    };
    Ok(if format.json { json_line(&out) } else { render::fan_text(&out, st) })
}

fn horo_aut(path: PathBuf, format: Format, st: Style) -> Result<String, Failure> {
    let datum = match read_document(&path)? {
        InputDocument::Horospherical(d) => d,
        other => return Err(wrong_kind("horospherical", &other)),
    };
    let v = datum.validate()?;
    let out = HoroAutOutput {
        report: aut_report(&v)?,
        extendability: extendable_fiber_roots(&v),
    };
    Ok(if format.json { json_line(&out) } else { render::horo_text(&out, st) })
}

/// Recomputes a bundle report through the horospherical datum.
fn check_pipeline(spec: &BundleSpec, report: &BundleReport) -> Result<(), Failure> {
    let b = spec.validate()?;
    let datum = to_horospherical_datum(&b);
    let other = datum
        .validate()
        .and_then(|d| aut_report(&d))
        .map_err(|e| Failure::mismatch("PipelineMismatch", format!("derived datum rejected: {e}")))?;
    let mut a_dims = report.unipotent_dims.clone();
    let mut b_dims = other.unipotent_dims.clone();
    a_dims.sort_unstable();
    b_dims.sort_unstable();
    let a = (report.dim_aut_total, report.dim_aut_gp, report.n_semisimple, report.reductive, a_dims);
    let b = (other.dim_aut_total, other.dim_aut_gp, other.n_semisimple, other.reductive, b_dims);
    if a != b {
        return Err(Failure::mismatch(
            "PipelineMismatch",
            format!("bundle path gives {a:?}, horospherical path gives {b:?}"),
        ));
    }
    Ok(())
}

fn bundle(path: PathBuf, format: Format, check: bool, st: Style) -> Result<String, Failure> {
    let (specs, batch) = match read_document(&path)? {
        InputDocument::Bundle(s) => (vec![s], false),
        InputDocument::BundleBatch { specs } => (specs, true),
        other => return Err(wrong_kind("bundle or bundle_batch", &other)),
    };
    let reports = bundle_batch(&specs, Execution::default());
    let mut outs = Vec::with_capacity(specs.len());
    for (i, (spec, report)) in specs.iter().zip(reports).enumerate() {
        let report = report.map_err(|e| {
            let mut f = Failure::from(e);
            if batch {
                f.message = format!("spec {i}: {}", f.message);
            }
            f
        })?;
        if check {
            check_pipeline(spec, &report)?;
        }
        outs.push(BundleOutput {
            report,
            pipeline_checked: check,
        });
    }
    let mut s = String::new();
    for (i, out) in outs.iter().enumerate() {
        if format.json {
            s.push_str(&json_line(out));
        } else {
            if batch {
                s.push_str(&format!("== spec {i} ==\n"));
            }
            s.push_str(&render::bundle_text(out, st));
        }
    }
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let st = Style { color: use_color() };
    let result = match cli.command {
        Command::FanRoots {
            path,
            format,
            oracle_radius,
        } => fan_roots(path, format, oracle_radius, st),
        Command::HoroAut { path, format } => horo_aut(path, format, st),
        Command::Bundle {
            path,
            format,
            check_pipeline,
        } => bundle(path, format, check_pipeline, st),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("horoaut: error[{}]: {}", f.invariant, f.message);
            ExitCode::from(f.code)
        }
    }
}
