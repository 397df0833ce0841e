//! Argument parsing and the subcommands.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid action, 3 validation
//! failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ghilb_core::euclid::{euclid_trace, primitive_sequence};
use ghilb_core::fan::{build_fan, validate_fan, DEFAULT_SAMPLES, DEFAULT_SEED};
use ghilb_core::{enumerate_all, predicted_count, Error, GroupAction};
use rayon::prelude::*;

use crate::document::{user_span, FanDocument};
use crate::svg::{export_svg, Chart, RenderConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_ACTION: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ghilb", version, about = "The G-Hilbert scheme fan of the cyclic action 1/r(1, a, r-a)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build, validate and export the fan.
    Fan {
        r: i64,
        a: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = ChartArg::Barycentric)]
        chart: ChartArg,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also compare against the exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 720)]
        height: u32,
        /// Omit ray and wall labels from the drawing.
        #[arg(long)]
        no_labels: bool,
        /// Do not outline the triangles of transformations.
        #[arg(long)]
        no_triangles: bool,
    },
    /// List the G-sets, from the fan construction or (with --oracle) from
    /// exhaustive enumeration.
    Gsets {
        r: i64,
        a: i64,
        #[arg(long)]
        oracle: bool,
    },
    /// Print the predicted number of G-sets.
    Count {
        r: i64,
        a: i64,
        /// Compare with the exhaustive enumeration.
        #[arg(long)]
        check: bool,
    },
    /// Print b, the division chain and the primitive sequence.
    Euclid { r: i64, a: i64 },
    /// Check every action with r up to R_MAX against the enumeration.
    Verify {
        r_max: i64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ChartArg {
    Barycentric,
    Affine,
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidAction { .. } | Error::DegenerateAction { .. } | Error::NotCoprime { .. } => {
                EXIT_INVALID_ACTION
            }
            Error::BoundExceeded { .. } => EXIT_USAGE,
            _ => EXIT_VALIDATION,
        };
        Failure(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe (`ghilb gsets 30 7 | head`) is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure(EXIT_OK, String::new());
        }
        Failure(EXIT_USAGE, e.to_string())
    }
}

/// Runs the tool on `args` (including the program name), writing to the
/// process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure(EXIT_OK, _)) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Fan {
            r,
            a,
            format,
            chart,
            out: path,
            samples,
            seed,
            oracle,
            width,
            height,
            no_labels,
            no_triangles,
        } => {
            let action = GroupAction::new(r, a)?;
            let cfg = RenderConfig::new(
                match chart {
                    ChartArg::Barycentric => Chart::Barycentric,
                    ChartArg::Affine => Chart::AffineYz,
                },
                width,
                height,
                !no_labels,
                !no_triangles,
            )
            .map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
            let fan = build_fan(&action)?;
            let all = if oracle { Some(enumerate_all(&action)?) } else { None };
            let report = validate_fan(&fan, all.as_deref(), samples, seed);
            let doc = FanDocument::new(&fan, &report);
            let bytes = match format {
                Format::Text => doc.to_text(),
                Format::Json => doc.to_json(),
                Format::Svg => export_svg(&doc, &cfg),
            };
            match path {
                Some(p) => std::fs::write(p, bytes)?,
                None => out.write_all(bytes.as_bytes())?,
            }
            if !report.ok() {
                for f in &report.failures {
                    writeln!(err, "validation failure ({:?}): {}", f.check, f.detail)?;
                }
                return Err(Failure(EXIT_VALIDATION, format!("the fan of {action} failed validation")));
            }
        }
        Command::Gsets { r, a, oracle } => {
            let sets = if oracle {
                enumerate_all(&GroupAction::exploratory(r, a)?)?
            } else {
                build_fan(&GroupAction::new(r, a)?)?.gsets().cloned().collect()
            };
            for g in &sets {
                writeln!(out, "{}  valleys={}", user_span(g), g.valley_count())?;
            }
        }
        Command::Count { r, a, check } => {
            let action = GroupAction::exploratory(r, a)?;
            let predicted = predicted_count(&action);
            if !check {
                writeln!(out, "{predicted}")?;
            } else {
                let found = enumerate_all(&action)?.len() as u64;
                let verdict = if found == predicted { "OK" } else { "MISMATCH" };
                writeln!(out, "predicted {predicted}, enumerated {found}, {verdict}")?;
                if found != predicted {
                    return Err(Failure(EXIT_VALIDATION, format!("count mismatch for {action}")));
                }
            }
        }
        Command::Euclid { r, a } => {
            let action = GroupAction::new(r, a)?;
            let (b, rb) = (action.b() as u64, (r - action.b()) as u64);
            let t = euclid_trace(b.max(rb), b.min(rb));
            let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            writeln!(out, "action {action}")?;
            writeln!(out, "b = {}", action.original_b())?;
            writeln!(out, "trace of ({}, {}): p = {}; q = {}", t.p()[0], t.p()[1], join(t.p()), join(t.q()))?;
            let (lin, lin_rhs) = t.linear_identity();
            let (quad, quad_rhs) = t.quadratic_identity();
            writeln!(out, "sum q_l p_(l+1)   = {lin}, p_1 + p_2 - p_(n+1) = {lin_rhs}")?;
            writeln!(out, "sum q_l p_(l+1)^2 = {quad}, p_1 p_2 = {quad_rhs}")?;
            let seq = primitive_sequence(&action)?;
            writeln!(out, "primitive sequence (m = {}):", seq.m())?;
            for (n, g) in seq.members().iter().enumerate() {
                let note = if n == seq.m() { "  (not primitive)" } else { "" };
                writeln!(out, "  Γ_{} = {}{note}", n + 1, user_span(g))?;
            }
            writeln!(out, "predicted count = {}", predicted_count(&action))?;
            if lin != lin_rhs || quad != quad_rhs {
                return Err(Failure(EXIT_VALIDATION, "sum identities fail".into()));
            }
        }
        Command::Verify { r_max, samples } => {
            let cases: Vec<(i64, i64)> = (5..=r_max)
                .flat_map(|r| (2..r - 1).map(move |a| (r, a)))
                .filter(|&(r, a)| GroupAction::new(r, a).is_ok())
                .collect();
            let results: Vec<(i64, i64, Result<usize, String>)> =
                cases.par_iter().map(|&(r, a)| (r, a, verify_one(r, a, samples))).collect();
            let mut failed = 0;
            for (r, a, res) in &results {
                match res {
                    Ok(n) => writeln!(out, "1/{r}(1,{a},{})  {n} G-sets  OK", r - a)?,
                    Err(msg) => {
                        failed += 1;
                        writeln!(out, "1/{r}(1,{a},{})  FAILED", r - a)?;
                        writeln!(err, "1/{r}(1,{a},{}): {msg}", r - a)?;
                    }
                }
            }
            writeln!(out, "{} actions, {failed} failures", results.len())?;
            if failed > 0 {
                return Err(Failure(EXIT_VALIDATION, format!("{failed} actions failed verification")));
            }
        }
    }
    Ok(())
}

fn verify_one(r: i64, a: i64, samples: usize) -> Result<usize, String> {
    let action = GroupAction::new(r, a).map_err(|e| e.to_string())?;
    let fan = build_fan(&action).map_err(|e| e.to_string())?;
    let oracle = enumerate_all(&action).map_err(|e| e.to_string())?;
    let report = validate_fan(&fan, Some(&oracle), samples, DEFAULT_SEED);
    if report.ok() {
        Ok(oracle.len())
    } else {
        Err(report.failures.iter().map(|f| format!("{:?}: {}", f.check, f.detail)).collect::<Vec<_>>().join("; "))
    }
}
