//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or parse error, 3 IO error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{example_family, reality_check, NormalFormCurve, SingularityTypeSpec};
use crate::error::Error;
use crate::harmonic::{build_sequence, check_cross_table, check_norm_products, check_reality, check_structure};
use crate::io::{fmt_f64, read_curve, CurveFile};
use crate::plucker::{degrees_exact, degrees_numeric, singularity_report};
use crate::quadrature::QuadratureParams;
use crate::sample::sample_surface;
use crate::twistor::{is_superhorizontal, CurveC7};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "supermin", version, about = "Superminimal almost complex 2-spheres in S^6")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the directrix curve with increments (k1, k2, k1, k1, k2, k1).
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1000))]
        k1: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1000))]
        k2: u32,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every identity check on a curve file.
    Verify {
        curve: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Singularity types, totals, degrees and area.
    Report {
        curve: PathBuf,
        #[arg(long, default_value_t = 1e-3, value_parser = positive)]
        tol: f64,
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(8..))]
        grid: u32,
        /// Skip the numeric degrees.
        #[arg(long)]
        exact_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate γ_p over the sphere and compare with the exact degree.
    Integrate {
        curve: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=5))]
        p: u32,
        #[arg(long, default_value_t = 0.01, value_parser = positive)]
        tol: f64,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(8..))]
        grid: u32,
    },
    /// Sample the surface in S⁶ on an n×n grid per chart.
    Sample {
        curve: PathBuf,
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(8..))]
        grid: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Obj,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => EXIT_IO,
        Error::Parse(_) | Error::Json(_) | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Result of one named check in `verify`.
#[derive(Clone, Debug, Serialize)]
pub struct CheckStatus {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub checks: Vec<CheckStatus>,
}

fn status(name: &str, pass: bool, detail: Option<String>) -> CheckStatus {
    CheckStatus { name: name.into(), pass, detail }
}

/// The `verify` checks on a curve.
pub fn verify_curve(f: &CurveC7) -> VerifyReport {
    let mut checks = Vec::new();
    checks.push(match is_superhorizontal(f) {
        Ok(c) => status(
            "superhorizontal",
            c.superhorizontal,
            c.witness.map(|w| format!("f x f' has {} z^{} on e{}", w.coefficient, w.exponent, w.component + 1)),
        ),
        Err(e) => status("superhorizontal", false, Some(e.to_string())),
    });
    match build_sequence(f) {
        Ok(seq) => {
            let structure = check_structure(&seq);
            let detail = structure.failures().map(|c| c.name.clone()).collect::<Vec<_>>();
            checks.push(status("harmonic sequence", structure.all_pass(), (!detail.is_empty()).then(|| detail.join("; "))));
            let reality = check_reality(&seq);
            let detail = reality.failures().map(|c| c.name.clone()).collect::<Vec<_>>();
            checks.push(status("projective reality", reality.all_pass(), (!detail.is_empty()).then(|| detail.join("; "))));
            let norms = check_norm_products(&seq);
            let detail = norms
                .ratios
                .iter()
                .map(|r| format!("{} = {}", r.name, r.constant.as_deref().unwrap_or("not constant")))
                .collect::<Vec<_>>()
                .join("; ");
            checks.push(status("norm products", norms.all_pass(), Some(detail)));
            let table = check_cross_table(&seq, 10);
            let bad: Vec<String> =
                table.entries.iter().filter(|e| !e.holds).map(|e| format!("f{} x f{}", e.i, e.j)).collect();
            let detail = format!("unit gauge deviation {:.3e}", table.gauge_deviation);
            let detail = if bad.is_empty() { detail } else { format!("{detail}; failing {}", bad.join(", ")) };
            checks.push(status("cross table", table.all_pass(), Some(detail)));
        }
        Err(e) => checks.push(status("harmonic sequence", false, Some(e.to_string()))),
    }
    checks.push(match normal_form_of(f) {
        Ok(c) => {
            let r = reality_check(&c, 0.0);
            let detail = match (&r.mu, r.failure) {
                (_, Some((j, i))) => format!("fails at (j, i) = ({j}, {i})"),
                (Some(mu), None) => format!("mu = {mu}"),
                _ => String::new(),
            };
            status("normal form reality", r.holds, Some(detail))
        }
        Err(e) => status("normal form reality", false, Some(e.to_string())),
    });
    VerifyReport { pass: checks.iter().all(|c| c.pass), checks }
}

/// Reads the exponent ladder off the curve itself.
fn normal_form_of(f: &CurveC7) -> Result<NormalFormCurve<crate::algebra::AlgScalar>, Error> {
    let e = f.exponents();
    if e.len() != 7 || e[0] != 0 {
        return Err(Error::InvalidArgument(format!("exponents {e:?} are not a 7-step ladder from 0")));
    }
    let k: [u32; 6] = std::array::from_fn(|j| e[j + 1] - e[j]);
    NormalFormCurve::from_curve(f, SingularityTypeSpec::new(k)?)
}

fn load(path: &Path) -> Result<CurveC7, Error> {
    read_curve(path)?.curve()
}

fn run_command(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Gen { k1, k2, out } => {
            let f = example_family(k1, k2)?;
            emit(out.as_deref(), &CurveFile::new(Some([k1, k2]), &f).to_json()?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { curve, out } => {
            let f = load(&curve)?;
            let report = verify_curve(&f);
            for c in report.checks.iter().filter(|c| !c.pass) {
                eprintln!("FAIL {}: {}", c.name, c.detail.as_deref().unwrap_or(""));
            }
            emit(out.as_deref(), &(serde_json::to_string_pretty(&report)? + "\n"))?;
            Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Report { curve, tol, grid, exact_only, out } => {
            let f = load(&curve)?;
            let params = QuadratureParams { tol, grid: grid as usize, ..Default::default() };
            let report = singularity_report(&f, (!exact_only).then_some(&params))?;
            emit(out.as_deref(), &(serde_json::to_string_pretty(&report)? + "\n"))?;
            Ok(if report.plucker && report.degrees_agree { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Integrate { curve, p, tol, grid } => {
            let f = load(&curve)?;
            let exact = degrees_exact(&f)?[p as usize] as f64;
            // the radial budget scales with the grid: 8 angular nodes per interval
            let params = QuadratureParams { tol, grid: grid as usize, max_intervals: (grid as usize / 8).max(1) };
            match degrees_numeric(&f, p as usize, &params) {
                Ok(r) => {
                    println!("p {p} estimate {} exact {exact} error {}", fmt_f64(r.estimate), fmt_f64(r.error));
                    Ok(if (r.estimate - exact).abs() <= tol * exact { EXIT_OK } else { EXIT_FAIL })
                }
                Err(Error::Quadrature { estimate, error }) => {
                    println!("p {p} estimate {} exact {exact} error {}", fmt_f64(estimate), fmt_f64(error));
                    eprintln!("quadrature did not reach tolerance {tol}");
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(e),
            }
        }
        Command::Sample { curve, grid, format, out } => {
            let f = load(&curve)?;
            let s = sample_surface(&f, grid as usize)?;
            let text = match format {
                Format::Json => s.to_json(),
                Format::Csv => s.to_csv(),
                Format::Obj => s.to_obj([0, 1, 2]),
            };
            emit(out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("SUPERMIN_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            // a pool may already exist when called twice in one process
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    configure_threads();
    match run_command(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
