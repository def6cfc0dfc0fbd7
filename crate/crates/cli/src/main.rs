//! `lerch`: single evaluations, oracle sweeps and verification suites.
//!
//! Exit codes: 0 success, 1 usage or I/O error (or a failed verify suite),
//! 2 domain rejection, 3 numerical failure.

mod literal;
mod output;
mod request;
mod sweep;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lerch_core::{ComplexValue, QuadConfig};

use request::{FnId, MethodArg, Params};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

/// Tail tolerance of the direct-summation oracle.
const ORACLE_TOL: f64 = 1e-14;

#[derive(Parser)]
#[command(
    name = "lerch",
    version,
    about = "Lerch transcendent, polylogarithm and harmonic sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Compare a formula with direct summation over a grid; writes CSV.
    Sweep(SweepArgs),
    /// Run the built-in verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PointArgs {
    #[arg(long = "fn", value_enum)]
    function: FnId,
    #[arg(long, value_parser = literal::parse_complex, allow_hyphen_values = true)]
    m: Option<ComplexValue>,
    #[arg(long, value_parser = literal::parse_complex, allow_hyphen_values = true)]
    k: Option<ComplexValue>,
    #[arg(long, value_parser = literal::parse_complex, allow_hyphen_values = true)]
    b: Option<ComplexValue>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

impl PointArgs {
    fn params(&self) -> Params {
        Params {
            m: self.m,
            k: self.k,
            b: self.b,
            n: self.n,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Quadrature relative tolerance (oracle tail tolerance with --method oracle).
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the record here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    point: PointArgs,
    /// First axis, `param.component:start:stop:step` (e.g. `m.re:-3:-0.5:0.5`).
    #[arg(long, allow_hyphen_values = true)]
    axis1: String,
    #[arg(long, allow_hyphen_values = true)]
    axis2: Option<String>,
    /// Relative error above which a point is flagged `fail`.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// CSV destination; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = verify::Suite::All)]
    suite: verify::Suite,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("usage: lerch <eval|sweep|verify> [OPTIONS]; see `lerch --help`");
    ExitCode::from(EXIT_USAGE)
}

fn quad_config(tol: Option<f64>) -> Result<QuadConfig, String> {
    let mut cfg = QuadConfig::default();
    if let Some(t) = tol {
        cfg.rel_tol = t;
    }
    if let Ok(level) = std::env::var("LERCH_MAX_QUAD_LEVEL") {
        cfg.max_level = level
            .trim()
            .parse()
            .map_err(|_| format!("LERCH_MAX_QUAD_LEVEL={level:?} is not an integer"))?;
    }
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn cmd_eval(args: EvalArgs) -> ExitCode {
    let f = args.point.function;
    let p = match args.point.params().for_fn(f) {
        Ok(p) => p,
        Err(msg) => return usage_error(msg),
    };
    let cfg = match quad_config(args.tol.filter(|_| args.point.method != MethodArg::Oracle)) {
        Ok(c) => c,
        Err(msg) => return usage_error(msg),
    };
    let oracle_tol = args.tol.unwrap_or(ORACLE_TOL);
    if !(oracle_tol > 0.0) {
        return usage_error("--tol must be positive");
    }
    let e = request::run(f, &p, args.point.method, &cfg, oracle_tol);
    let text = match args.format {
        Format::Plain => output::plain(f, &p, &e),
        Format::Json => output::json(f, &p, &e),
    };
    if let Err(msg) = write_out(args.out.as_ref(), &text) {
        return usage_error(msg);
    }
    match &e.outcome {
        Ok(_) => ExitCode::SUCCESS,
        Err(err) if err.is_domain() => {
            eprintln!("rejected: {err}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(err) => {
            eprintln!("numerical failure: {err}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    let axis1 = match sweep::Axis::parse(&args.axis1) {
        Ok(a) => a,
        Err(msg) => return usage_error(msg),
    };
    let axis2 = match args.axis2.as_deref().map(sweep::Axis::parse).transpose() {
        Ok(a) => a,
        Err(msg) => return usage_error(msg),
    };
    if !(args.tol > 0.0) {
        return usage_error("--tol must be positive");
    }
    let cfg = match quad_config(None) {
        Ok(c) => c,
        Err(msg) => return usage_error(msg),
    };
    let spec = sweep::SweepSpec {
        function: args.point.function,
        fixed: args.point.params(),
        method: args.point.method,
        axis1,
        axis2,
        tol: args.tol,
        oracle_tol: ORACLE_TOL,
    };
    let rows = match sweep::run(&spec, &cfg) {
        Ok(r) => r,
        Err(msg) => return usage_error(msg),
    };
    if let Err(msg) = write_out(args.out.as_ref(), &sweep::csv(&rows)) {
        return usage_error(msg);
    }
    let summary = sweep::summary(&rows);
    // keep the CSV on standard output clean
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let cfg = match quad_config(None) {
        Ok(c) => c,
        Err(msg) => return usage_error(msg),
    };
    let report = verify::run(args.suite, &cfg);
    for line in &report.lines {
        println!("{line}");
    }
    let total = report.lines.len();
    println!("verify: {} of {total} checks passed", total - report.failed);
    if report.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_USAGE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
    }
}
