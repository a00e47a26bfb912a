use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use apery_core::registry::{self, Format, Kind, Params, RunConfig, VerificationReport};
use apery_core::Error;
use clap::{Args, Parser, Subcommand};

/// Verify central-binomial and hypergeometric series identities to a requested tolerance.
#[derive(Parser, Debug)]
#[command(name = "apery", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the catalog with parameters and default tolerances.
    List,
    /// Check one identity at one parameter point.
    Verify(VerifyArgs),
    /// Check every selected identity over its default grid.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
struct Numeric {
    /// Absolute tolerance; defaults to each case's own.
    #[arg(long)]
    tol: Option<f64>,
    /// Working precision in bits.
    #[arg(long = "prec-bits")]
    prec_bits: Option<u32>,
    /// Term budget for accelerated sums.
    #[arg(long = "max-terms")]
    max_terms: Option<usize>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    id: String,
    /// Parameter assignment `name=value`; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[command(flatten)]
    numeric: Numeric,
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Comma-separated ids; all by default.
    #[arg(long)]
    ids: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    format: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat `key=value` file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override `name=value` for every case with that parameter; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[command(flatten)]
    numeric: Numeric,
}

fn apply_numeric(cfg: &mut RunConfig, n: &Numeric) {
    if let Some(t) = n.tol {
        cfg.settings.tol = Some(t);
    }
    if let Some(b) = n.prec_bits {
        cfg.settings.precision_bits = b;
    }
    if let Some(m) = n.max_terms {
        cfg.settings.max_terms = m;
    }
}

fn exit_for(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn list() -> ExitCode {
    let mut out = String::new();
    for case in registry::list_cases() {
        let tol = match case.kind {
            Kind::Exact => "exact".to_string(),
            Kind::Numeric => format!("tol {:e}", case.default_tol),
        };
        let _ = writeln!(out, "{}  {}  [{}]", case.id, case.description, tol);
        let _ = writeln!(out, "     {}", case.statement);
        for p in case.params {
            let doc = if p.doc.is_empty() { String::new() } else { format!("  {}", p.doc) };
            let _ = writeln!(out, "     --param {}=<{}>{}", p.name, p.range_text(), doc);
        }
        let grid = case.default_grid().len();
        let _ = writeln!(out, "     default grid: {grid} point{}", if grid == 1 { "" } else { "s" });
    }
    // a closed pipe (`apery list | head`) is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::SUCCESS
}

fn verify(args: &VerifyArgs) -> apery_core::Result<ExitCode> {
    let format: Format = args.format.parse()?;
    let mut params = Params::new();
    for a in &args.params {
        let (k, v) = Params::parse_assignment(a)?;
        params.set(&k, v);
    }
    let mut cfg = RunConfig::default();
    apply_numeric(&mut cfg, &args.numeric);
    cfg.validate()?;
    let report = registry::verify(&args.id, &params, &cfg.settings)?;
    let reports = [report];
    registry::emit(&reports, format, None)?;
    Ok(exit_for(&reports))
}

fn suite(args: &SuiteArgs) -> apery_core::Result<ExitCode> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &args.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read config {}: {e}", path.display())))?;
        cfg.apply_text(&text)?;
    }
    if let Some(ids) = &args.ids {
        cfg.set("ids", ids)?;
    }
    if let Some(j) = args.jobs {
        cfg.jobs = j;
    }
    if let Some(f) = &args.format {
        cfg.format = f.parse()?;
    }
    if let Some(o) = &args.out {
        cfg.out = Some(o.clone());
    }
    for a in &args.params {
        let (k, v) = Params::parse_assignment(a)?;
        cfg.overrides.insert(k, v);
    }
    apply_numeric(&mut cfg, &args.numeric);
    let reports = registry::run_suite(&cfg)?;
    registry::emit(&reports, cfg.format, cfg.out.as_deref())?;
    Ok(exit_for(&reports))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::List => Ok(list()),
        Command::Verify(a) => verify(a),
        Command::Suite(a) => suite(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("apery: {e}");
        match e {
            Error::Usage(_) | Error::Domain(_) | Error::Io(_) => ExitCode::from(2),
            Error::ToleranceNotReached(_) => ExitCode::from(1),
        }
    })
}
