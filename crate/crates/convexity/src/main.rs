//! Thin command-line front end.  All real work lives in the library's
//! `report` module; this file only parses arguments, loads the input, prints
//! the JSON report, writes requested artifacts, and picks the exit code:
//! 0 all checks passed, 1 a check failed, 2 bad input, 3 a resource cap hit.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use convexity::io::geometry_from_path;
use convexity::report::{self, RunConfig, RunOutcome};
use convexity::{ConvexGeometry, Error};

#[derive(Parser)]
#[command(
    name = "convexity",
    version,
    about = "Exact enumeration and identity checking for convex geometries"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Directory to write export artifacts into
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Largest multichain length m in count tables
    #[arg(long, default_value_t = 3, value_name = "INT")]
    m_max: usize,
    /// Comma-separated artifact formats to write: dot, off, json
    #[arg(long, value_delimiter = ',', value_name = "FMT")]
    emit: Vec<String>,
    /// Cap on facets or candidates any single computation may enumerate
    #[arg(long, default_value_t = 1_000_000, value_name = "INT")]
    max_facets: usize,
}

#[derive(Args)]
struct CommonArgs {
    /// Input geometry as JSON
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input geometry as JSON; without it the built-in corpus suite runs
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed sets, covers, and distributivity of the lattice
    Lattice(CommonArgs),
    /// Stepwise subdivision from the simplex to the order complex
    Complex(CommonArgs),
    /// The reflected sphere and its signed face poset
    Sphere(CommonArgs),
    /// The flag-function identity
    Qsym(CommonArgs),
    /// Enriched extremal counts and the polynomial identities
    Enriched(CommonArgs),
    /// Every check on one input, or the full acceptance suite without one
    Verify(VerifyArgs),
}

fn config_of(opts: &Opts) -> convexity::Result<RunConfig> {
    if opts.m_max == 0 {
        return Err(Error::Parse("--m-max must be positive".into()));
    }
    let mut cfg = RunConfig {
        m_max: opts.m_max,
        max_facets: opts.max_facets,
        ..RunConfig::default()
    };
    for format in &opts.emit {
        match format.as_str() {
            "dot" => cfg.emit_dot = true,
            "off" => cfg.emit_off = true,
            "json" => cfg.emit_json = true,
            other => {
                return Err(Error::Parse(format!(
                    "unknown --emit format {other:?}: expected dot, off, or json"
                )))
            }
        }
    }
    if !opts.emit.is_empty() && opts.out.is_none() {
        return Err(Error::Parse(
            "--emit needs --out to know where to write".into(),
        ));
    }
    Ok(cfg)
}

fn finish(outcome: RunOutcome, opts: &Opts) -> convexity::Result<bool> {
    use std::io::Write;
    let text = serde_json::to_string_pretty(&outcome.report).expect("report is serializable");
    // a closed pipe (e.g. piping into `head`) is not an error worth a panic
    if let Err(e) = writeln!(std::io::stdout(), "{text}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Ok(outcome.passed);
        }
        return Err(e.into());
    }
    if let Some(dir) = &opts.out {
        std::fs::create_dir_all(dir)?;
        for (name, contents) in &outcome.artifacts {
            std::fs::write(dir.join(name), contents)?;
        }
    }
    Ok(outcome.passed)
}

fn try_run(cmd: &Cmd) -> convexity::Result<bool> {
    match cmd {
        Cmd::Verify(args) => {
            let cfg = config_of(&args.opts)?;
            let g: Option<ConvexGeometry> = match &args.input {
                Some(path) => Some(geometry_from_path(path)?),
                None => None,
            };
            let outcome = report::cmd_verify(g.as_ref(), &cfg)?;
            finish(outcome, &args.opts)
        }
        Cmd::Lattice(args)
        | Cmd::Complex(args)
        | Cmd::Sphere(args)
        | Cmd::Qsym(args)
        | Cmd::Enriched(args) => {
            let cfg = config_of(&args.opts)?;
            let g = geometry_from_path(&args.input)?;
            let outcome = match cmd {
                Cmd::Lattice(_) => report::cmd_lattice(&g, &cfg)?,
                Cmd::Complex(_) => report::cmd_complex(&g, &cfg)?,
                Cmd::Sphere(_) => report::cmd_sphere(&g, &cfg)?,
                Cmd::Qsym(_) => report::cmd_qsym(&g, &cfg)?,
                Cmd::Enriched(_) => report::cmd_enriched(&g, &cfg)?,
                Cmd::Verify(_) => unreachable!("handled above"),
            };
            finish(outcome, &args.opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match try_run(&cli.cmd) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceLimit(_) | Error::GroundSetTooLarge(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
