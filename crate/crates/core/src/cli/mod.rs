//! The `froblat` command line: spec files, builtins, and the verify, lattice
//! and gen pipelines.

pub mod builtins;
mod pipeline;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use pipeline::{lattice, verify, AngleLine, ElementLine, LatticeRun, LatticeSummary, RunReport, Section, SubspaceLine};
pub use spec::{Presentation, SpecFile};

use crate::lattice::with_pool;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("unknown builtin {name:?}; available: {}", .available.join(", "))]
    UnknownBuiltin { name: String, available: Vec<String> },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("spec file: {0}")]
    Schema(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Math(#[from] crate::Error),
}

impl CliError {
    /// 2 for anything wrong with the input, 1 for a mathematical finding.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(crate::Error::Shape(_) | crate::Error::Invalid(_) | crate::Error::Singular) => 2,
            CliError::Math(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "froblat", version, about = "Exact Frobenius algebra objects and their biprojection lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a presentation and its candidate subobjects.
    Verify(VerifyArgs),
    /// Build the biprojection lattice and its analytics.
    Lattice(LatticeArgs),
    /// Write a builtin as a spec file (stdout when OUT is omitted).
    Gen { name: String, out: Option<PathBuf> },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Use a shipped example instead of a spec file.
    #[arg(long, value_name = "NAME", conflicts_with = "spec_path")]
    pub builtin: Option<String>,
    #[arg(value_name = "SPEC_PATH")]
    pub spec_path: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: Source,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the Hasse diagram in Graphviz format.
    #[arg(long, value_name = "PATH")]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub totient: bool,
    #[arg(long)]
    pub sigma: bool,
    /// Run the angle-separation witness and print its CSV table.
    #[arg(long)]
    pub angles: bool,
}

impl Source {
    pub fn load(&self) -> Result<Presentation, CliError> {
        match (&self.builtin, &self.spec_path) {
            (Some(name), None) => builtins::builtin(name),
            (None, Some(path)) => load_spec(path),
            _ => Err(CliError::Usage("give exactly one of --builtin NAME or SPEC_PATH".into())),
        }
    }
}

pub fn load_spec(path: &Path) -> Result<Presentation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    SpecFile::parse(&text)?.load()
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.into(), source })
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match with_pool(|| dispatch(cli.command)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("froblat: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    let mut out = std::io::stdout().lock();
    let io = |source| CliError::Io { path: "<stdout>".into(), source };
    match command {
        Command::Gen { name, out: path } => {
            let text = SpecFile::from_presentation(&builtins::builtin(&name)?).to_json();
            match path {
                Some(path) => write_file(&path, &text)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let p = args.source.load()?;
            let report = verify(&p);
            write!(out, "{report}").map_err(io)?;
            finish(&report, args.json.as_deref())
        }
        Command::Lattice(args) => {
            let p = args.source.load()?;
            let run = lattice(&p, args.angles)?;
            let report = &run.report;
            write!(out, "{report}").map_err(io)?;
            if let Some(s) = &report.lattice {
                if args.totient {
                    writeln!(out, "totient {}", s.analytics.totient).map_err(io)?;
                }
                if args.sigma {
                    writeln!(out, "sigma {}", s.analytics.sigma).map_err(io)?;
                }
            }
            if let Some(csv) = &run.angles_csv {
                write!(out, "{csv}").map_err(io)?;
            }
            if let (Some(path), Some(dot)) = (&args.dot, &run.dot) {
                write_file(path, dot)?;
            }
            finish(report, args.json.as_deref())
        }
    }
}

fn finish(report: &RunReport, json: Option<&Path>) -> Result<i32, CliError> {
    if let Some(path) = json {
        write_file(path, &report.to_json())?;
    }
    Ok(if report.passed { 0 } else { 1 })
}
