//! `h2m`: check permutation groups for Hall 2-maximal subgroups and verify the
//! structure that follows.

mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use h2m_core::constructors::{default_corpus, Builtin, GroupSpec};
use h2m_core::exec::with_jobs;
use h2m_core::verifier::{scan_corpus, verify_psl_witnesses, verify_theorem, Applicability};
use h2m_core::{enumerate_subgroups, Caps, Exec, GroupError};

#[derive(Parser)]
#[command(
    name = "h2m",
    version,
    about = "Hall 2-maximal subgroup checker for permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Largest group order that will be enumerated
    #[arg(long, global = true, env = "H2M_MAX_ORDER", default_value_t = h2m_core::permcore::DEFAULT_MAX_ORDER,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    max_order: usize,

    /// Largest permutation degree accepted
    #[arg(long, global = true, default_value_t = h2m_core::permcore::DEFAULT_MAX_DEGREE,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..=u64::from(u16::MAX)))]
    max_degree: usize,

    /// Worker threads
    #[arg(long, global = true, default_value_t = 1,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check the hypothesis and the applicable conclusions for one group
    Check(Input),
    /// Check every group of the built-in corpus
    Scan {
        /// Also scan the 12615-element showcase group
        #[arg(long)]
        include_large: bool,
        /// Also write the JSON scan report to this file
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Print the subgroup lattice of one group
    Lattice {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build and fully verify the showcase group of order 12615
    Example,
    /// Verify the non-Hall 2-maximal witnesses in PSL(2,7), PSL(2,11), PSL(5,2)
    PslWitnesses,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Built-in group, e.g. `symmetric:4`, `affine:5:3`, `s3*c5`
    #[arg(long, value_name = "NAME[:PARAMS]")]
    builtin: Option<String>,
    /// Group file with a `degree` line and `gen` lines in cycle notation
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl Input {
    fn spec(&self) -> Result<GroupSpec, GroupError> {
        match (&self.builtin, &self.file) {
            (Some(name), _) => Ok(GroupSpec::builtin(name.parse::<Builtin>()?)),
            (None, Some(path)) => Ok(GroupSpec::file(path)),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Violation(String),
    Error(GroupError),
    Io(std::io::Error),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn exit_code(e: &GroupError) -> u8 {
    match e {
        e if e.is_cap() => 3,
        GroupError::Inconsistent(_) => 1,
        _ => 2,
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn exec_for(jobs: usize) -> Exec {
    if jobs > 1 {
        Exec::Parallel
    } else {
        Exec::Sequential
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let caps = Caps {
        max_order: cli.max_order,
        max_degree: cli.max_degree,
    };
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Check(input) => {
            let spec = input.spec()?;
            let group = spec.build(caps)?;
            let mut report = with_jobs(cli.jobs, || {
                verify_theorem(&spec.name, &group, caps, exec_for(cli.jobs))
            })?;
            report.acting_matrix = spec.matrix().map(|m| m.entries);
            let text = if cli.json {
                json(&report)
            } else {
                render::report(&report)
            };
            emit(out, &text)?;
            match report.violations() {
                0 => Ok(()),
                n => Err(Failure::Violation(format!(
                    "{}: {n} conclusion(s) failed",
                    spec.name
                ))),
            }
        }
        Command::Scan {
            include_large,
            report,
        } => {
            let result = scan_corpus(&default_corpus(*include_large), caps, cli.jobs)?;
            if let Some(path) = report {
                std::fs::write(path, json(&result))?;
            }
            let text = if cli.json {
                json(&result)
            } else {
                render::scan(&result)
            };
            emit(out, &text)?;
            match result.summary.violations {
                0 => Ok(()),
                n => Err(Failure::Violation(format!(
                    "{n} conclusion violation(s) in the corpus"
                ))),
            }
        }
        Command::Lattice { input, format } => {
            let spec = input.spec()?;
            let group = spec.build(caps)?;
            let lattice = with_jobs(cli.jobs, || {
                enumerate_subgroups(&group, caps, exec_for(cli.jobs))
            })?;
            let text = if cli.json || *format == Format::Json {
                json(&render::LatticeDump::new(&spec.name, &lattice))
            } else {
                render::lattice(&spec.name, &lattice)
            };
            emit(out, &text)?;
            Ok(())
        }
        Command::Example => {
            let spec = GroupSpec::builtin(Builtin::Example);
            let group = spec.build(caps)?;
            let mut report = with_jobs(cli.jobs, || {
                verify_theorem(&spec.name, &group, caps, exec_for(cli.jobs))
            })?;
            report.acting_matrix = spec.matrix().map(|m| m.entries);
            let text = if cli.json {
                json(&report)
            } else {
                render::report(&report)
            };
            emit(out, &text)?;
            if report.applicability != Applicability::MainBranch {
                return Err(Failure::Violation(format!(
                    "showcase group landed in {}",
                    report.applicability.as_str()
                )));
            }
            match report.violations() {
                0 => Ok(()),
                n => Err(Failure::Violation(format!("{n} conclusion(s) failed"))),
            }
        }
        Command::PslWitnesses => {
            let report = with_jobs(cli.jobs, || verify_psl_witnesses(exec_for(cli.jobs)))?;
            let text = if cli.json {
                json(&report)
            } else {
                render::witnesses(&report)
            };
            emit(out, &text)?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(Failure::Violation("a witness check failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("h2m: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("h2m: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) => {
            eprintln!("h2m: {e}");
            ExitCode::from(2)
        }
    }
}
