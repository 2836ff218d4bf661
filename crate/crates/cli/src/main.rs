//! `homcat`: reduce trees, check and construct finite Hom-structures, and
//! emit reports.
//!
//! Exit codes: 0 pass, 1 mathematical violation, 2 input error, 3 internal
//! invariant, 4 budget exceeded.

/// `writeln!` that ignores a closed output.
macro_rules! out {
    ($w:expr, $($t:tt)*) => {{
        let _ = writeln!($w, $($t)*);
    }};
}

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homcat::Error;

#[derive(Parser)]
#[command(name = "homcat", version, about = "Finite Hom-groups, Hom-rings and their modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a weighted tree to normal form.
    Reduce {
        tree: String,
        /// Only fire the eight drawn elementary reductions.
        #[arg(long)]
        strict: bool,
        /// Print one line per step.
        #[arg(long)]
        trace: bool,
        /// leftmost, rightmost or random:SEED.
        #[arg(long, default_value = "leftmost")]
        strategy: String,
    },
    /// Verify every axiom of a structure file.
    Check {
        kind: Kind,
        file: PathBuf,
        /// Override the declared ring type.
        #[arg(long = "type", value_parser = ["1", "2"])]
        ring_type: Option<String>,
        /// Module side to check; defaults to every side present.
        #[arg(long)]
        side: Option<SideArg>,
        /// Print only the JSON report.
        #[arg(long)]
        json: bool,
    },
    /// Print a catalog structure as JSON.
    Construct { name: String },
    /// Normal-subgroup lattice of a group file.
    Lattice { file: PathBuf },
    /// Tensor product of two group files.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        candidate: CandidateFlags,
        /// Extra targets for the universal property.
        #[arg(long = "target")]
        targets: Vec<PathBuf>,
    },
    /// JSON report on certified inputs.
    Report {
        target: ReportTarget,
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        candidate: CandidateFlags,
        /// Generator for `decompose`.
        #[arg(long)]
        generator: Option<usize>,
    },
}

#[derive(clap::Args, Clone, Copy)]
#[group(multiple = false)]
struct CandidateFlags {
    /// Use the relation-reduction construction (default).
    #[arg(long)]
    oracle: bool,
    /// Use the construction written in the source.
    #[arg(long)]
    paper: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Group,
    Ring,
    Module,
    Bilinear,
    Poly,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SideArg {
    Left,
    Right,
    Bi,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReportTarget {
    Lattice,
    Abelianize,
    Tensor,
    Simplicity,
    Decompose,
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Pass,
    Violation,
    Budget,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Rejected { .. } => 1,
        Error::Structural(_) | Error::Precondition(_) | Error::Parse { .. } => 2,
        Error::Invariant(_) => 3,
        Error::Budget { .. } => 4,
    }
}

/// Run one command line, writing the report to `w`; returns the exit code.
pub fn run<I, T>(args: I, w: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let budget = homcat::Budget::from_env();
    let result = match cli.command {
        Command::Reduce {
            tree,
            strict,
            trace,
            strategy,
        } => commands::reduce(w, &tree, strict, trace, &strategy),
        Command::Check {
            kind,
            file,
            ring_type,
            side,
            json,
        } => commands::check(w, kind, &file, ring_type.as_deref(), side, json),
        Command::Construct { name } => commands::construct(w, &name, &budget),
        Command::Lattice { file } => commands::report(w, ReportTarget::Lattice, &[file], false, None, &budget),
        Command::Tensor {
            a,
            b,
            candidate,
            targets,
        } => commands::tensor(w, &a, &b, candidate.paper, &targets, &budget),
        Command::Report {
            target,
            inputs,
            candidate,
            generator,
        } => commands::report(w, target, &inputs, candidate.paper, generator, &budget),
    };
    match result {
        Ok(Outcome::Pass) => 0,
        Ok(Outcome::Violation) => 1,
        Ok(Outcome::Budget) => 4,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    ExitCode::from(run(std::env::args_os(), &mut stdout.lock()))
}
