//! Command-line front end: file parsing, subcommands and exit codes.
//!
//! Exit codes: 0 success, 1 invalid system, 2 budget exhausted or no
//! equivalence found, 3 unreadable or malformed input, 4 internal audit
//! failure.

pub mod output;
pub mod parse;
pub mod repl;

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use blf_core::{
    classify, construct, equiv_search, normalize, replay_trace, CycleSystem, Error, Family,
    DEFAULT_BUDGET,
};
use clap::{Parser, Subcommand, ValueEnum};

use output::{
    CheckDoc, ClassificationDoc, Data, EquivDoc, MonodromyDoc, NormalizeDoc, PartialDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_SEARCH: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "blf", version, about = "Cycle systems of boundary Lefschetz fibrations over the disc")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    S1xs3,
    S2xs2,
    Cp2,
}

impl From<Target> for Family {
    fn from(t: Target) -> Self {
        match t {
            Target::S1xs3 => Family::S1xS3,
            Target::S2xs2 => Family::SumS2xS2,
            Target::Cp2 => Family::SumCP2,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file describes a cycle system and print its boundary data
    Check { file: PathBuf },
    /// Print the monodromy matrix and boundary data
    Monodromy { file: PathBuf },
    /// Bring a system to normal form and print the move log
    Normalize {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Identify the total space
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Replay the trace and render it on standard error
        #[arg(long)]
        trace: bool,
    },
    /// Print a system realizing a family member
    Construct {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Search for Hurwitz moves relating two systems
    Equiv {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Apply moves interactively
    Repl { file: Option<PathBuf> },
}

/// Exit code for an engine error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonPrimitive { .. }
        | Error::NotUnimodular(..)
        | Error::TrivialBoundary
        | Error::NotTwistPower { .. }
        | Error::InvalidSystem(_) => EXIT_INVALID,
        Error::BudgetExceeded { .. } | Error::NotFound { .. } => EXIT_SEARCH,
        Error::UnsupportedTarget(_) => EXIT_INPUT,
        Error::IndexOutOfRange { .. }
        | Error::MissingReduciblePair { .. }
        | Error::NotBlowdownable { .. }
        | Error::PreconditionViolated(_)
        | Error::NoThirdCycle { .. }
        | Error::UnexpectedSummand(_)
        | Error::InternalAuditFailure { .. } => EXIT_INTERNAL,
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Failure that has already been reported.
struct Exit(i32);

impl Io<'_> {
    fn json<T: serde::Serialize>(&mut self, doc: &T) -> Result<(), Exit> {
        let text = serde_json::to_string_pretty(doc).map_err(|e| self.fail(EXIT_INTERNAL, e))?;
        writeln!(self.out, "{text}").map_err(|_| Exit(EXIT_INTERNAL))
    }

    fn fail(&mut self, code: i32, msg: impl std::fmt::Display) -> Exit {
        let _ = writeln!(self.err, "error: {msg}");
        Exit(code)
    }

    fn engine(&mut self, e: Error) -> Exit {
        self.fail(exit_code(&e), e)
    }

    fn load(&mut self, path: &Path) -> Result<CycleSystem, Exit> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| self.fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
        parse::parse(&text).map_err(|e| {
            let code = if e.is_syntax() { EXIT_INPUT } else { EXIT_INVALID };
            self.fail(code, format!("{}:{e}", path.display()))
        })
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<(), Exit> {
    match cmd {
        Command::Check { file } => {
            let s = io.load(&file)?;
            let data = s.boundary_data();
            io.json(&CheckDoc {
                system: s.to_string(),
                valid: data.is_ok(),
                boundary_data: data.as_ref().ok().map(Data::from),
                reason: data.as_ref().err().map(ToString::to_string),
                euler_characteristic: s.euler_characteristic(),
            })?;
            data.map(|_| ()).map_err(|e| io.engine(e))
        }
        Command::Monodromy { file } => {
            let s = io.load(&file)?;
            let data = s.boundary_data();
            io.json(&MonodromyDoc {
                system: s.to_string(),
                monodromy: output::matrix(&s.monodromy()),
                valid: data.is_ok(),
                boundary_data: data.as_ref().ok().map(Data::from),
            })?;
            data.map(|_| ()).map_err(|e| io.engine(e))
        }
        Command::Normalize { file, budget } => {
            let s = io.load(&file)?;
            match normalize(&s, budget) {
                Ok(n) => io.json(&NormalizeDoc::new(&s, &n.form, &n.system, &n.moves)),
                Err(Error::BudgetExceeded { budget, partial }) => {
                    io.json(&PartialDoc::new(budget, &partial))?;
                    Err(io.engine(Error::BudgetExceeded { budget, partial }))
                }
                Err(e) => Err(io.engine(e)),
            }
        }
        Command::Classify {
            file,
            budget,
            trace,
        } => {
            let s = io.load(&file)?;
            let c = classify(&s, budget).map_err(|e| io.engine(e))?;
            if trace {
                let _ = writeln!(io.err, "start: {s}");
                for (i, step) in c.trace.iter().enumerate() {
                    let data = step
                        .data
                        .as_ref()
                        .map_or_else(|| "-".to_string(), ToString::to_string);
                    let summand = step.summand().map_or(String::new(), |x| format!(" [+{x}]"));
                    let _ = writeln!(
                        io.err,
                        "{:>3}. {}{summand}\n     -> {} {data}",
                        i + 1,
                        step.action,
                        step.system
                    );
                }
                replay_trace(&s, &c.trace).map_err(|e| io.engine(e))?;
                let _ = writeln!(io.err, "trace replayed: ok");
            }
            io.json(&ClassificationDoc::from(&c))
        }
        Command::Construct { target, m, n } => {
            let s = construct(target.into(), m, n).map_err(|e| io.engine(e))?;
            writeln!(io.out, "{}", parse::serialize(&s)).map_err(|_| Exit(EXIT_INTERNAL))
        }
        Command::Equiv {
            file1,
            file2,
            depth,
        } => {
            let s1 = io.load(&file1)?;
            let s2 = io.load(&file2)?;
            match equiv_search(&s1, &s2, depth) {
                Ok(path) => io.json(&EquivDoc::found(depth, &path)),
                Err(e @ Error::NotFound { .. }) => {
                    io.json(&EquivDoc::not_found(depth))?;
                    Err(io.engine(e))
                }
                Err(e) => Err(io.engine(e)),
            }
        }
        Command::Repl { file } => {
            let start = match file {
                Some(f) => io.load(&f)?,
                None => CycleSystem::from_ks::<i64>([]),
            };
            repl::run(start, io.stdin, io.out).map_err(|e| io.fail(EXIT_INTERNAL, e))
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Exit(code)) => code,
    }
}
