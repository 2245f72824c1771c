//! Command-line driver for rostfix: corpus loading, command dispatch and
//! report rendering.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rostfix::{Execution, GroebnerConfig, MonomialOrder};

use crate::commands::Options;
use crate::corpus::{load_dir, load_entry, LoadedEntry};
use crate::error::{CliError, ErrorKind, EXIT_BUDGET, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};
use crate::report::{EntryReport, ErrorReport, Output, Summary};

#[derive(Debug, Parser)]
#[command(
    name = "rostfix",
    version,
    about = "Fixed loci and mod-p fixed-point congruences of diagonal group actions"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of S-pair reductions per Gröbner basis.
    #[arg(long, global = true, default_value_t = rostfix::groebner::DEFAULT_BUDGET)]
    pub budget: usize,
    /// Largest residue-field degree scanned for closed points (default: the fixed scheme degree).
    #[arg(long, global = true)]
    pub max_ext_degree: Option<usize>,
    /// Maximum number of candidate points examined per chart.
    #[arg(long, global = true, default_value_t = rostfix::fixed::DEFAULT_SCAN_BUDGET)]
    pub scan_budget: u128,
    /// Monomial order used for printed Gröbner bases.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Run on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Debug, Args)]
pub struct EntryArgs {
    /// Corpus entry (JSON file).
    pub entry: PathBuf,
    /// Index of the order-p quotient of the group to use.
    #[arg(long)]
    pub subgroup: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fixed ideals per chart, finiteness and closed points.
    FixedLocus(EntryArgs),
    /// Closed fixed points with residue degrees and multiplicities.
    Points(EntryArgs),
    /// Tangent weights, local multiplicities and the congruence sum.
    Multiplicity(EntryArgs),
    /// Run all checks and compare with the entry's expectations.
    Verify {
        /// Corpus entry (JSON file).
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        entry: Option<PathBuf>,
        /// Verify every entry of a corpus directory.
        #[arg(long, value_name = "DIR")]
        all: Option<PathBuf>,
        /// Index of the order-p quotient of the group to use.
        #[arg(long)]
        subgroup: Option<usize>,
    },
    /// Presentation of the invariant ring of an affine model.
    Quotient(EntryArgs),
    /// Normal-cone presentations and cone-side multiplicities.
    Cone(EntryArgs),
    /// Dimension and graded Hilbert function of a finite algebra without fixed points.
    DegNofix(EntryArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::FixedLocus(_) => "fixed-locus",
            Command::Points(_) => "points",
            Command::Multiplicity(_) => "multiplicity",
            Command::Verify { .. } => "verify",
            Command::Quotient(_) => "quotient",
            Command::Cone(_) => "cone",
            Command::DegNofix(_) => "deg-nofix",
        }
    }
}

impl GlobalArgs {
    fn options(&self, subgroup: Option<usize>) -> Options {
        Options {
            max_ext_degree: self.max_ext_degree,
            scan_budget: self.scan_budget,
            order: match self.order {
                OrderArg::Grevlex => MonomialOrder::GrevLex,
                OrderArg::Lex => MonomialOrder::Lex,
            },
            exec: if self.sequential {
                Execution::Sequential
            } else {
                Execution::default()
            },
            subgroup,
        }
    }

    fn config(&self) -> GroebnerConfig {
        GroebnerConfig { budget: self.budget }
    }
}

/// Parses arguments, runs the command and writes the report; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((output, code)) => {
            let text = if cli.global.json {
                serde_json::to_string_pretty(&output).expect("report serializes") + "\n"
            } else {
                render(&output)
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn render(output: &Output) -> String {
    let mut text: String = output.entries.iter().map(commands::render_entry).collect();
    if let Some(s) = &output.summary {
        text.push_str(&format!(
            "{} entries: {} ok, {} with mismatches, {} with violations, {} errors\n",
            s.entries, s.ok, s.mismatches, s.violations, s.errors
        ));
    }
    text
}

type Runner = fn(&LoadedEntry, &Options, &mut EntryReport) -> Result<(), CliError>;

fn runner(cmd: &Command) -> Runner {
    match cmd {
        Command::FixedLocus(_) => |e, o, r| {
            let _: () = r.fixed_locus = Some(commands::fixed_locus(e, o)?);
            Ok(())
        },
        Command::Points(_) => |e, o, r| {
            let _: () = r.points = Some(commands::points(e, o)?);
            Ok(())
        },
        Command::Multiplicity(_) => |e, o, r| {
            let _: () = r.multiplicity = Some(commands::multiplicity(e, o)?);
            Ok(())
        },
        Command::Verify { .. } => |e, o, r| {
            let _: () = r.verify = Some(commands::verify(e, o)?);
            Ok(())
        },
        Command::Quotient(_) => |e, o, r| {
            let _: () = r.quotient = Some(commands::quotient(e, o)?);
            Ok(())
        },
        Command::Cone(_) => |e, o, r| {
            let _: () = r.cone = Some(commands::cone(e, o)?);
            Ok(())
        },
        Command::DegNofix(_) => |e, o, r| {
            let _: () = r.deg_nofix = Some(commands::deg_nofix(e, o)?);
            Ok(())
        },
    }
}

fn execute(cli: &Cli) -> Result<(Output, i32), CliError> {
    let g = &cli.global;
    let config = g.config();
    let run = runner(&cli.command);
    let command = cli.command.name().to_string();
    match &cli.command {
        Command::Verify { entry, all, subgroup } => {
            let entries = match (entry, all) {
                (_, Some(dir)) => load_dir(dir, config)?,
                (Some(path), None) => vec![load_entry(path, config)?],
                (None, None) => unreachable!("clap requires one of them"),
            };
            let opts = g.options(*subgroup);
            let reports = opts.exec.map(&entries, |e| {
                let mut r = EntryReport::header(e);
                if let Err(err) = run(e, &opts, &mut r) {
                    r.error = Some(ErrorReport::from(&err));
                }
                r
            });
            let mut summary = Summary {
                entries: reports.len(),
                ..Default::default()
            };
            let mut code = EXIT_OK;
            for r in &reports {
                match (&r.error, &r.verify) {
                    (Some(err), _) => {
                        summary.errors += 1;
                        let c = match err.kind {
                            ErrorKind::Budget => EXIT_BUDGET,
                            ErrorKind::Input => EXIT_INPUT,
                            ErrorKind::Internal => EXIT_MISMATCH,
                        };
                        code = worst(code, c);
                    }
                    (None, Some(v)) => {
                        if v.ok {
                            summary.ok += 1;
                        }
                        if !v.mismatches.is_empty() {
                            summary.mismatches += 1;
                        }
                        if !v.violations.is_empty() {
                            summary.violations += 1;
                        }
                        if !v.ok {
                            code = worst(code, EXIT_MISMATCH);
                        }
                    }
                    (None, None) => {}
                }
            }
            Ok((
                Output {
                    command,
                    entries: reports,
                    summary: Some(summary),
                },
                code,
            ))
        }
        Command::FixedLocus(a)
        | Command::Points(a)
        | Command::Multiplicity(a)
        | Command::Quotient(a)
        | Command::Cone(a)
        | Command::DegNofix(a) => {
            let e = load_entry(&a.entry, config)?;
            let opts = g.options(a.subgroup);
            let mut r = EntryReport::header(&e);
            run(&e, &opts, &mut r)?;
            Ok((
                Output {
                    command,
                    entries: vec![r],
                    summary: None,
                },
                EXIT_OK,
            ))
        }
    }
}

/// Mismatches dominate budget failures, which dominate input errors.
fn worst(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        EXIT_MISMATCH => 3,
        EXIT_BUDGET => 2,
        EXIT_INPUT => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}
