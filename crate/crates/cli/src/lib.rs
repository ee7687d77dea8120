//! The `ics` command-line tool: counts, enumerates and maps interval-closed
//! sets, prints coefficient tables and runs the built-in verification suite.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 scale exceeded,
//! 4 verification failure.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod error;
mod input;
pub mod verify;

pub use error::CliError;
pub use verify::{CheckRecord, Source, VerifyReport};

#[derive(Debug, Parser)]
#[command(name = "ics", version, about = "Interval-closed sets of posets: counts, bijections and generating functions")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Stop after this many items when enumerating.
    #[arg(long, global = true)]
    pub limit: Option<usize>,
    /// Largest truncation order any series computation may use.
    #[arg(long, global = true, default_value_t = 40)]
    pub seed_order: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the interval-closed sets of a poset.
    Count {
        /// Poset spec such as `rect:3x4`, `trunc:4x5:1`, `rootA:5`, `cube:2x2x3`.
        poset: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Largest poset the brute-force engine accepts.
        #[arg(long, default_value_t = 30)]
        max_elements: usize,
    },
    /// List interval-closed sets in ascending encoding order.
    Enumerate {
        poset: String,
        #[arg(long, value_enum, default_value_t = EnumerateAs::Set)]
        to: EnumerateAs,
        #[arg(long, default_value_t = 30)]
        max_elements: usize,
    },
    /// Apply a bijection to one set, or map a path back with `--inverse`.
    Map {
        poset: String,
        /// A JSON array of elements such as `[[1,2],[2,2]]`, a single element, or `""`.
        /// With `--inverse`, the encoded path instead.
        input: String,
        #[arg(long, value_enum)]
        to: MapTarget,
        #[arg(long)]
        inverse: bool,
    },
    /// Print a coefficient table.
    Series {
        #[arg(value_enum)]
        which: SeriesKind,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Statistics of one interval-closed set and of its lattice paths.
    Stats { poset: String, input: String },
    /// Reproduce the reference values and cross-check every engine.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// The first available of series, formula and oracle.
    Auto,
    Oracle,
    Formula,
    Series,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumerateAs {
    Set,
    Motzkin,
    Walk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapTarget {
    Motzkin,
    Walk,
    Pair,
    Classify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Rectangle,
    Bminuscule,
    #[value(name = "typeA")]
    TypeA,
    Truncated,
    Broot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let series = ics_core::series::SeriesConfig::with_order(cli.seed_order);
    match &cli.command {
        Command::Count { poset, method, max_elements } => {
            commands::count(out, cli.json, poset, *method, *max_elements, &series)
        }
        Command::Enumerate { poset, to, max_elements } => {
            commands::enumerate(out, cli.json, poset, *to, *max_elements, cli.limit)
        }
        Command::Map { poset, input, to, inverse } => commands::map(out, cli.json, poset, input, *to, *inverse),
        Command::Series { which, order, format } => {
            let format = if cli.json { Format::Json } else { *format };
            commands::series(out, *which, *order, format, &series)
        }
        Command::Stats { poset, input } => commands::stats(out, cli.json, poset, input),
        Command::Verify { level } => {
            let report = verify::run_suite(*level, &series);
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                write!(out, "{report}")?;
            }
            if report.pass {
                Ok(())
            } else {
                let failed = report.checks.iter().filter(|c| !c.pass).count();
                Err(CliError::Verification(format!("{failed} checks failed")))
            }
        }
    }
}
