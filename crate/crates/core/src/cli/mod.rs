//! `feyncount` command-line front end.
//!
//! Data goes to the output stream and diagnostics to the error stream. The
//! exit status is 0 when every requested computation and check succeeds,
//! 1 when a check or cross-method comparison fails, and 2 for refused or
//! invalid requests.

mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::compositions::{count_compositions, enumerate_compositions};
use crate::counting::{CountError, CountTable, Method, Order, TermBudget};
use crate::oracle::{self, OracleCap};
use crate::verify::{self, SuiteOptions};
use crate::Error;

pub use render::{OracleSummary, ReportFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Parser)]
#[command(
    name = "feyncount",
    version,
    about = "Exact counts of connected Feynman diagrams per perturbation order"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of total, vacuum, connected and distinct connected diagrams.
    Counts(CountsArgs),
    /// Run the identity and oracle suites.
    Verify(VerifyArgs),
    /// Brute-force Wick enumeration at one order.
    Oracle(OracleArgs),
    /// Count or list the compositions of n.
    Compositions(CompositionsArgs),
    /// Write every distinct connected diagram of one order as a DOT file.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Most composition terms an exponential-cost method may sum.
    #[arg(long, default_value_t = TermBudget::DEFAULT.0, value_parser = clap::value_parser!(u64).range(1..))]
    pub term_budget: u64,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    #[arg(long)]
    pub max_order: Order,
    #[arg(long, value_enum, default_value_t = Method::Recurrence)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_order: Order,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Also run the oracle at order 5.
    #[arg(long = "override")]
    pub oracle_override: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: Order,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Allow order 5 (39916800 matchings; no orbit census).
    #[arg(long = "override")]
    pub oracle_override: bool,
    /// Also write each canonical diagram as DOT into this directory.
    #[arg(long)]
    pub dot_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompositionsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Print every composition instead of the count.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
    pub order: Order,
    #[arg(long)]
    pub dir: PathBuf,
}

/// Runs a parsed command, writing data to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Counts(args) => cmd_counts(&args, out),
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Oracle(args) => cmd_oracle(&args, out, err),
        Command::Compositions(args) => cmd_compositions(&args, out),
        Command::Export(args) => cmd_export(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Count(CountError::Disagreement { .. }) => 1,
                Error::Count(CountError::InexactDivision { .. }) => 1,
                _ => 2,
            }
        }
    }
}

pub fn cmd_counts(args: &CountsArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let table = CountTable::compute(
        args.max_order,
        args.method,
        TermBudget(args.budget.term_budget),
    )?;
    let text = match args.format {
        Format::Table => render::count_table(&table),
        Format::Csv => render::count_csv(&table),
        Format::Json => render::count_json(&table, args.method),
        Format::Bfile => render::count_bfile(&table),
    };
    out.write_all(text.as_bytes())?;
    Ok(0)
}

pub fn cmd_verify(
    args: &VerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let format = ReportFormat::for_report(args.format)?;
    let outcome = verify::run_suite(SuiteOptions {
        max_order: args.max_order,
        budget: TermBudget(args.budget.term_budget),
        oracle_cap: OracleCap {
            allow_order_five: args.oracle_override,
        },
    })?;
    for note in &outcome.notes {
        writeln!(err, "note: {note}")?;
    }
    out.write_all(render::report(&outcome.report, format).as_bytes())?;
    if outcome.report.overall() {
        Ok(0)
    } else {
        writeln!(
            err,
            "verification failed: {} check(s)",
            outcome.report.failures().count()
        )?;
        Ok(1)
    }
}

pub fn cmd_oracle(
    args: &OracleArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let format = ReportFormat::for_report(args.format)?;
    let cap = OracleCap {
        allow_order_five: args.oracle_override,
    };
    let m = args.order;
    let matchings = oracle::enumerate_matchings(m, cap)?;
    let vacuum = oracle::enumerate_vacuum_matchings(m, cap)?;
    let census = if m <= oracle::DEFAULT_CAP {
        Some(oracle::orbit_census(m, args.dot_dir.is_some())?)
    } else {
        writeln!(
            err,
            "note: no orbit census above order {}",
            oracle::DEFAULT_CAP
        )?;
        None
    };
    if let Some(dir) = &args.dot_dir {
        match census.as_ref().and_then(|c| c.representatives.as_deref()) {
            Some(reps) => {
                let written = write_dot_files(dir, m, reps)?;
                writeln!(err, "wrote {written} DOT files to {}", dir.display())?;
            }
            None => {
                return Err(Error::Usage(format!(
                    "no canonical diagrams at order {m} to export"
                )))
            }
        }
    }
    let summary = OracleSummary::new(m, matchings, vacuum, census.as_ref());
    out.write_all(render::oracle(&summary, format).as_bytes())?;
    Ok(0)
}

pub fn cmd_compositions(args: &CompositionsArgs, out: &mut dyn Write) -> Result<i32, Error> {
    if args.list {
        let mut buf = std::io::BufWriter::new(out);
        for c in enumerate_compositions(args.n)? {
            writeln!(buf, "{c}")?;
        }
        buf.flush()?;
    } else {
        writeln!(out, "{}", count_compositions(args.n))?;
    }
    Ok(0)
}

pub fn cmd_export(args: &ExportArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let census = oracle::orbit_census(args.order, true)?;
    let reps = census.representatives.unwrap_or_default();
    let written = write_dot_files(&args.dir, args.order, &reps)?;
    writeln!(out, "{written}")?;
    Ok(0)
}

/// `diagram_m{order}_{index}.dot`, indices from 1 in canonical order.
pub fn dot_file_name(order: Order, index: usize) -> String {
    format!("diagram_m{order}_{index}.dot")
}

fn write_dot_files(
    dir: &Path,
    order: Order,
    reps: &[oracle::CanonicalDiagram],
) -> Result<usize, Error> {
    fs::create_dir_all(dir)?;
    for (i, rep) in reps.iter().enumerate() {
        fs::write(
            dir.join(dot_file_name(order, i + 1)),
            oracle::export_diagram(rep),
        )?;
    }
    Ok(reps.len())
}
