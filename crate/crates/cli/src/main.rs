//! `cyclespan`: cycle spectra, expanders and exact-length paths from the
//! command line.

mod commands;
mod config;
mod source;
mod sweep;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use cyclespan_core::Graph;
use serde_json::json;

use commands::Report;
use source::GraphSource;

#[derive(Debug, Parser)]
#[command(name = "cyclespan", version, about = "Cycle lengths, expanders and exact-length paths in graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true, env = "CYCLESPAN_OUTPUT")]
    pub output: Option<String>,

    /// Output format; defaults to json, or csv for `sweep`.
    #[arg(long, value_enum, global = true, env = "CYCLESPAN_FORMAT")]
    pub format: Option<Format>,

    /// More log output on standard error; repeat for more.
    #[arg(long, short = 'v', action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    /// Read extra flags from a `key = value` file.
    #[arg(long, global = true, env = "CYCLESPAN_CONFIG")]
    pub config: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cycle lengths of a graph, with interval and sequence reports.
    Spectrum(commands::SpectrumArgs),
    /// Check the sublinear expansion condition.
    ExpanderCheck(commands::ExpanderArgs),
    /// Extract an expander subgraph.
    Extract(commands::ExtractArgs),
    /// Shortest path between two sets avoiding a third.
    Connect(commands::ConnectArgs),
    /// A path of exactly a given length between two vertices.
    ExactPath(commands::ExactPathArgs),
    /// Build a simple or chained adjuster.
    Adjuster(commands::AdjusterArgs),
    /// Balanced subdivisions of a complete graph.
    Tk(commands::TkArgs),
    /// Check that every pair at distance at most ℓ has paths of all lengths up to a bound.
    PropertyP(commands::PropertyPArgs),
    /// Run commands over a corpus of graphs.
    Sweep(sweep::SweepArgs),
}

const SUBCOMMANDS: &[&str] =
    &["spectrum", "expander-check", "extract", "connect", "exact-path", "adjuster", "tk", "property-p", "sweep"];

pub struct Executed {
    pub graph: Graph,
    pub source: GraphSource,
    pub report: Report,
}

fn source_of(cmd: &Command) -> &GraphSource {
    match cmd {
        Command::Spectrum(a) => &a.source,
        Command::ExpanderCheck(a) => &a.source,
        Command::Extract(a) => &a.source,
        Command::Connect(a) => &a.source,
        Command::ExactPath(a) => &a.source,
        Command::Adjuster(a) => &a.source,
        Command::Tk(a) => &a.source,
        Command::PropertyP(a) => &a.source,
        Command::Sweep(_) => unreachable!("sweep has no single graph"),
    }
}

/// Loads the graph of a single-graph command and runs it.
pub fn execute(cmd: &Command) -> Result<Executed> {
    let source = source_of(cmd).clone();
    let g = source.load()?;
    log::debug!("loaded {} with n = {}, m = {}", source.describe(), g.n(), g.edge_count());
    let report = match cmd {
        Command::Spectrum(a) => commands::spectrum(&g, a),
        Command::ExpanderCheck(a) => commands::expander_check(&g, a),
        Command::Extract(a) => commands::extract(&g, a),
        Command::Connect(a) => commands::connect(&g, a),
        Command::ExactPath(a) => commands::exact_path(&g, a),
        Command::Adjuster(a) => commands::adjuster(&g, a),
        Command::Tk(a) => commands::tk(&g, a),
        Command::PropertyP(a) => commands::property_p(&g, a),
        Command::Sweep(_) => unreachable!("sweep has no single graph"),
    }?;
    Ok(Executed { graph: g, source, report })
}

fn render(cli: &Cli) -> Result<String> {
    if let Command::Sweep(a) = &cli.command {
        let rows = sweep::sweep(a)?;
        return match cli.format.unwrap_or(Format::Csv) {
            Format::Csv => sweep::to_csv(&rows),
            Format::Json => Ok(serde_json::to_string_pretty(&rows)? + "\n"),
            Format::Dot => bail!("sweep has no dot output"),
        };
    }
    let Executed { graph, source, report } = execute(&cli.command)?;
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut doc = json!({
                "graph": source.describe(),
                "n": graph.n(),
                "edges": graph.edge_count(),
                "seed": source.seed,
                "verdict": report.verdict,
                "result": report.json,
            });
            if !graph.has_identity_labels() {
                doc["labels"] = json!(graph.labels());
            }
            Ok(serde_json::to_string_pretty(&doc)? + "\n")
        }
        Format::Dot => report.dot.context("this command has no dot output"),
        Format::Csv => bail!("csv output is only available for sweep"),
    }
}

fn is_capacity(e: &anyhow::Error) -> bool {
    e.chain().any(|c| matches!(c.downcast_ref::<cyclespan_core::Error>(), Some(cyclespan_core::Error::Capacity { .. })))
}

fn run() -> Result<()> {
    let args = config::apply_config(std::env::args().collect(), SUBCOMMANDS)?;
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        2 => "debug",
        _ => "trace",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    let text = render(&cli)?;
    match &cli.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path}"))?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_capacity(&e) {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
