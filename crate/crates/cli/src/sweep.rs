//! Runs a list of commands over a corpus of graphs, one CSV row per cell.

use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser};
use rayon::prelude::*;
use serde::Serialize;

use crate::{execute, Cli, Command};

const BUILTIN_CORPUS: &[&str] = &[
    "petersen",
    "cycle 8",
    "cycle 9",
    "complete 5",
    "complete_bipartite 3 3",
    "complete_bipartite 4 5",
    "hypercube 3",
    "octahedron",
    "grid 3 3",
    "random_gnp 10 0.4",
];

const DEFAULT_COMMANDS: &str = "spectrum; expander-check; tk --k 3 --ell-min 1 --ell-max 3";

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// File with one graph per line: a family name with its parameters, or `file:PATH`.
    /// Defaults to a small built-in corpus.
    #[arg(long, env = "CYCLESPAN_CORPUS")]
    pub corpus: Option<String>,
    /// Semicolon-separated subcommands with their flags.
    #[arg(long, env = "CYCLESPAN_COMMANDS", default_value = DEFAULT_COMMANDS)]
    pub commands: String,
    /// Worker threads; 0 uses one per core.
    #[arg(long, env = "CYCLESPAN_WORKERS", default_value_t = 0)]
    pub workers: usize,
    /// Master seed; each cell derives its own.
    #[arg(long, env = "CYCLESPAN_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Add a wall-clock column. Output is then no longer reproducible.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub index: usize,
    pub graph: String,
    pub command: String,
    pub seed: u64,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    pub verdict: String,
    pub error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

fn corpus_entries(a: &SweepArgs) -> Result<Vec<String>> {
    let Some(path) = &a.corpus else {
        return Ok(BUILTIN_CORPUS.iter().map(|s| s.to_string()).collect());
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading corpus {path}"))?;
    let entries: Vec<String> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
        .filter(|l| !l.is_empty())
        .collect();
    if entries.is_empty() {
        bail!("corpus {path} lists no graphs");
    }
    Ok(entries)
}

fn command_list(a: &SweepArgs) -> Result<Vec<String>> {
    let cmds: Vec<String> =
        a.commands.split(';').map(|c| c.trim().to_string()).filter(|c| !c.is_empty()).collect();
    if cmds.is_empty() {
        bail!("--commands is empty");
    }
    if cmds.iter().any(|c| c.split_whitespace().next() == Some("sweep")) {
        bail!("sweep cannot run itself");
    }
    Ok(cmds)
}

/// SplitMix64 finaliser over the master seed and the cell index.
fn cell_seed(master: u64, index: usize) -> u64 {
    let mut z = master ^ (index as u64).wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn run_cell(index: usize, graph: &str, command: &str, seed: u64, timings: bool) -> Row {
    let mut argv: Vec<String> = vec!["cyclespan".into()];
    argv.extend(command.split_whitespace().map(str::to_string));
    match graph.strip_prefix("file:") {
        Some(path) => argv.extend(["--input".to_string(), path.trim().to_string()]),
        None => {
            argv.push("--family".into());
            argv.extend(graph.split_whitespace().map(str::to_string));
        }
    }
    argv.extend(["--seed".to_string(), seed.to_string()]);
    let start = Instant::now();
    let result = Cli::try_parse_from(&argv).map_err(anyhow::Error::from).and_then(|cli| match cli.command {
        Command::Sweep(_) => bail!("sweep cannot run itself"),
        cmd => execute(&cmd),
    });
    let seconds = timings.then(|| start.elapsed().as_secs_f64());
    let mut row = Row {
        index,
        graph: graph.to_string(),
        command: command.to_string(),
        seed,
        n: None,
        edges: None,
        verdict: String::new(),
        error: String::new(),
        seconds,
    };
    match result {
        Ok(out) => {
            row.n = Some(out.graph.n());
            row.edges = Some(out.graph.edge_count());
            row.verdict = out.report.verdict;
        }
        Err(e) => {
            row.verdict = "error".into();
            row.error = format!("{e:#}").lines().next().unwrap_or_default().to_string();
        }
    }
    row
}

pub fn sweep(a: &SweepArgs) -> Result<Vec<Row>> {
    let graphs = corpus_entries(a)?;
    let commands = command_list(a)?;
    let cells: Vec<(usize, &String, &String)> = graphs
        .iter()
        .flat_map(|g| commands.iter().map(move |c| (g, c)))
        .enumerate()
        .map(|(i, (g, c))| (i, g, c))
        .collect();
    log::info!("sweep: {} graphs × {} commands", graphs.len(), commands.len());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(a.workers).build()?;
    let rows = pool.install(|| {
        cells
            .par_iter()
            .map(|&(i, g, c)| run_cell(i, g, c, cell_seed(a.seed, i), a.timings))
            .collect::<Vec<_>>()
    });
    Ok(rows)
}

pub fn to_csv(rows: &[Row]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
