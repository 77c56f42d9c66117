//! Where the host graph comes from: a file, stdin or a named family.

use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use cyclespan_core::generators::{generate, NamedGraph};
use cyclespan_core::graph::parse_graph;
use cyclespan_core::Graph;

#[derive(Debug, Clone, Default, Args)]
pub struct GraphSource {
    /// Edge list or JSON graph file; `-` reads standard input.
    #[arg(long, env = "CYCLESPAN_INPUT", conflicts_with = "family")]
    pub input: Option<String>,

    /// Named family followed by its parameters, e.g. `complete_bipartite 5 5`.
    #[arg(long, num_args = 1.., value_name = "NAME PARAMS")]
    pub family: Option<Vec<String>>,

    /// Seed for random families and randomized methods.
    #[arg(long, env = "CYCLESPAN_SEED", default_value_t = 0)]
    pub seed: u64,
}

impl GraphSource {
    pub fn load(&self) -> Result<Graph> {
        let g = match (&self.input, &self.family) {
            (Some(path), _) => {
                let text = if path == "-" {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
                    s
                } else {
                    std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
                };
                if text.trim().is_empty() {
                    bail!("input {path} is empty");
                }
                parse_graph(&text)?
            }
            (None, Some(spec)) => {
                let (name, params) = spec.split_first().ok_or_else(|| anyhow!("--family needs a name"))?;
                generate(&NamedGraph::parse(name, params)?, self.seed)?
            }
            (None, None) => bail!("give a graph with --input or --family"),
        };
        if g.n() == 0 {
            bail!("the graph has no vertices");
        }
        Ok(g)
    }

    /// A short name for reports.
    pub fn describe(&self) -> String {
        match (&self.input, &self.family) {
            (Some(p), _) => p.clone(),
            (None, Some(f)) => f.join(" "),
            (None, None) => String::new(),
        }
    }
}

/// Parses a comma- or space-separated list of vertex labels into ids.
pub fn vertex_list(g: &Graph, text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let label: u64 = t.parse().with_context(|| format!("{t:?} is not a vertex label"))?;
            vertex(g, label)
        })
        .collect()
}

pub fn vertex(g: &Graph, label: u64) -> Result<usize> {
    g.id_of(label).ok_or_else(|| anyhow!("vertex {label} is not in the graph"))
}

/// Vertices from an inline list and an optional file of labels.
pub fn vertex_set(g: &Graph, inline: Option<&str>, file: Option<&str>) -> Result<Vec<usize>> {
    let mut out = match inline {
        Some(s) => vertex_list(g, s)?,
        None => Vec::new(),
    };
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        let body: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join(" ");
        out.extend(vertex_list(g, &body)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
