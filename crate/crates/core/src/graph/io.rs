//! Edge-list and JSON input, JSON and DOT output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{build_graph, Graph};
use crate::error::{Error, Result};

/// `{"n": 3, "edges": [[0,1],[1,2]], "labels": [..]}`. Edges use dense ids
/// `0..n`; `labels`, when present, gives the external label of each id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<u64>>,
}

/// One `u v` pair per line; `#` starts a comment; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected two vertex ids, found {:?}",
                lineno + 1,
                line
            )));
        }
        let parse = |s: &str| {
            s.parse::<u64>().map_err(|_| {
                Error::Parse(format!("line {}: {s:?} is not a non-negative integer", lineno + 1))
            })
        };
        pairs.push((parse(fields[0])?, parse(fields[1])?));
    }
    build_graph(&pairs)
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    match doc.labels {
        None => Graph::from_edges(doc.n, &edges),
        Some(labels) => {
            if labels.len() != doc.n || labels.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(
                    "labels must have length n and be strictly increasing".into(),
                ));
            }
            Graph::from_edges_labeled(doc.n, &edges, labels)
        }
    }
}

/// JSON when the first non-space character is `{`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn to_json(g: &Graph) -> GraphJson {
    GraphJson {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: (!g.has_identity_labels()).then(|| g.labels().to_vec()),
    }
}

/// Highlighting for DOT export.
#[derive(Debug, Clone, Default)]
pub struct DotOverlay {
    /// Named vertex groups, drawn as filled nodes in one colour per group.
    pub groups: Vec<(String, Vec<usize>)>,
    /// Paths whose edges are drawn bold in one colour per path.
    pub paths: Vec<Vec<usize>>,
}

const PALETTE: [&str; 8] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
];

pub fn to_dot(g: &Graph, overlay: &DotOverlay) -> String {
    let mut fill = vec![None; g.n()];
    for (i, (_, members)) in overlay.groups.iter().enumerate() {
        for &v in members {
            fill[v] = Some(PALETTE[i % PALETTE.len()]);
        }
    }
    let mut edge_colour = std::collections::BTreeMap::new();
    for (i, p) in overlay.paths.iter().enumerate() {
        for w in p.windows(2) {
            edge_colour.insert((w[0].min(w[1]), w[0].max(w[1])), PALETTE[(i + 3) % PALETTE.len()]);
        }
    }
    let mut out = String::from("graph G {\n");
    for (i, (name, _)) in overlay.groups.iter().enumerate() {
        let _ = writeln!(out, "  // group {name}: {}", PALETTE[i % PALETTE.len()]);
    }
    for v in 0..g.n() {
        match fill[v] {
            Some(c) => {
                let _ = writeln!(out, "  {} [style=filled, fillcolor=\"{c}\"];", g.label(v));
            }
            None => {
                let _ = writeln!(out, "  {};", g.label(v));
            }
        }
    }
    for (u, v) in g.edges() {
        match edge_colour.get(&(u, v)) {
            Some(c) => {
                let _ = writeln!(out, "  {} -- {} [color=\"{c}\", penwidth=3];", g.label(u), g.label(v));
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", g.label(u), g.label(v));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# triangle\n0 1\n1 2 # closing soon\n\n2 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("0 x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("-1 2\n"), Err(Error::Parse(_))));
        assert_eq!(parse_edge_list("4 4\n"), Err(Error::SelfLoop(4)));
    }

    #[test]
    fn json_round_trip() {
        let g = parse_edge_list("5 9\n9 12\n").unwrap();
        let doc = to_json(&g);
        assert_eq!(doc.labels, Some(vec![5, 9, 12]));
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn json_keeps_isolated_vertices() {
        let g = parse_graph(r#"{"n": 4, "edges": [[0, 1]]}"#).unwrap();
        assert_eq!(g.n(), 4);
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 3]]}"#).is_err());
    }

    #[test]
    fn dot_marks_overlay() {
        let g = crate::generators::cycle(4);
        let dot = to_dot(
            &g,
            &DotOverlay { groups: vec![("F".into(), vec![0])], paths: vec![vec![1, 2]] },
        );
        assert!(dot.contains("0 [style=filled"));
        assert!(dot.contains("1 -- 2 [color="));
        assert!(dot.contains("0 -- 3;"));
    }
}
