//! Simple undirected graphs on dense vertex ids.
//!
//! Every algorithm in the crate consumes [`Graph`]. Vertices are `0..n`;
//! the original input label of each vertex is kept (strictly increasing) so
//! that subgraphs can be mapped back to their host and reports can speak in
//! the caller's numbering.

mod io;
mod ops;
mod parity;

pub use io::{parse_edge_list, parse_json, parse_graph, to_dot, to_json, DotOverlay, GraphJson};
pub use ops::{
    ball, bfs_distances, canonical_cycle, cycles_by_length, distance, girth, induced, mark,
    minus, minus_edges, shortest_cycle, sphere, union_graphs, UNREACHABLE,
};
pub(crate) use ops::bfs_bounded;
pub use parity::{bipartition, parity_pi, parity_triple, Bipartition, BipartitionLabel, Parity};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order for which per-vertex neighbour bitmasks are kept.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
    edge_count: usize,
    labels: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph::from_parts(vec![Vec::new(); n], (0..n as u64).collect())
    }

    /// Builds a graph on ids `0..n`. Repeated pairs collapse; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::from_edges_labeled(n, edges, (0..n as u64).collect())
    }

    pub(crate) fn from_edges_labeled(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<u64>,
    ) -> Result<Graph> {
        debug_assert_eq!(labels.len(), n);
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u]));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph::from_parts(adj, labels))
    }

    fn from_parts(adj: Vec<Vec<usize>>, labels: Vec<u64>) -> Graph {
        let n = adj.len();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let masks = if n <= MASK_LIMIT {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect()
        } else {
            Vec::new()
        };
        Graph {
            adj,
            masks,
            edge_count,
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if !self.masks.is_empty() {
            return self.masks[u] >> v & 1 == 1;
        }
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Neighbour bitmask of `v`. Only available when `n <= 64`.
    pub fn mask(&self, v: usize) -> u64 {
        self.masks[v]
    }

    pub fn has_masks(&self) -> bool {
        self.n() <= MASK_LIMIT
    }

    pub fn all_mask(&self) -> u64 {
        low_bits(self.n())
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn id_of(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn has_identity_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l == i as u64)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_vertices(&self, vs: &[usize]) -> Result<()> {
        vs.iter().try_for_each(|&v| self.check_vertex(v))
    }

    pub fn degrees(&self) -> DegreeStats {
        degrees(self)
    }

    pub fn average_degree(&self) -> Ratio<u64> {
        if self.is_empty() {
            Ratio::from_integer(0)
        } else {
            Ratio::new(2 * self.edge_count as u64, self.n() as u64)
        }
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        let dist = bfs_distances(self, &[0], None);
        dist.iter().all(|&d| d != UNREACHABLE)
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Builds a graph from raw labelled pairs. Labels are compacted to dense ids
/// in ascending label order.
pub fn build_graph(edge_list: &[(u64, u64)]) -> Result<Graph> {
    if let Some(&(u, _)) = edge_list.iter().find(|(u, v)| u == v) {
        return Err(Error::SelfLoop(u));
    }
    let mut labels: Vec<u64> = edge_list.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let id = |l: u64| labels.binary_search(&l).expect("label collected above");
    let edges: Vec<(usize, usize)> = edge_list.iter().map(|&(u, v)| (id(u), id(v))).collect();
    Graph::from_edges_labeled(labels.len(), &edges, labels.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub avg: Ratio<u64>,
    pub max: usize,
}

pub(crate) fn ser_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Ratio", 3)?;
    st.serialize_field("numer", r.numer())?;
    st.serialize_field("denom", r.denom())?;
    st.serialize_field("value", &(*r.numer() as f64 / *r.denom() as f64))?;
    st.end()
}

/// Minimum, exact average and maximum degree; all zero on the empty graph.
pub fn degrees(g: &Graph) -> DegreeStats {
    DegreeStats {
        min: g.min_degree(),
        avg: g.average_degree(),
        max: g.max_degree(),
    }
}

/// A simple path given by its vertex sequence. A single vertex is a path of
/// length zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PathViolation {
    Empty,
    NotAnEdge(usize, usize),
    RepeatedVertex(usize),
    WrongEndpoints { expected: (usize, usize), got: (usize, usize) },
    WrongLength { expected: usize, got: usize },
    HitsAvoided(usize),
}

impl Path {
    pub fn new(vertices: Vec<usize>) -> Path {
        Path(vertices)
    }

    pub fn single(v: usize) -> Path {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().expect("path is non-empty")
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn join(&self, other: &Path) -> Path {
        assert_eq!(self.end(), other.start(), "paths do not meet");
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0[1..]);
        Path(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Checks simplicity and adjacency in `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), PathViolation> {
        if self.0.is_empty() {
            return Err(PathViolation::Empty);
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if v >= g.n() || seen[v] {
                return Err(PathViolation::RepeatedVertex(v));
            }
            seen[v] = true;
        }
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(PathViolation::NotAnEdge(w[0], w[1]));
            }
        }
        Ok(())
    }

    /// Full revalidation: simple, adjacent, endpoints `from`/`to`, exact
    /// length when given, and disjoint from `avoid`.
    pub fn validate_full(
        &self,
        g: &Graph,
        from: usize,
        to: usize,
        length: Option<usize>,
        avoid: &[usize],
    ) -> Result<(), PathViolation> {
        self.validate(g)?;
        if (self.start(), self.end()) != (from, to) {
            return Err(PathViolation::WrongEndpoints {
                expected: (from, to),
                got: (self.start(), self.end()),
            });
        }
        if let Some(l) = length {
            if self.len() != l {
                return Err(PathViolation::WrongLength { expected: l, got: self.len() });
            }
        }
        if let Some(&v) = self.0.iter().find(|v| avoid.contains(v)) {
            return Err(PathViolation::HitsAvoided(v));
        }
        Ok(())
    }
}
