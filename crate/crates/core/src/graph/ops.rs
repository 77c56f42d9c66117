//! Distances, balls and subgraph operators.

use std::collections::VecDeque;

use super::Graph;
use crate::error::Result;

pub const UNREACHABLE: usize = usize::MAX;

/// Indicator vector of `set` over `0..n`.
pub fn mark(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Multi-source BFS distances, skipping vertices flagged in `blocked`.
/// Blocked sources are still used as sources.
pub fn bfs_distances(g: &Graph, sources: &[usize], blocked: Option<&[bool]>) -> Vec<usize> {
    bfs_bounded(g, sources, blocked, UNREACHABLE)
}

pub(crate) fn bfs_bounded(
    g: &Graph,
    sources: &[usize],
    blocked: Option<&[bool]>,
    max_depth: usize,
) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] == UNREACHABLE {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        if dist[u] >= max_depth {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE && !blocked.is_some_and(|b| b[w]) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `B^r(W)`: every vertex within distance `r` of `W`, sorted.
pub fn ball(g: &Graph, w: &[usize], r: usize) -> Result<Vec<usize>> {
    g.check_vertices(w)?;
    let dist = bfs_bounded(g, w, None, r);
    Ok(collect_where(&dist, |d| d <= r))
}

/// `N^r(W)`: vertices at distance exactly `r` from `W`, sorted.
pub fn sphere(g: &Graph, w: &[usize], r: usize) -> Result<Vec<usize>> {
    g.check_vertices(w)?;
    let dist = bfs_bounded(g, w, None, r);
    Ok(collect_where(&dist, |d| d == r))
}

fn collect_where(dist: &[usize], keep: impl Fn(usize) -> bool) -> Vec<usize> {
    dist.iter()
        .enumerate()
        .filter(|&(_, &d)| d != UNREACHABLE && keep(d))
        .map(|(v, _)| v)
        .collect()
}

/// Graph distance, `None` when `u` and `v` lie in different components.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let d = bfs_distances(g, &[u], None)[v];
    Ok((d != UNREACHABLE).then_some(d))
}

/// `G[S]` on compact ids, together with the host id of every new vertex.
/// Labels are inherited from the host.
pub fn induced(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    g.check_vertices(s)?;
    let mut keep = mark(g.n(), s);
    let parent: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
    let mut new_id = vec![UNREACHABLE; g.n()];
    for (i, &v) in parent.iter().enumerate() {
        new_id[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in parent.iter().enumerate() {
        for &w in g.neighbors(v) {
            if w > v && keep[w] {
                edges.push((i, new_id[w]));
            }
        }
    }
    keep.clear();
    let labels = parent.iter().map(|&v| g.label(v)).collect();
    let h = Graph::from_edges_labeled(parent.len(), &edges, labels)?;
    Ok((h, parent))
}

/// `G − S` on compact ids, together with the host id of every new vertex.
pub fn minus(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    g.check_vertices(s)?;
    let drop = mark(g.n(), s);
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !drop[v]).collect();
    induced(g, &rest)
}

/// `G ∪ H`, matching vertices by label.
pub fn union_graphs(g: &Graph, h: &Graph) -> Result<Graph> {
    let pairs: Vec<(u64, u64)> = g
        .edges()
        .map(|(u, v)| (g.label(u), g.label(v)))
        .chain(h.edges().map(|(u, v)| (h.label(u), h.label(v))))
        .collect();
    let mut labels: Vec<u64> = g.labels().iter().chain(h.labels()).copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let id = |l: u64| labels.binary_search(&l).expect("label present");
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (id(a), id(b))).collect();
    Graph::from_edges_labeled(labels.len(), &edges, labels.clone())
}

/// `G ∖ H`: the vertex set of `G` with every edge of `H` removed, matching by label.
pub fn minus_edges(g: &Graph, h: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| {
            match (h.id_of(g.label(u)), h.id_of(g.label(v))) {
                (Some(a), Some(b)) => !h.has_edge(a, b),
                _ => true,
            }
        })
        .collect();
    Graph::from_edges_labeled(g.n(), &edges, g.labels().to_vec())
}

/// Rotates a cycle to start at its least vertex, oriented towards the
/// smaller of that vertex's two cycle neighbours.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return Vec::new();
    }
    let (pos, _) = cycle.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
    let fwd: Vec<usize> = (0..len).map(|i| cycle[(pos + i) % len]).collect();
    let bwd: Vec<usize> = (0..len).map(|i| cycle[(pos + len - i) % len]).collect();
    fwd.min(bwd)
}

/// A shortest cycle through `v` in `G` minus `blocked`, as a vertex sequence
/// starting at `v`.
pub fn shortest_cycle(g: &Graph, v: usize, blocked: Option<&[bool]>) -> Option<Vec<usize>> {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![UNREACHABLE; n];
    let mut branch = vec![UNREACHABLE; n];
    let mut queue = VecDeque::new();
    dist[v] = 0;
    queue.push_back(v);
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(u) = queue.pop_front() {
        if let Some((len, _, _)) = best {
            if 2 * dist[u] + 1 >= len {
                break;
            }
        }
        for &w in g.neighbors(u) {
            if blocked.is_some_and(|b| b[w]) || w == parent[u] {
                continue;
            }
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                branch[w] = if u == v { w } else { branch[u] };
                queue.push_back(w);
            } else if u != v && w != v && branch[w] != branch[u] {
                let len = dist[u] + dist[w] + 1;
                if best.map_or(true, |(b, _, _)| len < b) {
                    best = Some((len, u, w));
                }
            }
        }
    }
    let (_, a, b) = best?;
    let mut left = vec![a];
    while *left.last().unwrap() != v {
        left.push(parent[*left.last().unwrap()]);
    }
    left.reverse();
    let mut x = b;
    while x != v {
        left.push(x);
        x = parent[x];
    }
    Some(left)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    (0..g.n())
        .filter_map(|v| shortest_cycle(g, v, None).map(|c| c.len()))
        .min()
}

/// Distinct shortest cycles through each vertex of `G − blocked`, canonical
/// and sorted by `(length, sequence)`.
pub fn cycles_by_length(g: &Graph, blocked: Option<&[bool]>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..g.n())
        .filter(|&v| !blocked.is_some_and(|b| b[v]))
        .filter_map(|v| shortest_cycle(g, v, blocked))
        .map(|c| canonical_cycle(&c))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}
