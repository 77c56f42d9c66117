//! Named graph families. Random families are deterministic in their seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph};

fn must(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("generator emits a simple graph")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    must(n, &edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    must(a + b, &edges)
}

/// `C_n` on `0..n` in cyclic order. Panics for `n < 3`; see [`generate`].
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    must(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    must(n, &edges)
}

/// `rows × cols` grid; vertex `(r, c)` is `r·cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    must(rows * cols, &edges)
}

pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v))
        .collect();
    must(n, &edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i – i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    must(10, &edges)
}

/// `K_{2,2,2}`.
pub fn octahedron() -> Graph {
    let edges: Vec<_> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + 3)
        .collect();
    must(6, &edges)
}

pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    must(n, &edges)
}

/// Random `d`-regular graph by the pairing model with restarts.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(Error::domain(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        stubs.shuffle(&mut rng);
        let mut seen = std::collections::BTreeSet::new();
        let mut ok = true;
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                ok = false;
                break;
            }
        }
        if ok {
            let edges: Vec<_> = seen.into_iter().collect();
            return Ok(must(n, &edges));
        }
    }
    Err(Error::domain(format!("pairing model failed for n={n}, d={d}")))
}

/// Stand-in for a high-girth dense graph: random edges are added in seeded
/// order whenever they close no cycle shorter than `g`.
pub fn erdos_girth_stub(n: usize, g: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in pairs {
        // A new edge uv closes a cycle of length dist(u, v) + 1.
        if bounded_distance(&adj, u, v, g.saturating_sub(2)) {
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
        edges.push((u, v));
    }
    must(n, &edges)
}

fn bounded_distance(adj: &[Vec<usize>], s: usize, t: usize, limit: usize) -> bool {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut queue = std::collections::VecDeque::from([s]);
    dist[s] = 0;
    while let Some(u) = queue.pop_front() {
        if u == t {
            return true;
        }
        if dist[u] == limit {
            continue;
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Random connected graph: a random spanning tree plus `G(n, p)` edges.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    must(n, &edges)
}

/// Random connected bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_connected_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Graph {
    assert!(a >= 1 && b >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    // Grow a spanning tree that alternates sides.
    let mut order: Vec<usize> = (1..a).chain(a + 1..a + b).collect();
    order.shuffle(&mut rng);
    let mut placed_left = vec![0usize];
    let mut placed_right = vec![a];
    edges.push((0, a));
    for v in order {
        if v < a {
            edges.push((v, *placed_right.choose(&mut rng).unwrap()));
            placed_left.push(v);
        } else {
            edges.push((*placed_left.choose(&mut rng).unwrap(), v));
            placed_right.push(v);
        }
    }
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    must(a + b, &edges)
}

/// Graph families by name, with their numeric parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Grid(usize, usize),
    Hypercube(u32),
    Petersen,
    Octahedron,
    RandomGnp { n: usize, p: f64 },
    RandomRegular { n: usize, d: usize },
    ErdosGirthStub { n: usize, girth: usize },
}

pub const FAMILIES: [&str; 11] = [
    "complete",
    "complete_bipartite",
    "cycle",
    "path",
    "grid",
    "hypercube",
    "petersen",
    "octahedron",
    "random_gnp",
    "random_regular",
    "erdos_girth_stub",
];

impl NamedGraph {
    /// Parses a family name and its positional parameters.
    pub fn parse(family: &str, params: &[String]) -> Result<NamedGraph> {
        let int = |i: usize| -> Result<usize> {
            params
                .get(i)
                .ok_or_else(|| Error::domain(format!("{family}: missing parameter {}", i + 1)))?
                .parse::<usize>()
                .map_err(|_| Error::domain(format!("{family}: parameter {} must be an integer", i + 1)))
        };
        let real = |i: usize| -> Result<f64> {
            params
                .get(i)
                .ok_or_else(|| Error::domain(format!("{family}: missing parameter {}", i + 1)))?
                .parse::<f64>()
                .map_err(|_| Error::domain(format!("{family}: parameter {} must be a number", i + 1)))
        };
        let arity = match family {
            "petersen" | "octahedron" => 0,
            "complete" | "cycle" | "path" | "hypercube" => 1,
            _ => 2,
        };
        if params.len() != arity {
            return Err(Error::domain(format!(
                "{family} takes {arity} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(match family {
            "complete" => NamedGraph::Complete(int(0)?),
            "complete_bipartite" => NamedGraph::CompleteBipartite(int(0)?, int(1)?),
            "cycle" => NamedGraph::Cycle(int(0)?),
            "path" => NamedGraph::Path(int(0)?),
            "grid" => NamedGraph::Grid(int(0)?, int(1)?),
            "hypercube" => NamedGraph::Hypercube(int(0)? as u32),
            "petersen" => NamedGraph::Petersen,
            "octahedron" => NamedGraph::Octahedron,
            "random_gnp" => NamedGraph::RandomGnp { n: int(0)?, p: real(1)? },
            "random_regular" => NamedGraph::RandomRegular { n: int(0)?, d: int(1)? },
            "erdos_girth_stub" => NamedGraph::ErdosGirthStub { n: int(0)?, girth: int(1)? },
            other => return Err(Error::domain(format!("unknown family {other:?}"))),
        })
    }

    pub fn is_random(&self) -> bool {
        matches!(
            self,
            NamedGraph::RandomGnp { .. } | NamedGraph::RandomRegular { .. } | NamedGraph::ErdosGirthStub { .. }
        )
    }
}

/// Builds a named graph. `seed` is ignored by deterministic families.
pub fn generate(family: &NamedGraph, seed: u64) -> Result<Graph> {
    Ok(match *family {
        NamedGraph::Complete(n) => complete(n),
        NamedGraph::CompleteBipartite(a, b) => complete_bipartite(a, b),
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::domain("cycle needs n ≥ 3"));
            }
            cycle(n)
        }
        NamedGraph::Path(n) => path(n),
        NamedGraph::Grid(r, c) => grid(r, c),
        NamedGraph::Hypercube(d) => {
            if d > 20 {
                return Err(Error::domain("hypercube dimension above 20"));
            }
            hypercube(d)
        }
        NamedGraph::Petersen => petersen(),
        NamedGraph::Octahedron => octahedron(),
        NamedGraph::RandomGnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::domain("edge probability must lie in [0, 1]"));
            }
            random_gnp(n, p, seed)
        }
        NamedGraph::RandomRegular { n, d } => random_regular(n, d, seed)?,
        NamedGraph::ErdosGirthStub { n, girth: g } => {
            if g < 3 {
                return Err(Error::domain("girth must be at least 3"));
            }
            erdos_girth_stub(n, g, seed)
        }
    })
}

/// True when `g` is bipartite. Shorthand used across tests and reports.
pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).label().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;

    #[test]
    fn counts() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3, 4).edge_count(), 12);
        assert_eq!(grid(3, 4).edge_count(), 17);
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(octahedron().edge_count(), 12);
        let q3 = hypercube(3);
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
    }

    #[test]
    fn cycle_six() {
        let c = generate(&NamedGraph::parse("cycle", &["6".into()]).unwrap(), 0).unwrap();
        assert_eq!(c, cycle(6));
    }

    #[test]
    fn random_families_are_deterministic() {
        assert_eq!(random_gnp(20, 0.3, 7), random_gnp(20, 0.3, 7));
        assert_ne!(random_gnp(20, 0.3, 7), random_gnp(20, 0.3, 8));
        let r = random_regular(12, 3, 5).unwrap();
        assert_eq!(r, random_regular(12, 3, 5).unwrap());
        assert!((0..12).all(|v| r.degree(v) == 3));
        assert_eq!(erdos_girth_stub(30, 5, 1), erdos_girth_stub(30, 5, 1));
    }

    #[test]
    fn girth_stub_respects_girth() {
        for seed in 0..5 {
            let g = erdos_girth_stub(25, 5, seed);
            assert!(girth(&g).map_or(true, |x| x >= 5));
        }
    }

    #[test]
    fn random_connected_bipartite_is_both() {
        for seed in 0..20 {
            let g = random_connected_bipartite(4, 5, 0.3, seed);
            assert!(g.is_connected() && is_bipartite(&g));
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(NamedGraph::parse("cycle", &[]).is_err());
        assert!(NamedGraph::parse("blob", &["1".into(), "2".into()]).is_err());
        assert!(generate(&NamedGraph::Cycle(2), 0).is_err());
        assert!(random_regular(5, 3, 0).is_err());
        assert!(generate(&NamedGraph::RandomGnp { n: 3, p: 1.5 }, 0).is_err());
    }
}
