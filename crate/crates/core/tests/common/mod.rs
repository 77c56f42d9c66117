//! Brute-force oracles and test corpora.
//!
//! Nothing here calls the library's search code: every oracle works from
//! `neighbors` and `has_edge` alone.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclespan_core::generators;
use cyclespan_core::Graph;

/// Every cycle length, by DFS from each start through larger ids only.
pub fn naive_cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    fn dfs(g: &Graph, s: usize, cur: usize, depth: usize, on: &mut [bool], out: &mut BTreeSet<usize>) {
        for &w in g.neighbors(cur) {
            if w == s && depth >= 3 {
                out.insert(depth);
            } else if w > s && !on[w] {
                on[w] = true;
                dfs(g, s, w, depth + 1, on, out);
                on[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        on[s] = true;
        dfs(g, s, s, 1, &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Calls `f` on every simple `u,v`-path avoiding `avoid`, as a vertex list.
pub fn for_each_path(g: &Graph, u: usize, v: usize, avoid: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn dfs(g: &Graph, v: usize, stack: &mut Vec<usize>, on: &mut [bool], f: &mut dyn FnMut(&[usize])) {
        let cur = *stack.last().unwrap();
        if cur == v {
            f(stack);
            return;
        }
        for &w in g.neighbors(cur) {
            if !on[w] {
                on[w] = true;
                stack.push(w);
                dfs(g, v, stack, on, f);
                stack.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.n()];
    for &a in avoid {
        on[a] = true;
    }
    if on[u] || on[v] {
        return;
    }
    on[u] = true;
    let mut stack = vec![u];
    dfs(g, v, &mut stack, &mut on, f);
}

/// Lengths (edge counts) of all simple `u,v`-paths.
pub fn path_lengths(g: &Graph, u: usize, v: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for_each_path(g, u, v, &[], &mut |p| {
        out.insert(p.len() - 1);
    });
    out
}

/// All simple `u,v`-paths of exactly `len` edges avoiding `avoid`.
pub fn paths_of_length(g: &Graph, u: usize, v: usize, len: usize, avoid: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_path(g, u, v, avoid, &mut |p| {
        if p.len() == len + 1 {
            out.push(p.to_vec());
        }
    });
    out
}

/// True when some triple of vertices is joined pairwise by internally
/// disjoint paths of length `ell` avoiding the third branch vertex.
pub fn naive_tk3(g: &Graph, ell: usize) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let ab = paths_of_length(g, a, b, ell, &[c]);
                if ab.is_empty() {
                    continue;
                }
                let ac = paths_of_length(g, a, c, ell, &[b]);
                let bc = paths_of_length(g, b, c, ell, &[a]);
                let inner = |p: &Vec<usize>| -> BTreeSet<usize> { p[1..p.len() - 1].iter().copied().collect() };
                for p in &ab {
                    let ip = inner(p);
                    for q in &ac {
                        let iq = inner(q);
                        if !ip.is_disjoint(&iq) {
                            continue;
                        }
                        if bc.iter().any(|r| {
                            let ir = inner(r);
                            ir.is_disjoint(&ip) && ir.is_disjoint(&iq)
                        }) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// `|N(X)|` by scanning every edge.
pub fn naive_boundary(g: &Graph, x: &[usize]) -> usize {
    let inside: BTreeSet<usize> = x.iter().copied().collect();
    let mut out = BTreeSet::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            if inside.contains(&u) && !inside.contains(&v) {
                out.insert(v);
            }
        }
    }
    out.len()
}

/// Independent subset oracle for the expander predicate: `true` when every
/// `X` with `k/2 ≤ |X| ≤ n/2` has `|N(X)| ≥ ε(|X|)·|X| − tol`.
pub fn naive_is_expander(g: &Graph, eps1: f64, k: f64, tol: f64) -> bool {
    let n = g.n();
    let eps = |x: f64| if x < k / 5.0 { 0.0 } else { eps1 / (15.0 * x / k).ln().powi(2) };
    let lo = ((k / 2.0).ceil() as usize).max(1);
    for mask in 1u64..(1u64 << n) {
        let s = mask.count_ones() as usize;
        if s < lo || s > n / 2 {
            continue;
        }
        let x: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if (naive_boundary(g, &x) as f64) < eps(s as f64) * s as f64 - tol {
            return false;
        }
    }
    true
}

/// Distance from `a` to `b` in `G − W` by boolean matrix powers.
pub fn matrix_distance(g: &Graph, a: &[usize], b: &[usize], w: &[usize]) -> Option<usize> {
    let n = g.n();
    let blocked: BTreeSet<usize> = w.iter().copied().collect();
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            adj[u][v] = g.has_edge(u, v) && !blocked.contains(&u) && !blocked.contains(&v);
        }
    }
    let mut reach = vec![false; n];
    for &s in a {
        if !blocked.contains(&s) {
            reach[s] = true;
        }
    }
    for d in 0..=n {
        if b.iter().any(|&t| reach[t]) {
            return Some(d);
        }
        let next: Vec<bool> = (0..n).map(|v| reach[v] || (0..n).any(|u| reach[u] && adj[u][v])).collect();
        if next == reach {
            return None;
        }
        reach = next;
    }
    None
}

/// `H_d`, by plain summation in a fixed order.
pub fn harmonic_number(d: usize) -> f64 {
    (1..=d).map(|i| 1.0 / i as f64).sum()
}

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Two-colouring by DFS, or `None` on an odd cycle.
pub fn two_colouring(g: &Graph) -> Option<Vec<u8>> {
    let mut col = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if col[s] != u8::MAX {
            continue;
        }
        col[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if col[w] == u8::MAX {
                    col[w] = col[u] ^ 1;
                    stack.push(w);
                } else if col[w] == col[u] {
                    return None;
                }
            }
        }
    }
    Some(col)
}

/// Named graphs with at most 12 vertices.
pub fn named_small() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=7 {
        out.push((format!("K{n}"), generators::complete(n)));
    }
    for (a, b) in [(1, 3), (2, 2), (2, 3), (3, 3), (2, 5), (3, 4), (4, 4), (3, 6), (5, 5), (4, 6)] {
        out.push((format!("K{a},{b}"), generators::complete_bipartite(a, b)));
    }
    for n in [3, 4, 5, 6, 7, 8, 10, 12] {
        out.push((format!("C{n}"), generators::cycle(n)));
    }
    for n in [2, 5, 9] {
        out.push((format!("P{n}"), generators::path(n)));
    }
    for (r, c) in [(2, 3), (2, 4), (3, 3), (3, 4), (2, 6)] {
        out.push((format!("grid{r}x{c}"), generators::grid(r, c)));
    }
    out.push(("Q2".into(), generators::hypercube(2)));
    out.push(("Q3".into(), generators::hypercube(3)));
    out.push(("petersen".into(), generators::petersen()));
    out.push(("octahedron".into(), generators::octahedron()));
    out
}

/// Seeded random connected graphs on 4..=7 vertices.
pub fn random_small(count: usize, seed: u64) -> Vec<(String, Graph)> {
    (0..count)
        .map(|i| {
            let n = 4 + i % 4;
            let p = [0.3, 0.45, 0.6][i % 3];
            let s = seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
            (format!("rc{n}-{s}"), generators::random_connected(n, p, s))
        })
        .collect()
}

/// The 60-graph spectrum corpus: named graphs plus random connected ones.
pub fn spectrum_corpus() -> Vec<(String, Graph)> {
    let mut out = named_small();
    let extra = 60 - out.len();
    out.extend(random_small(extra, 11));
    out
}

/// Every vertex of `w` joined to every other, and each `u` to `d`-plus random
/// vertices of `w`, plus random edges inside `u`.
pub fn skewed_instance(w: usize, d: usize, seed: u64) -> (Graph, Vec<usize>, Vec<usize>) {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let ws: Vec<usize> = (0..w).collect();
    let us: Vec<usize> = (w..w + w * w).collect();
    let mut edges = Vec::new();
    for &u in &us {
        let extra = rng.gen_range(0..=w - d);
        for &x in ws.choose_multiple(&mut rng, d + extra) {
            edges.push((x, u));
        }
    }
    for i in 0..us.len() {
        for j in i + 1..us.len() {
            if rng.gen_bool(0.05) {
                edges.push((us[i], us[j]));
            }
        }
    }
    (Graph::from_edges(w + w * w, &edges).unwrap(), us, ws)
}

/// Proptest strategy: a graph on `min_n..=max_n` vertices, each pair an edge
/// with probability `p`.
pub fn arb_graph(min_n: usize, max_n: usize, p: f64) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (min_n..=max_n)
        .prop_flat_map(move |n| (Just(n), proptest::collection::vec(proptest::bool::weighted(p), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
}

/// Proptest strategy: a connected bipartite graph with sides in `1..=max_side`.
pub fn arb_connected_bipartite(max_side: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (1..=max_side, 1..=max_side, 0.2f64..0.8, any::<u64>())
        .prop_map(|(a, b, p, seed)| generators::random_connected_bipartite(a, b, p, seed))
}
