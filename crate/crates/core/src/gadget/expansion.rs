//! Vertex expansions: small connected sets of bounded radius around a vertex.

use std::collections::VecDeque;

use serde::Serialize;

use crate::connect::{low_diameter_core, shortest_connection, CoreParams};
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, girth, mark, Graph, UNREACHABLE};
use crate::outcome::Outcome;

/// A `(D, m)`-expansion of `center`: `|vertices| = D`, `G[vertices]` is
/// connected and every vertex lies within distance `m` of the center inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexExpansion {
    pub center: usize,
    /// Sorted; contains the center.
    pub vertices: Vec<usize>,
    pub radius_bound: usize,
}

impl VertexExpansion {
    /// The bare vertex, a `(1, 0)`-expansion.
    pub fn bare(v: usize) -> Self {
        VertexExpansion { center: v, vertices: vec![v], radius_bound: 0 }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Eccentricity of the center inside `G[F]`, `None` when disconnected.
    pub fn radius_in(&self, g: &Graph) -> Option<usize> {
        let dist = distances_inside(g, &self.vertices, self.center);
        self.vertices.iter().map(|&v| dist[v]).try_fold(0, |acc, d| (d != UNREACHABLE).then(|| acc.max(d)))
    }

    /// Checks the expansion invariants against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n()) {
            return Err(format!("vertex {v} outside the graph"));
        }
        if self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err("vertex list not strictly increasing".into());
        }
        if !self.contains(self.center) {
            return Err(format!("center {} not in its expansion", self.center));
        }
        match self.radius_in(g) {
            None => Err(format!("expansion of {} is disconnected", self.center)),
            Some(r) if r > self.radius_bound => {
                Err(format!("expansion of {} has radius {r} > {}", self.center, self.radius_bound))
            }
            Some(_) => Ok(()),
        }
    }
}

/// BFS distances from `source` inside `G[set]`.
pub(crate) fn distances_inside(g: &Graph, set: &[usize], source: usize) -> Vec<usize> {
    let mut outside = vec![true; g.n()];
    for &v in set {
        outside[v] = false;
    }
    bfs_distances(g, &[source], Some(&outside))
}

/// Shrinks `f` to `d_new` vertices by repeatedly deleting a vertex farthest
/// from the center (largest id on ties). Distances of the survivors are
/// unchanged, so the radius bound carries over.
pub fn trim_expansion(g: &Graph, f: &VertexExpansion, d_new: usize) -> Result<VertexExpansion> {
    if d_new == 0 || d_new > f.size() {
        return Err(Error::domain(format!("trim size {d_new} outside 1..={}", f.size())));
    }
    g.check_vertices(&f.vertices)?;
    let dist = distances_inside(g, &f.vertices, f.center);
    let mut order = f.vertices.clone();
    order.sort_by_key(|&v| (dist[v], v));
    order.truncate(d_new);
    order.sort_unstable();
    Ok(VertexExpansion { center: f.center, vertices: order, radius_bound: f.radius_bound })
}

fn check_cycle(g: &Graph, c: &[usize]) -> Result<()> {
    g.check_vertices(c)?;
    let k = c.len();
    let mut seen = mark(g.n(), &[]);
    for &v in c {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::domain(format!("cycle repeats vertex {v}")));
        }
    }
    if k < 3 || (0..k).any(|i| !g.has_edge(c[i], c[(i + 1) % k])) {
        return Err(Error::domain("C is not a cycle of G"));
    }
    if g.n() <= 400 && girth(g) != Some(k) {
        return Err(Error::domain(format!("C has length {k} but G has girth {:?}", girth(g))));
    }
    Ok(())
}

/// Disjoint expansions around each `xs[i]` with sizes `ds[i][j]`.
///
/// Every requested expansion grows by BFS from its center; in each round the
/// unfinished ones claim one new vertex each, larger sizes first. Vertices
/// of `C`, the other centers and `avoid` are never claimed, and no vertex
/// is claimed twice. Expansions sharing a center meet only there.
pub fn find_vertex_expansions(
    g: &Graph,
    c: Option<&[usize]>,
    xs: &[usize],
    ds: &[Vec<usize>],
    m: usize,
    avoid: &[usize],
) -> Result<Outcome<Vec<Vec<VertexExpansion>>>> {
    g.check_vertices(xs)?;
    g.check_vertices(avoid)?;
    if ds.len() != xs.len() {
        return Err(Error::domain("one size list per center is required"));
    }
    if ds.iter().flatten().any(|&d| d == 0) {
        return Err(Error::domain("expansion sizes must be at least 1"));
    }
    let mut forbidden = mark(g.n(), xs);
    if forbidden.iter().filter(|&&b| b).count() != xs.len() {
        return Err(Error::domain("centers must be distinct"));
    }
    if let Some(c) = c {
        check_cycle(g, c)?;
        for &v in c {
            forbidden[v] = true;
        }
    }
    let blocked = mark(g.n(), avoid);
    if let Some(&x) = xs.iter().find(|&&x| blocked[x]) {
        return Ok(Outcome::NotFound(format!("center {x} lies in the avoided set")));
    }
    for (v, b) in forbidden.iter_mut().enumerate() {
        *b |= blocked[v];
    }
    Ok(claim(g, xs, ds, m, forbidden))
}

struct Job {
    i: usize,
    j: usize,
    want: usize,
    vertices: Vec<usize>,
    queue: VecDeque<(usize, usize)>,
}

/// Round-robin BFS claiming; `taken` marks vertices no job may claim.
fn claim(g: &Graph, xs: &[usize], ds: &[Vec<usize>], m: usize, mut taken: Vec<bool>) -> Outcome<Vec<Vec<VertexExpansion>>> {
    let mut jobs: Vec<Job> = Vec::new();
    for (i, row) in ds.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let queue = g.neighbors(xs[i]).iter().map(|&w| (w, 1)).collect();
            jobs.push(Job { i, j, want, vertices: vec![xs[i]], queue });
        }
    }
    jobs.sort_by_key(|job| (std::cmp::Reverse(job.want), job.i, job.j));
    loop {
        let mut active = false;
        for job in jobs.iter_mut().filter(|job| job.vertices.len() < job.want) {
            active = true;
            let mut blocker = None;
            let mut claimed = false;
            while let Some((v, depth)) = job.queue.pop_front() {
                if taken[v] || depth > m || job.vertices.contains(&v) {
                    if v != xs[job.i] {
                        blocker.get_or_insert(v);
                    }
                    continue;
                }
                taken[v] = true;
                job.vertices.push(v);
                job.queue.extend(g.neighbors(v).iter().map(|&w| (w, depth + 1)));
                claimed = true;
                break;
            }
            if !claimed {
                let why = blocker.map_or("no unclaimed vertex nearby".to_string(), |b| format!("blocked at vertex {b}"));
                return Outcome::NotFound(format!(
                    "expansion {} of center {} stalled at size {} of {}: {why}",
                    job.j,
                    xs[job.i],
                    job.vertices.len(),
                    job.want
                ));
            }
        }
        if !active {
            break;
        }
    }
    let mut out: Vec<Vec<VertexExpansion>> = ds.iter().map(|row| Vec::with_capacity(row.len())).collect();
    jobs.sort_by_key(|job| (job.i, job.j));
    for mut job in jobs {
        job.vertices.sort_unstable();
        out[job.i].push(VertexExpansion { center: xs[job.i], vertices: job.vertices, radius_bound: m });
    }
    Outcome::Found(out)
}

pub(crate) fn check_disjoint(g: &Graph, sets: &[&[usize]]) -> Result<()> {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, s) in sets.iter().enumerate() {
        g.check_vertices(s)?;
        for &v in s.iter() {
            if owner[v] != usize::MAX && owner[v] != i {
                return Err(Error::domain(format!("vertex {v} lies in two sets that must be disjoint")));
            }
            owner[v] = i;
        }
    }
    Ok(())
}

/// Grows each expansion to `target` vertices with radius at most `3m`.
///
/// An expansion below target is joined to a low-diameter pool found in the
/// rest of the graph by a shortest trunk path, and the union is trimmed back
/// to `target`. Expansions already at or above target are only trimmed.
pub fn enlarge_expansions(
    g: &Graph,
    a_avoid: &[usize],
    expansions: &[VertexExpansion],
    target: usize,
    m: usize,
) -> Result<Outcome<Vec<VertexExpansion>>> {
    let mut sets: Vec<&[usize]> = expansions.iter().map(|f| f.vertices.as_slice()).collect();
    sets.push(a_avoid);
    check_disjoint(g, &sets)?;
    if target == 0 {
        return Err(Error::domain("target size must be at least 1"));
    }
    if expansions.len() * target > g.n() {
        return Ok(Outcome::NotFound(format!(
            "{} disjoint expansions of size {target} need more than {} vertices",
            expansions.len(),
            g.n()
        )));
    }
    let mut current: Vec<VertexExpansion> = expansions.to_vec();
    for idx in 0..current.len() {
        let f = &current[idx];
        if f.size() >= target {
            current[idx] = trim_expansion(g, f, target)?;
            continue;
        }
        let mut others: Vec<usize> = a_avoid.to_vec();
        for (j, h) in current.iter().enumerate() {
            if j != idx {
                others.extend_from_slice(&h.vertices);
            }
        }
        let mut w = others.clone();
        w.extend_from_slice(&f.vertices);
        let params = CoreParams { target: Some(target - f.size()), ..CoreParams::default() };
        let pool = match low_diameter_core(g, &w, &params)? {
            Outcome::Found(core) => core.vertices,
            other => {
                return Ok(Outcome::NotFound(format!(
                    "no pool for the expansion of {}: {}",
                    f.center,
                    other.verdict()
                )))
            }
        };
        let in_f = mark(g.n(), &f.vertices);
        let in_pool = mark(g.n(), &pool);
        let blocked = mark(g.n(), &others);
        let Some(trunk) = shortest_connection(g, &in_f, &in_pool, &blocked) else {
            return Ok(Outcome::NotFound(format!("no trunk from the expansion of {} to its pool", f.center)));
        };
        let mut union: Vec<usize> = f.vertices.iter().chain(trunk.vertices()).chain(&pool).copied().collect();
        union.sort_unstable();
        union.dedup();
        let grown = VertexExpansion { center: f.center, vertices: union, radius_bound: 3 * m };
        let trimmed = trim_expansion(g, &grown, target)?;
        if trimmed.radius_in(g).is_none_or(|r| r > 3 * m) {
            return Ok(Outcome::NotFound(format!(
                "enlarged expansion of {} exceeds radius {}",
                f.center,
                3 * m
            )));
        }
        current[idx] = trimmed;
    }
    Ok(Outcome::Found(current))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn trim_star_and_path() {
        let star = generators::complete_bipartite(1, 5);
        let f = VertexExpansion { center: 0, vertices: (0..6).collect(), radius_bound: 1 };
        let t = trim_expansion(&star, &f, 3).unwrap();
        assert_eq!(t.vertices, vec![0, 1, 2]);
        assert!(t.validate(&star).is_ok());
        assert_eq!(trim_expansion(&star, &f, 6).unwrap(), f);
        let p = generators::path(3);
        let f = VertexExpansion { center: 0, vertices: vec![0, 1, 2], radius_bound: 2 };
        assert_eq!(trim_expansion(&p, &f, 2).unwrap().vertices, vec![0, 1]);
        assert!(trim_expansion(&p, &f, 0).is_err());
        assert!(trim_expansion(&p, &f, 4).is_err());
    }

    #[test]
    fn stars_in_complete_bipartite() {
        let g = generators::complete_bipartite(8, 8);
        let c = [0, 8, 1, 9];
        let out = find_vertex_expansions(&g, Some(&c), &[2, 10], &[vec![3], vec![3]], 1, &[]).unwrap();
        let exps = out.found().unwrap();
        let (a, b) = (&exps[0][0], &exps[1][0]);
        assert_eq!((a.size(), b.size()), (3, 3));
        assert!(a.validate(&g).is_ok() && b.validate(&g).is_ok());
        assert!(a.vertices.iter().all(|v| !b.contains(*v) && !c.contains(v)));
    }

    #[test]
    fn unit_sizes_are_centers() {
        let g = generators::cycle(8);
        let out = find_vertex_expansions(&g, None, &[0, 4], &[vec![1], vec![1]], 0, &[]).unwrap();
        let exps = out.found().unwrap();
        assert_eq!(exps[0][0].vertices, vec![0]);
        assert_eq!(exps[1][0].vertices, vec![4]);
    }

    #[test]
    fn path_too_short() {
        let g = generators::path(6);
        let out = find_vertex_expansions(&g, None, &[1, 4], &[vec![5], vec![5]], 5, &[]).unwrap();
        assert!(out.is_not_found());
    }

    #[test]
    fn rejects_non_shortest_cycle() {
        let g = generators::complete_bipartite(3, 3);
        let c = [0, 3, 1, 4, 2, 5];
        assert!(find_vertex_expansions(&g, Some(&c), &[0], &[vec![1]], 1, &[]).is_err());
    }

    #[test]
    fn enlarge_in_complete_bipartite() {
        let g = generators::complete_bipartite(40, 40);
        let out = find_vertex_expansions(&g, None, &[0, 40], &[vec![5], vec![5]], 1, &[]).unwrap();
        let exps: Vec<_> = out.found().unwrap().into_iter().flatten().collect();
        let big = enlarge_expansions(&g, &[], &exps, 20, 2).unwrap().found().unwrap();
        assert_eq!(big.len(), 2);
        for f in &big {
            assert_eq!(f.size(), 20);
            assert!(f.validate(&g).is_ok());
        }
        assert!(big[0].vertices.iter().all(|&v| !big[1].contains(v)));
        let small = enlarge_expansions(&g, &[], &exps, 3, 2).unwrap().found().unwrap();
        assert!(small.iter().all(|f| f.size() == 3));
        let four: Vec<_> = (0..4).map(VertexExpansion::bare).collect();
        assert!(enlarge_expansions(&g, &[], &four, 21, 2).unwrap().is_not_found());
    }
}
