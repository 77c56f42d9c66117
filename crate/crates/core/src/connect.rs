//! Avoidant ball growth, short connections around forbidden sets and
//! low-diameter cores.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expander::ExpansionParams;
use crate::graph::{bfs_bounded, mark, Graph, Path, UNREACHABLE};
use crate::outcome::Outcome;
use crate::regime::{growth_radius, short_depth, RegimeFlags};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContactProfile {
    /// Entry `i − 1` is `|N(B^{i−1}_{G−Z}(A)) ∩ Z|`.
    pub per_level: Vec<usize>,
    /// Least `k` with `per_level[i − 1] ≤ k·i` for every recorded level.
    pub k_limited: usize,
}

pub fn contact_profile(g: &Graph, a: &[usize], z: &[usize], depth: usize) -> Result<ContactProfile> {
    g.check_vertices(a)?;
    g.check_vertices(z)?;
    let in_z = mark(g.n(), z);
    if let Some(&v) = a.iter().find(|&&v| in_z[v]) {
        return Err(Error::domain(format!("vertex {v} lies in both A and Z")));
    }
    let dist = bfs_bounded(g, a, Some(&in_z), UNREACHABLE);
    // A vertex of Z first touches the ball at level (nearest neighbour distance) + 1.
    let mut first_touch = vec![0usize; depth + 1];
    for &v in z {
        let near = g.neighbors(v).iter().map(|&w| dist[w]).filter(|&d| d != UNREACHABLE).min();
        if let Some(d) = near {
            if d < depth {
                first_touch[d + 1] += 1;
            }
        }
    }
    let mut per_level = Vec::with_capacity(depth);
    let mut running = 0;
    for touched in first_touch.iter().skip(1) {
        running += touched;
        per_level.push(running);
    }
    let k_limited = per_level
        .iter()
        .enumerate()
        .map(|(i, &c)| c.div_ceil(i + 1))
        .max()
        .unwrap_or(0);
    Ok(ContactProfile { per_level, k_limited })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HaltReason {
    ReachedHalfN,
    DepthExhausted,
    Stalled,
}

/// Caller-supplied context for the ball-growth diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct GrowthHypotheses {
    pub params: ExpansionParams,
    /// Whether the caller holds an expansion certificate for the host.
    pub expander_certified: bool,
    /// The contact constant `k` of the limited-contact hypothesis.
    pub contact_k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthDiagnostics {
    pub m: f64,
    pub l0: f64,
    pub hypotheses: RegimeFlags,
    pub hypotheses_held: bool,
    /// `|B^{ℓ₀}| > m^{400k}`, compared in log space.
    pub conclusion_short: bool,
    /// `|B^{⌊m⌋}| > n/2`.
    pub conclusion_long: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthTrace {
    /// `|B^i_{G−X−Y−Z}(A)|` for `i = 0..=halted_at`.
    pub levels: Vec<usize>,
    pub halted_at: usize,
    pub reason: HaltReason,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<GrowthDiagnostics>,
}

/// Grows the ball around `A` in `G − X − Y − Z` level by level. Seeds that
/// lie in a forbidden set are dropped.
pub fn grow_avoiding(
    g: &Graph,
    a: &[usize],
    x: &[usize],
    y: &[usize],
    z: &[usize],
    max_depth: usize,
    hypotheses: Option<&GrowthHypotheses>,
) -> Result<GrowthTrace> {
    for s in [a, x, y, z] {
        g.check_vertices(s)?;
    }
    let mut blocked = mark(g.n(), x);
    for &v in y.iter().chain(z) {
        blocked[v] = true;
    }
    let seeds: Vec<usize> = a.iter().copied().filter(|&v| !blocked[v]).collect();
    let depth = max_depth.min(g.n());
    let dist = bfs_bounded(g, &seeds, Some(&blocked), depth);
    let mut counts = vec![0usize; depth + 1];
    for &d in &dist {
        if d != UNREACHABLE {
            counts[d] += 1;
        }
    }
    let half = g.n() / 2;
    let mut levels = Vec::new();
    let mut size = 0;
    let mut reason = HaltReason::DepthExhausted;
    for (i, &c) in counts.iter().enumerate() {
        if i > 0 && c == 0 {
            reason = HaltReason::Stalled;
            break;
        }
        size += c;
        levels.push(size);
        if size > half {
            reason = HaltReason::ReachedHalfN;
            break;
        }
    }
    if seeds.is_empty() {
        reason = HaltReason::Stalled;
    }
    let halted_at = levels.len() - 1;
    let diagnostics = hypotheses.map(|h| growth_diagnostics(g, &seeds, x, y, z, &blocked, h));
    Ok(GrowthTrace { levels, halted_at, reason, diagnostics })
}

fn growth_diagnostics(
    g: &Graph,
    a: &[usize],
    x: &[usize],
    y: &[usize],
    z: &[usize],
    blocked_xyz: &[bool],
    h: &GrowthHypotheses,
) -> GrowthDiagnostics {
    let n = g.n();
    let p = &h.params;
    let m = growth_radius(n, p.eps1);
    let l0 = short_depth(n);
    let l0_depth = l0.floor() as usize;
    let mut flags = RegimeFlags::new();
    flags.set("expander_certified", h.expander_certified);
    flags.set("seed_at_least_half_k", a.len() as f64 >= p.k / 2.0);
    flags.set("x_small", x.len() as f64 <= a.len() as f64 * p.epsilon(a.len() as f64) / 4.0);
    let mut blocked_xz = mark(n, x);
    for &v in z {
        blocked_xz[v] = true;
    }
    let near = bfs_bounded(g, a, Some(&blocked_xz), l0_depth);
    let y_far = y.iter().all(|&v| near[v] == UNREACHABLE);
    let y_log_ok = y.is_empty() || (y.len() as f64).ln() <= 300.0 * h.contact_k as f64 * m.max(1.0).ln();
    flags.set("y_outside_short_ball", y_far);
    flags.set("y_count_bounded", y_log_ok);
    let contact = contact_profile(g, a, z, n).map(|c| c.k_limited <= h.contact_k).unwrap_or(false);
    flags.set("z_limited_contact", contact);
    let held = flags.iter().all(|(_, v)| v);

    let short = bfs_bounded(g, a, Some(blocked_xyz), l0_depth).iter().filter(|&&d| d != UNREACHABLE).count();
    let conclusion_short =
        short > 0 && (short as f64).ln() > 400.0 * h.contact_k as f64 * m.max(1.0).ln();
    let long_depth = if m.is_finite() { m.floor() as usize } else { n };
    let long = bfs_bounded(g, a, Some(blocked_xyz), long_depth.min(n)).iter().filter(|&&d| d != UNREACHABLE).count();
    GrowthDiagnostics {
        m,
        l0,
        hypotheses: flags,
        hypotheses_held: held,
        conclusion_short,
        conclusion_long: 2 * long > n,
    }
}

/// `(40/ε₁)·ln³n`, the length bound for avoidant connections.
pub fn connect_length_bound(n: usize, eps1: f64) -> f64 {
    40.0 / eps1 * crate::regime::ln_pow(n as f64, 3)
}

/// A shortest path from `A` to `B` in `G − W` whose interior avoids `A ∪ B`;
/// among shortest paths, the lexicographically least vertex sequence.
pub fn connect_avoiding(g: &Graph, a: &[usize], b: &[usize], w: &[usize]) -> Result<Outcome<Path>> {
    for s in [a, b, w] {
        g.check_vertices(s)?;
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::domain("A and B must be non-empty"));
    }
    let in_a = mark(g.n(), a);
    let in_b = mark(g.n(), b);
    let blocked = mark(g.n(), w);
    if let Some(&v) = b.iter().find(|&&v| in_a[v]) {
        return Err(Error::domain(format!("vertex {v} lies in both A and B")));
    }
    if let Some(&v) = w.iter().find(|&&v| in_a[v] || in_b[v]) {
        return Err(Error::domain(format!("forbidden vertex {v} lies in A or B")));
    }
    Ok(match shortest_connection(g, &in_a, &in_b, &blocked) {
        Some(p) => Outcome::Found(p),
        None => Outcome::NotFound("W separates A from B".into()),
    })
}

/// Core of [`connect_avoiding`] on indicator vectors, without validation.
/// `A` and `B` must be disjoint and unblocked.
pub(crate) fn shortest_connection(g: &Graph, in_a: &[bool], in_b: &[bool], blocked: &[bool]) -> Option<Path> {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..n {
        if in_b[v] {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    let mut best_a: Option<(usize, usize)> = None;
    while let Some(u) = queue.pop_front() {
        if best_a.is_some_and(|(d, _)| dist[u] + 1 > d) {
            break;
        }
        for &w in g.neighbors(u) {
            if blocked[w] || dist[w] != UNREACHABLE {
                continue;
            }
            if in_a[w] {
                let d = dist[u] + 1;
                dist[w] = d;
                if best_a.map_or(true, |(bd, bv)| (d, w) < (bd, bv)) {
                    best_a = Some((d, w));
                }
            } else if !in_b[w] {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let (len, start) = best_a?;
    let mut path = vec![start];
    let mut cur = start;
    for step in (0..len).rev() {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| !blocked[w] && !in_a[w] && dist[w] == step && (step == 0) == in_b[w])
            .min()
            .expect("BFS layer has a predecessor");
        path.push(next);
        cur = next;
    }
    Some(Path::new(path))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowDiameterCore {
    /// `B^r(center)` in `G − W`, sorted.
    pub vertices: Vec<usize>,
    pub center: usize,
    pub radius: usize,
    pub rounds: usize,
    /// `2m = (100/ε₁)·ln³n`, when `ε₁` was supplied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_bound: Option<f64>,
}

#[derive(Debug, Clone, Copy)]
pub struct CoreParams {
    /// Least core size; `⌈n/25⌉` when `None`.
    pub target: Option<usize>,
    /// Radius increment per refinement round.
    pub step: usize,
    /// Largest radius tried; `n` when `None`.
    pub max_radius: Option<usize>,
    pub eps1: Option<f64>,
}

impl Default for CoreParams {
    fn default() -> Self {
        CoreParams { target: None, step: 1, max_radius: None, eps1: None }
    }
}

/// Refinement loop for a large ball of small radius in `G − W`.
///
/// Starts from every vertex of `G − W` as a candidate center. Each round
/// grows the radius by `step` and keeps the `⌈|V|/12⌉` candidates with the
/// largest balls (smallest id on ties), provided their balls still cover the
/// target together. Ends when one candidate is left and its ball is large
/// enough.
pub fn low_diameter_core(g: &Graph, w: &[usize], params: &CoreParams) -> Result<Outcome<LowDiameterCore>> {
    g.check_vertices(w)?;
    let blocked = mark(g.n(), w);
    let target = params.target.unwrap_or(g.n().div_ceil(25)).max(1);
    let step = params.step.max(1);
    let max_radius = params.max_radius.unwrap_or(g.n());
    let radius_bound = params.eps1.map(|e| 100.0 / e * crate::regime::ln_pow(g.n() as f64, 3));
    let mut cands: Vec<usize> = (0..g.n()).filter(|&v| !blocked[v]).collect();
    if cands.len() < target {
        return Ok(Outcome::NotFound(format!("only {} vertices outside W", cands.len())));
    }
    let ball_of = |v: usize, r: usize| -> Vec<usize> {
        let d = bfs_bounded(g, &[v], Some(&blocked), r);
        (0..g.n()).filter(|&u| d[u] != UNREACHABLE).collect()
    };
    let mut radius = 0;
    let mut rounds = 0;
    let mut prev_sizes: Option<Vec<usize>> = None;
    loop {
        if cands.len() == 1 {
            let ball = ball_of(cands[0], radius);
            if ball.len() >= target {
                return Ok(Outcome::Found(LowDiameterCore {
                    vertices: ball,
                    center: cands[0],
                    radius,
                    rounds,
                    radius_bound,
                }));
            }
        }
        if radius + step > max_radius {
            return Ok(Outcome::NotFound(format!("no core of size {target} within radius {max_radius}")));
        }
        radius += step;
        rounds += 1;
        let mut ranked: Vec<(usize, usize)> = cands.iter().map(|&v| (ball_of(v, radius).len(), v)).collect();
        let sizes: Vec<usize> = ranked.iter().map(|r| r.0).collect();
        ranked.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let keep: Vec<usize> = ranked.iter().take(cands.len().div_ceil(12)).map(|r| r.1).collect();
        let cover = bfs_bounded(g, &keep, Some(&blocked), radius).iter().filter(|&&d| d != UNREACHABLE).count();
        let refined = cover >= target && keep.len() < cands.len();
        if refined {
            cands = keep;
            cands.sort_unstable();
            prev_sizes = None;
        } else {
            if prev_sizes.as_ref() == Some(&sizes) {
                return Ok(Outcome::NotFound(format!("ball growth stalled at radius {radius}")));
            }
            prev_sizes = Some(sizes);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn contact_on_path() {
        let g = generators::path(4);
        let c = contact_profile(&g, &[0], &[3], 3).unwrap();
        assert_eq!(c.per_level, vec![0, 0, 1]);
        assert_eq!(c.k_limited, 1);
        let c = contact_profile(&g, &[0], &[], 3).unwrap();
        assert_eq!((c.per_level, c.k_limited), (vec![0, 0, 0], 0));
        assert!(contact_profile(&g, &[0], &[0], 3).is_err());
    }

    #[test]
    fn contact_on_star() {
        let g = generators::complete_bipartite(1, 5);
        let z: Vec<usize> = (1..6).collect();
        let c = contact_profile(&g, &[0], &z, 2).unwrap();
        assert_eq!(c.per_level[0], 5);
        assert_eq!(c.k_limited, 5);
    }

    #[test]
    fn growth_examples() {
        let g = generators::complete_bipartite(8, 8);
        let t = grow_avoiding(&g, &[0, 1, 2, 3], &[], &[], &[], 2, None).unwrap();
        assert_eq!(t.levels, vec![4, 12]);
        assert_eq!(t.reason, HaltReason::ReachedHalfN);
        let all: Vec<usize> = (0..16).collect();
        let t = grow_avoiding(&g, &all, &[], &[], &[], 5, None).unwrap();
        assert_eq!((t.halted_at, t.reason), (0, HaltReason::ReachedHalfN));
        let two = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4), (4, 5)]).unwrap();
        let t = grow_avoiding(&two, &[0], &[], &[], &[], 5, None).unwrap();
        assert_eq!(t.reason, HaltReason::Stalled);
        let t = grow_avoiding(&generators::path(10), &[0], &[], &[], &[], 2, None).unwrap();
        assert_eq!((t.levels.clone(), t.reason), (vec![1, 2, 3], HaltReason::DepthExhausted));
    }

    #[test]
    fn growth_diagnostics_are_reported() {
        let g = generators::complete_bipartite(8, 8);
        let h = GrowthHypotheses {
            params: ExpansionParams::new(0.5, 2.0).unwrap(),
            expander_certified: true,
            contact_k: 1,
        };
        let t = grow_avoiding(&g, &[0, 1], &[], &[], &[], 3, Some(&h)).unwrap();
        let d = t.diagnostics.unwrap();
        assert!(d.conclusion_long);
        assert!(!d.conclusion_short);
        assert_eq!(d.hypotheses.get("z_limited_contact"), Some(true));
    }

    #[test]
    fn connect_examples() {
        let g = generators::grid(4, 4);
        let left = [0, 4, 8, 12];
        let right = [3, 7, 11, 15];
        let p = connect_avoiding(&g, &left, &right, &[5, 6]).unwrap().found().unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);
        let p = connect_avoiding(&g, &[0], &[1], &[]).unwrap().found().unwrap();
        assert_eq!(p.len(), 1);
        let cut = connect_avoiding(&generators::path(5), &[0], &[4], &[2]).unwrap();
        assert!(cut.is_not_found());
        assert!(connect_avoiding(&g, &[0], &[0], &[]).is_err());
        assert!(connect_avoiding(&g, &[0], &[1], &[1]).is_err());
    }

    #[test]
    fn connect_interior_avoids_endpoint_sets() {
        // 0 - 1 - 2 - 3 with 1 in A: the path must start at 1.
        let g = generators::path(4);
        let p = connect_avoiding(&g, &[0, 1], &[3], &[]).unwrap().found().unwrap();
        assert_eq!(p.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn core_examples() {
        let g = generators::complete_bipartite(10, 10);
        let c = low_diameter_core(&g, &[], &CoreParams::default()).unwrap().found().unwrap();
        assert_eq!(c.vertices.len(), 20);
        assert_eq!(c.radius, 2);

        let star = generators::complete_bipartite(1, 30);
        let p = CoreParams { target: Some(2), ..CoreParams::default() };
        assert!(low_diameter_core(&star, &[0], &p).unwrap().is_not_found());

        let c100 = generators::cycle(100);
        let p = CoreParams { target: Some(4), ..CoreParams::default() };
        let c = low_diameter_core(&c100, &[], &p).unwrap().found().unwrap();
        assert_eq!(c.radius, 2);
        assert_eq!(c.vertices.len(), 5);
    }
}
