//! Paths of exactly prescribed length between two vertices.

use serde::Serialize;

use crate::connect::shortest_connection;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, mark, Graph, Parity, Path, UNREACHABLE};
use crate::outcome::Outcome;
use crate::regime::{ln_pow, RegimeFlags};

use super::adjuster::{chain_in, Adjuster, AdjusterConfig};
use super::expansion::{check_disjoint, VertexExpansion};
use super::window::{lengthen, two_paths_in_window};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Size of the adjuster's end expansions.
    pub d_adj: usize,
    /// Radius parameter of the adjuster.
    pub m: usize,
    /// Largest adjuster capacity tried.
    pub max_capacity: usize,
    pub adjuster: AdjusterConfig,
    /// Whether to fall back to direct lengthening when the adjuster stage fails.
    pub lengthening: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { d_adj: 1, m: 2, max_capacity: 3, adjuster: AdjusterConfig::default(), lengthening: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactStage {
    /// The distance already equals the requested length.
    Shortest,
    /// Two window paths spliced through an adjuster rung.
    Adjuster,
    /// Zero-slack iterative lengthening.
    Lengthening,
}

/// How the adjuster stage produced its path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjusterUse {
    pub ends: (usize, usize),
    pub core_size: usize,
    pub capacity: usize,
    pub base_length: usize,
    pub rung: usize,
    pub outer_lengths: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactPathReport {
    #[serde(flatten)]
    pub path: Outcome<Path>,
    pub stage: Option<ExactStage>,
    pub adjuster: Option<AdjusterUse>,
    pub regime: RegimeFlags,
}

impl ExactPathReport {
    fn new(path: Outcome<Path>, stage: Option<ExactStage>, adjuster: Option<AdjusterUse>, regime: RegimeFlags) -> Self {
        ExactPathReport { path, stage, adjuster, regime }
    }
}

fn regime_flags(n: usize, ell: usize, d: usize, u: usize) -> RegimeFlags {
    let nf = n as f64;
    let lo = ln_pow(nf, 7);
    let hi = nf / ln_pow(nf, 12);
    RegimeFlags::new()
        .with("length_in_asymptotic_window", (ell as f64) >= lo && (ell as f64) <= hi)
        .with("avoided_set_small", (u as f64) <= d as f64 / (2.0 * ln_pow(nf, 3)))
}

/// A `v1,v2`-path of length exactly `ell` in `G − U`, where `v1`, `v2` are the
/// centers of `f1`, `f2`.
///
/// Stages, in order: the shortest path when its length is `ell`; an adjuster
/// of growing capacity in `G − U − F1 − F2` reached by two window paths and
/// closed by the rung making up the difference; direct zero-slack
/// lengthening (unless disabled). Every returned path is revalidated.
pub fn exact_length_path(
    g: &Graph,
    u: &[usize],
    f1: &VertexExpansion,
    f2: &VertexExpansion,
    ell: usize,
    opts: &ExactOptions,
) -> Result<ExactPathReport> {
    check_disjoint(g, &[&f1.vertices, &f2.vertices, u])?;
    let parity = Parity::new(g)?;
    let (v1, v2) = (f1.center, f2.center);
    if (ell % 2) as u8 != parity.pi(v1, v2) % 2 {
        return Err(Error::domain(format!(
            "length {ell} has the wrong parity for vertices {v1} and {v2} (π = {})",
            parity.pi(v1, v2)
        )));
    }
    if opts.d_adj == 0 || opts.max_capacity == 0 {
        return Err(Error::domain("adjuster size and capacity must be at least 1"));
    }
    let n = g.n();
    let regime = regime_flags(n, ell, f1.size().min(f2.size()), u.len());
    let not_found = |why: String| Ok(ExactPathReport::new(Outcome::NotFound(why), None, None, regime.clone()));
    let blocked = mark(n, u);
    let dist = bfs_distances(g, &[v1], Some(&blocked))[v2];
    if dist == UNREACHABLE {
        return not_found("U separates the endpoints".into());
    }
    if ell < dist {
        return not_found(format!("length {ell} is below the distance {dist}"));
    }
    if ell + u.len() >= n {
        return not_found(format!("a path of length {ell} needs more than the {} available vertices", n - u.len()));
    }
    let accept = |p: &Path| p.validate_full(g, v1, v2, Some(ell), u).is_ok();
    if dist == ell {
        let p = shortest_connection(g, &mark(n, &[v1]), &mark(n, &[v2]), &blocked).expect("reachable");
        debug_assert!(accept(&p));
        return Ok(ExactPathReport::new(Outcome::Found(p), Some(ExactStage::Shortest), None, regime));
    }
    for r in 1..=opts.max_capacity {
        if let Some((p, used)) = via_adjuster(g, &blocked, f1, f2, ell, r, opts) {
            if accept(&p) {
                return Ok(ExactPathReport::new(Outcome::Found(p), Some(ExactStage::Adjuster), Some(used), regime));
            }
        }
    }
    if opts.lengthening {
        if let Outcome::Found(p) = lengthen(g, &blocked, v1, v2, ell, ell) {
            if accept(&p) {
                return Ok(ExactPathReport::new(Outcome::Found(p), Some(ExactStage::Lengthening), None, regime));
            }
        }
    }
    not_found(format!("no stage produced a path of length {ell}"))
}

/// [`exact_length_path`] between bare vertices.
pub fn exact_length_path_between(
    g: &Graph,
    x: usize,
    y: usize,
    ell: usize,
    u: &[usize],
    opts: &ExactOptions,
) -> Result<ExactPathReport> {
    g.check_vertices(&[x, y])?;
    if x == y {
        return Err(Error::domain("endpoints must be distinct"));
    }
    exact_length_path(g, u, &VertexExpansion::bare(x), &VertexExpansion::bare(y), ell, opts)
}

fn via_adjuster(
    g: &Graph,
    blocked: &[bool],
    f1: &VertexExpansion,
    f2: &VertexExpansion,
    ell: usize,
    r: usize,
    opts: &ExactOptions,
) -> Option<(Path, AdjusterUse)> {
    let mut wall = blocked.to_vec();
    for &v in f1.vertices.iter().chain(&f2.vertices) {
        wall[v] = true;
    }
    let chain = chain_in(g, &wall, opts.d_adj, opts.m, r, &opts.adjuster);
    let adj: Adjuster = chain.into_outcome().found()?;
    let (k, b) = (adj.capacity, adj.base_length);
    // Each outer path has at least one edge.
    let hi = ell.checked_sub(b)?;
    let lo = hi.saturating_sub(2 * k).max(2);
    if lo > hi {
        return None;
    }
    let mut avoid: Vec<usize> = (0..g.n()).filter(|&v| blocked[v]).collect();
    avoid.extend_from_slice(&adj.core);
    let (p, q) = two_paths_in_window(g, &avoid, [f1, f2, &adj.f1, &adj.f2], lo, hi - lo).ok()?.found()?;
    let rest = ell - p.len() - q.len();
    if rest < b || (rest - b) % 2 == 1 || (rest - b) / 2 > k {
        return None;
    }
    let rung = adj.rung(g, rest, opts.adjuster.oracle_budget).found()?;
    let rung = if rung.start() == p.end() { rung } else { rung.reversed() };
    let path = p.join(&rung).join(&q.reversed());
    let used = AdjusterUse {
        ends: (adj.v1, adj.v2),
        core_size: adj.core.len(),
        capacity: k,
        base_length: b,
        rung: (rest - b) / 2,
        outer_lengths: (p.len(), q.len()),
    };
    Some((path, used))
}
