//! Sublinear expansion: the expansion function, the expander predicate and
//! extraction of (bipartite) expander subgraphs.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{induced, ser_ratio, Graph, DegreeStats};
use crate::regime::{self, RegimeFlags};

/// Slack subtracted from `ε(|X|)·|X|` before declaring a violation.
pub const WITNESS_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;
pub const DEFAULT_SAMPLE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpansionParams {
    pub eps1: f64,
    pub k: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<f64>,
}

impl ExpansionParams {
    /// Requires `0 < ε₁ ≤ 1` and `k > 0`.
    pub fn new(eps1: f64, k: f64) -> Result<Self> {
        if !(eps1 > 0.0 && eps1 <= 1.0) {
            return Err(Error::domain(format!("eps1 must lie in (0, 1], got {eps1}")));
        }
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::domain(format!("k must be positive, got {k}")));
        }
        Ok(ExpansionParams { eps1, k, eps2: None, d: None })
    }

    /// The `(ε₁, ε₂·d)` instantiation.
    pub fn with_density(eps1: f64, eps2: f64, d: f64) -> Result<Self> {
        let mut p = ExpansionParams::new(eps1, eps2 * d)?;
        p.eps2 = Some(eps2);
        p.d = Some(d);
        Ok(p)
    }

    pub fn epsilon(&self, x: f64) -> f64 {
        epsilon(x, self)
    }

    /// `ε(s)·s`, the least admissible boundary of a set of size `s`.
    pub fn required(&self, s: usize) -> f64 {
        self.epsilon(s as f64) * s as f64
    }

    /// Sizes `s` with `k/2 ≤ s ≤ n/2`, as an inclusive range (empty when
    /// the first bound exceeds the second).
    pub fn size_range(&self, n: usize) -> (usize, usize) {
        let lo = ((self.k / 2.0).ceil() as usize).max(1);
        (lo, n / 2)
    }
}

/// `ε(x) = ε₁ / ln²(15x/k)` for `x ≥ k/5`, zero below.
pub fn epsilon(x: f64, params: &ExpansionParams) -> f64 {
    if x < params.k / 5.0 {
        0.0
    } else {
        params.eps1 / (15.0 * x / params.k).ln().powi(2)
    }
}

/// `(2/ε₁)·ln³(15n/k)`, the diameter bound of an expander on `n` vertices.
pub fn diameter_bound(n: usize, params: &ExpansionParams) -> Result<f64> {
    if (n as f64) < params.k {
        return Err(Error::domain(format!("diameter bound needs n ≥ k, got n = {n}, k = {}", params.k)));
    }
    Ok(2.0 / params.eps1 * (15.0 * n as f64 / params.k).ln().powi(3))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CheckMode {
    Exhaustive { cap: usize },
    Sampled { budget: usize, seed: u64 },
}

impl CheckMode {
    pub fn exhaustive() -> Self {
        CheckMode::Exhaustive { cap: DEFAULT_EXHAUSTIVE_CAP }
    }

    pub fn sampled(seed: u64) -> Self {
        CheckMode::Sampled { budget: DEFAULT_SAMPLE_BUDGET, seed }
    }

    /// Exhaustive up to `cap`, sampled above it.
    pub fn auto(n: usize, cap: usize, budget: usize, seed: u64) -> Self {
        if n <= cap {
            CheckMode::Exhaustive { cap }
        } else {
            CheckMode::Sampled { budget, seed }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpanderCertificate {
    /// `"exhaustive"` proves expansion; `"sampled"` only means no witness was found.
    pub mode: &'static str,
    pub subsets_checked: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonExpansionWitness {
    pub set: Vec<usize>,
    pub boundary: usize,
    pub required: f64,
}

impl NonExpansionWitness {
    /// Recomputes the boundary and the requirement from scratch.
    pub fn revalidate(&self, g: &Graph, params: &ExpansionParams) -> bool {
        let (lo, hi) = params.size_range(g.n());
        let s = self.set.len();
        if s < lo || s > hi || self.set.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = self.set.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != s {
            return false;
        }
        let b = boundary_size(g, &sorted);
        b == self.boundary && (b as f64) < params.required(s) - WITNESS_TOLERANCE
    }
}

/// `|N(X)|`: vertices outside `X` with a neighbour in `X`.
pub fn boundary_size(g: &Graph, x: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    for &v in x {
        inside[v] = true;
    }
    let mut hit = vec![false; g.n()];
    let mut count = 0;
    for &v in x {
        for &w in g.neighbors(v) {
            if !inside[w] && !hit[w] {
                hit[w] = true;
                count += 1;
            }
        }
    }
    count
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ExpanderVerdict {
    Certified(ExpanderCertificate),
    Witness(NonExpansionWitness),
}

impl ExpanderVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, ExpanderVerdict::Certified(_))
    }

    pub fn witness(&self) -> Option<&NonExpansionWitness> {
        match self {
            ExpanderVerdict::Witness(w) => Some(w),
            ExpanderVerdict::Certified(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpanderReport {
    #[serde(flatten)]
    pub verdict: ExpanderVerdict,
    pub params: ExpansionParams,
    pub regime: RegimeFlags,
}

pub fn check_expander(g: &Graph, params: &ExpansionParams, mode: CheckMode) -> Result<ExpanderReport> {
    let verdict = match mode {
        CheckMode::Exhaustive { cap } => {
            let cap = cap.min(64);
            if g.n() > cap {
                return Err(Error::Capacity { what: "exhaustive expander check", n: g.n(), cap });
            }
            check_exhaustive(g, params)
        }
        CheckMode::Sampled { budget, seed } => check_sampled(g, params, budget, seed),
    };
    let regime = regime::scale_flags(g.n(), params.eps1)
        .with("exhaustive", matches!(mode, CheckMode::Exhaustive { .. }));
    Ok(ExpanderReport { verdict, params: *params, regime })
}

fn thresholds(params: &ExpansionParams, hi: usize) -> Vec<f64> {
    (0..=hi).map(|s| params.required(s) - WITNESS_TOLERANCE).collect()
}

/// Enumerates every vertex subset of admissible size by DFS over increasing
/// vertex ids, carrying the union of neighbour masks. Subtrees rooted at
/// different least vertices run in parallel; the witness with the smallest
/// least vertex wins, and within a subtree the first in DFS order.
fn check_exhaustive(g: &Graph, params: &ExpansionParams) -> ExpanderVerdict {
    let n = g.n();
    let (lo, hi) = params.size_range(n);
    if lo > hi {
        return ExpanderVerdict::Certified(ExpanderCertificate { mode: "exhaustive", subsets_checked: 0 });
    }
    let need = thresholds(params, hi);
    let best_root = AtomicUsize::new(usize::MAX);
    let results: Vec<(u64, Option<u64>)> = (0..n)
        .into_par_iter()
        .map(|root| {
            let mut search = SubsetSearch {
                g,
                lo,
                hi,
                need: &need,
                checked: 0,
                found: None,
                root,
                best_root: &best_root,
            };
            search.dfs(1u64 << root, g.mask(root), root, 1);
            if search.found.is_some() {
                best_root.fetch_min(root, Ordering::Relaxed);
            }
            (search.checked, search.found)
        })
        .collect();
    if let Some(mask) = results.iter().find_map(|r| r.1) {
        let set = bits(mask);
        let boundary = boundary_size(g, &set);
        let required = params.required(set.len());
        return ExpanderVerdict::Witness(NonExpansionWitness { set, boundary, required });
    }
    ExpanderVerdict::Certified(ExpanderCertificate {
        mode: "exhaustive",
        subsets_checked: results.iter().map(|r| r.0).sum(),
    })
}

struct SubsetSearch<'a> {
    g: &'a Graph,
    lo: usize,
    hi: usize,
    need: &'a [f64],
    checked: u64,
    found: Option<u64>,
    root: usize,
    best_root: &'a AtomicUsize,
}

impl SubsetSearch<'_> {
    fn dfs(&mut self, set: u64, nbrs: u64, last: usize, size: usize) {
        if self.found.is_some() || self.best_root.load(Ordering::Relaxed) < self.root {
            return;
        }
        if size >= self.lo {
            self.checked += 1;
            let boundary = (nbrs & !set).count_ones() as f64;
            if boundary < self.need[size] {
                self.found = Some(set);
                return;
            }
        }
        if size == self.hi {
            return;
        }
        for v in last + 1..self.g.n() {
            self.dfs(set | 1u64 << v, nbrs | self.g.mask(v), v, size + 1);
            if self.found.is_some() {
                return;
            }
        }
    }
}

pub(crate) fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Incrementally maintained vertex set with its boundary.
struct BoundaryState<'a> {
    g: &'a Graph,
    inside: Vec<bool>,
    /// Number of neighbours in the set, per vertex.
    hits: Vec<u32>,
    members: Vec<usize>,
    boundary: usize,
}

impl<'a> BoundaryState<'a> {
    fn new(g: &'a Graph) -> Self {
        BoundaryState { g, inside: vec![false; g.n()], hits: vec![0; g.n()], members: Vec::new(), boundary: 0 }
    }

    fn add(&mut self, v: usize) {
        self.boundary = self.boundary_after_add(v);
        self.inside[v] = true;
        self.members.push(v);
        for &w in self.g.neighbors(v) {
            self.hits[w] += 1;
        }
    }

    fn remove(&mut self, v: usize) {
        self.boundary = self.boundary_after_remove(v);
        self.inside[v] = false;
        self.members.retain(|&x| x != v);
        for &w in self.g.neighbors(v) {
            self.hits[w] -= 1;
        }
    }

    fn boundary_after_add(&self, v: usize) -> usize {
        let was = usize::from(self.hits[v] > 0);
        let fresh = self.g.neighbors(v).iter().filter(|&&w| !self.inside[w] && self.hits[w] == 0).count();
        self.boundary - was + fresh
    }

    fn boundary_after_remove(&self, v: usize) -> usize {
        let becomes = usize::from(self.hits[v] > 0);
        let lost = self.g.neighbors(v).iter().filter(|&&w| !self.inside[w] && self.hits[w] == 1).count();
        self.boundary + becomes - lost
    }

    fn frontier(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&w| !self.inside[w] && self.hits[w] > 0).collect()
    }
}

/// Random connected sets grown by BFS, each polished by a greedy local
/// search that lowers `|N(X)| − ε(|X|)|X|`.
fn check_sampled(g: &Graph, params: &ExpansionParams, budget: usize, seed: u64) -> ExpanderVerdict {
    let n = g.n();
    let (lo, hi) = params.size_range(n);
    if lo > hi || n == 0 {
        return ExpanderVerdict::Certified(ExpanderCertificate { mode: "sampled", subsets_checked: 0 });
    }
    let need = thresholds(params, hi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0u64;
    let score = |b: usize, s: usize| b as f64 - need[s];
    for _ in 0..budget {
        let target = rng.gen_range(lo..=hi);
        let mut st = BoundaryState::new(g);
        st.add(rng.gen_range(0..n));
        while st.members.len() < target {
            let frontier = st.frontier();
            let next = match frontier.choose(&mut rng) {
                Some(&w) => w,
                None => {
                    let outside: Vec<usize> = (0..n).filter(|&w| !st.inside[w]).collect();
                    *outside.choose(&mut rng).expect("target ≤ n/2 leaves room")
                }
            };
            st.add(next);
        }
        checked += 1;
        if score(st.boundary, st.members.len()) < 0.0 {
            return sampled_witness(g, params, st.members);
        }
        for _ in 0..2 * target.min(16) {
            let s = st.members.len();
            let mut best: Option<(f64, bool, usize)> = None;
            let mut consider = |delta: f64, add: bool, v: usize| {
                if best.map_or(true, |(d, _, _)| delta < d) {
                    best = Some((delta, add, v));
                }
            };
            if s < hi {
                for w in st.frontier() {
                    consider(score(st.boundary_after_add(w), s + 1), true, w);
                }
            }
            if s > lo {
                for &v in &st.members {
                    consider(score(st.boundary_after_remove(v), s - 1), false, v);
                }
            }
            match best {
                Some((d, add, v)) if d < score(st.boundary, s) => {
                    if add {
                        st.add(v)
                    } else {
                        st.remove(v)
                    }
                    checked += 1;
                    if d < 0.0 {
                        return sampled_witness(g, params, st.members);
                    }
                }
                _ => break,
            }
        }
    }
    ExpanderVerdict::Certified(ExpanderCertificate { mode: "sampled", subsets_checked: checked })
}

fn sampled_witness(g: &Graph, params: &ExpansionParams, mut set: Vec<usize>) -> ExpanderVerdict {
    set.sort_unstable();
    let boundary = boundary_size(g, &set);
    let required = params.required(set.len());
    ExpanderVerdict::Witness(NonExpansionWitness { set, boundary, required })
}

/// How expansion of an extracted subgraph is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertifyConfig {
    pub cap: usize,
    pub budget: usize,
    pub seed: u64,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { cap: DEFAULT_EXHAUSTIVE_CAP, budget: DEFAULT_SAMPLE_BUDGET, seed: 0 }
    }
}

impl CertifyConfig {
    fn mode(&self, n: usize) -> CheckMode {
        CheckMode::auto(n, self.cap, self.budget, self.seed)
    }
}

/// A subgraph `H ⊆ G` given by host ids, with its verification record.
#[derive(Debug, Clone, Serialize)]
pub struct Extraction {
    /// Host ids of `V(H)`, sorted.
    pub vertices: Vec<usize>,
    #[serde(skip)]
    pub graph: Graph,
    #[serde(serialize_with = "ser_ratio")]
    pub host_average_degree: Ratio<u64>,
    pub degrees: DegreeStats,
    /// `d(H) ≥ d(G)/2` and `δ(H) ≥ d(H)/2`, checked exactly.
    pub degree_conditions: bool,
    pub expansion: ExpanderVerdict,
    pub repairs: usize,
    pub regime: RegimeFlags,
}

#[derive(Debug, Clone, Copy)]
enum PeelRule {
    /// `δ ≥ d/2`.
    HalfAverage,
    /// `δ ≥ d`.
    MinDegree(usize),
}

/// Deletes minimum-degree vertices (largest id first among ties) until the
/// rule holds. Removing a vertex of degree at most `d/2` never lowers the
/// average degree, so peeling for `HalfAverage` keeps `d(H) ≥ d(input)`.
fn peel(g: &Graph, mut vertices: Vec<usize>, rule: PeelRule) -> Vec<usize> {
    let mut inside = vec![false; g.n()];
    for &v in &vertices {
        inside[v] = true;
    }
    let mut deg: Vec<usize> = (0..g.n())
        .map(|v| if inside[v] { g.neighbors(v).iter().filter(|&&w| inside[w]).count() } else { 0 })
        .collect();
    let mut edges: u64 = vertices.iter().map(|&v| deg[v] as u64).sum::<u64>() / 2;
    while !vertices.is_empty() {
        let (min_deg, v) = vertices
            .iter()
            .map(|&v| (deg[v], std::cmp::Reverse(v)))
            .min()
            .map(|(d, r)| (d, r.0))
            .expect("non-empty");
        let holds = match rule {
            PeelRule::HalfAverage => min_deg as u64 * vertices.len() as u64 >= edges,
            PeelRule::MinDegree(d) => min_deg >= d,
        };
        if holds {
            break;
        }
        inside[v] = false;
        edges -= deg[v] as u64;
        for &w in g.neighbors(v) {
            if inside[w] {
                deg[w] -= 1;
            }
        }
        vertices.retain(|&x| x != v);
    }
    vertices
}

fn sub(g: &Graph, vertices: &[usize]) -> Graph {
    induced(g, vertices).expect("vertices come from g").0
}

/// Thm-style extraction: a subgraph `H` with `d(H) ≥ d(G)/2`, `δ(H) ≥ d(H)/2`
/// and, as far as the checker can tell, `(ε₁, k)`-expansion.
///
/// Peels to the minimum-degree condition, then repairs expansion: while a
/// witness `X` exists, replaces `H` by the denser of `H[X ∪ N(X)]` and
/// `H − X` (whichever keeps `d ≥ d(G)/2`) and peels again. If neither keeps
/// the density the last witness is reported instead of a certificate.
pub fn extract_expander(g: &Graph, params: &ExpansionParams, cfg: &CertifyConfig) -> Result<Extraction> {
    if g.is_empty() {
        return Err(Error::domain("cannot extract from the empty graph"));
    }
    let target = g.average_degree() / 2;
    let mut vertices = peel(g, (0..g.n()).collect(), PeelRule::HalfAverage);
    let mut repairs = 0;
    let expansion = loop {
        let h = sub(g, &vertices);
        let report = check_expander(&h, params, cfg.mode(h.n()))?;
        let witness = match report.verdict {
            ExpanderVerdict::Certified(_) => break report.verdict,
            ExpanderVerdict::Witness(w) => w,
        };
        let mut inside = vec![false; h.n()];
        for &x in &witness.set {
            inside[x] = true;
        }
        let closed: Vec<usize> =
            (0..h.n()).filter(|&v| inside[v] || h.neighbors(v).iter().any(|&w| inside[w])).collect();
        let rest: Vec<usize> = (0..h.n()).filter(|&v| !inside[v]).collect();
        let mut options: Vec<(Ratio<u64>, Vec<usize>)> = [closed, rest]
            .into_iter()
            .map(|local| {
                let host: Vec<usize> = local.iter().map(|&v| vertices[v]).collect();
                let host = peel(g, host, PeelRule::HalfAverage);
                (sub(g, &host).average_degree(), host)
            })
            .filter(|(d, host)| !host.is_empty() && *d >= target)
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0));
        match options.into_iter().next() {
            Some((_, host)) => {
                vertices = host;
                repairs += 1;
            }
            None => {
                let set = witness.set.iter().map(|&v| vertices[v]).collect();
                break ExpanderVerdict::Witness(NonExpansionWitness { set, ..witness });
            }
        }
    };
    Ok(finish(g, vertices, expansion, repairs, params))
}

fn finish(
    g: &Graph,
    vertices: Vec<usize>,
    expansion: ExpanderVerdict,
    repairs: usize,
    params: &ExpansionParams,
) -> Extraction {
    let h = sub(g, &vertices);
    let stats = h.degrees();
    let host_average_degree = g.average_degree();
    let degree_conditions = extraction_degree_conditions(&h, host_average_degree);
    let regime = regime::scale_flags(h.n(), params.eps1);
    Extraction {
        vertices,
        graph: h,
        host_average_degree,
        degrees: stats,
        degree_conditions,
        expansion,
        repairs,
        regime,
    }
}

/// `d(H) ≥ d(G)/2` and `δ(H) ≥ d(H)/2`, in exact arithmetic.
pub fn extraction_degree_conditions(h: &Graph, host_average: Ratio<u64>) -> bool {
    let d = h.average_degree();
    d * 2 >= host_average && Ratio::from_integer(2 * h.min_degree() as u64) >= d
}

/// A spanning bipartite subgraph from a local-search cut.
#[derive(Debug, Clone, Serialize)]
pub struct BipartiteExtraction {
    #[serde(skip)]
    pub graph: Graph,
    pub side: Vec<u8>,
    pub flips: usize,
}

/// Random sides, then flips any vertex (least id first) with more
/// neighbours on its own side than across, until none is left. At the fixed
/// point every vertex keeps at least half its degree across, so the cut
/// keeps at least half the edges.
pub fn extract_bipartite(g: &Graph, seed: u64) -> BipartiteExtraction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut side: Vec<u8> = (0..g.n()).map(|_| rng.gen_range(0..2)).collect();
    let mut flips = 0;
    loop {
        let bad = (0..g.n()).find(|&v| {
            let same = g.neighbors(v).iter().filter(|&&w| side[w] == side[v]).count();
            2 * same > g.degree(v)
        });
        match bad {
            Some(v) => {
                side[v] ^= 1;
                flips += 1;
            }
            None => break,
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| side[u] != side[v]).collect();
    let graph = Graph::from_edges_labeled(g.n(), &edges, g.labels().to_vec()).expect("subgraph of a simple graph");
    BipartiteExtraction { graph, side, flips }
}

/// Every vertex keeps at least half of its `G`-degree in `H`.
pub fn half_degree_cross_condition(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && (0..g.n()).all(|v| 2 * h.degree(v) >= g.degree(v))
}

/// A bipartite `(ε₁, ε₂·d)`-expander with `δ ≥ d`, from a host with
/// `d(G) ≥ 8d`. The vertex ids in the result refer to `G`.
pub fn extract_bipartite_expander(
    g: &Graph,
    eps1: f64,
    eps2: f64,
    d: usize,
    cfg: &CertifyConfig,
) -> Result<Extraction> {
    let params = ExpansionParams::with_density(eps1, eps2, d as f64)?;
    if d == 0 {
        return Err(Error::domain("d must be positive"));
    }
    if g.average_degree() < Ratio::from_integer(8 * d as u64) {
        return Err(Error::precondition(format!(
            "average degree {} is below 8d = {}",
            g.average_degree(),
            8 * d
        )));
    }
    let bip = extract_bipartite(g, cfg.seed);
    let mut vertices: Vec<usize> = (0..g.n()).collect();
    let mut repairs = 0;
    let mut expansion;
    loop {
        let part = sub(&bip.graph, &vertices);
        let ex = extract_expander(&part, &params, cfg)?;
        repairs += ex.repairs;
        let picked: Vec<usize> = ex.vertices.iter().map(|&v| vertices[v]).collect();
        let peeled = peel(&bip.graph, picked.clone(), PeelRule::MinDegree(d));
        expansion = match ex.expansion {
            ExpanderVerdict::Witness(w) => ExpanderVerdict::Witness(NonExpansionWitness {
                set: w.set.iter().map(|&v| vertices[v]).collect(),
                ..w
            }),
            c => c,
        };
        let stable = peeled == picked;
        vertices = peeled;
        if stable || vertices.is_empty() {
            break;
        }
    }
    let mut out = finish(&bip.graph, vertices, expansion, repairs, &params);
    out.host_average_degree = g.average_degree();
    out.degree_conditions = out.graph.min_degree() >= d && !out.vertices.is_empty();
    out.regime.set("host_density_at_least_8d", true);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn params(eps1: f64, k: f64) -> ExpansionParams {
        ExpansionParams::new(eps1, k).unwrap()
    }

    #[test]
    fn epsilon_values() {
        let p = params(0.5, 6.0);
        assert_eq!(p.epsilon(1.0), 0.0);
        assert!((p.epsilon(6.0) - 0.5 / 15f64.ln().powi(2)).abs() < 1e-12);
        assert!((p.epsilon(6.0) - 0.06818).abs() < 1e-4);
        assert_eq!(p.epsilon(1.2), 0.5 / 3f64.ln().powi(2));
    }

    #[test]
    fn params_domain() {
        assert!(ExpansionParams::new(2.0, 1.0).is_err());
        assert!(ExpansionParams::new(0.0, 1.0).is_err());
        assert!(ExpansionParams::new(0.5, 0.0).is_err());
        assert!(ExpansionParams::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn diameter_bound_values() {
        let b = diameter_bound(4, &params(1.0, 4.0)).unwrap();
        assert!((b - 2.0 * 15f64.ln().powi(3)).abs() < 1e-9);
        let b = diameter_bound(30, &params(0.5, 2.0)).unwrap();
        assert!((b - 4.0 * 225f64.ln().powi(3)).abs() < 1e-9);
        assert!(diameter_bound(1, &params(0.5, 2.0)).is_err());
    }

    #[test]
    fn cycle_verdict_matches_direct_evaluation() {
        let g = generators::cycle(8);
        let p = params(0.9, 4.0);
        // Every proper arc has boundary 2, well above ε(s)·s for s ≤ 4.
        assert_eq!(boundary_size(&g, &[0, 1, 2, 3]), 2);
        assert!(2.0 >= p.required(4));
        let r = check_expander(&g, &p, CheckMode::exhaustive()).unwrap();
        assert!(r.verdict.is_certified());
    }

    #[test]
    fn complete_bipartite_is_certified() {
        let g = generators::complete_bipartite(6, 6);
        let r = check_expander(&g, &params(0.1, 3.0), CheckMode::exhaustive()).unwrap();
        assert!(r.verdict.is_certified());
    }

    #[test]
    fn edgeless_graph_has_witness() {
        let g = Graph::empty(10);
        let p = params(0.5, 2.0);
        let r = check_expander(&g, &p, CheckMode::exhaustive()).unwrap();
        let w = r.verdict.witness().unwrap();
        assert_eq!(w.set, vec![0]);
        assert!(w.revalidate(&g, &p));
        let r = check_expander(&g, &p, CheckMode::sampled(3)).unwrap();
        assert!(r.verdict.witness().unwrap().revalidate(&g, &p));
    }

    #[test]
    fn exhaustive_cap() {
        let g = generators::cycle(30);
        assert!(matches!(
            check_expander(&g, &params(0.5, 2.0), CheckMode::exhaustive()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn sampled_finds_cut_in_barbell() {
        let mut edges = Vec::new();
        for a in 0..20 {
            for b in a + 1..20 {
                edges.push((a, b));
                edges.push((a + 20, b + 20));
            }
        }
        edges.push((0, 20));
        let g = Graph::from_edges(40, &edges).unwrap();
        let p = params(0.5, 30.0);
        let r = check_expander(&g, &p, CheckMode::Sampled { budget: 500, seed: 1 }).unwrap();
        assert!(r.verdict.witness().unwrap().revalidate(&g, &p));
    }

    #[test]
    fn extraction_on_k5() {
        let g = generators::complete(5);
        let ex = extract_expander(&g, &params(0.5, 2.0), &CertifyConfig::default()).unwrap();
        assert_eq!(ex.vertices, vec![0, 1, 2, 3, 4]);
        assert!(ex.degree_conditions && ex.expansion.is_certified());
    }

    #[test]
    fn extraction_on_joined_cliques() {
        let mut edges = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                edges.push((a, b));
                edges.push((a + 5, b + 5));
            }
        }
        edges.push((0, 5));
        let g = Graph::from_edges(10, &edges).unwrap();
        let ex = extract_expander(&g, &params(0.5, 2.0), &CertifyConfig::default()).unwrap();
        assert!(ex.degree_conditions);
        assert!(extraction_degree_conditions(&ex.graph, g.average_degree()));
        assert!(ex.expansion.is_certified());
    }

    #[test]
    fn extraction_on_single_edge() {
        let g = generators::path(2);
        let ex = extract_expander(&g, &params(0.5, 1.0), &CertifyConfig::default()).unwrap();
        assert_eq!(ex.vertices, vec![0, 1]);
        assert!(ex.degree_conditions);
    }

    #[test]
    fn bipartite_extraction_examples() {
        let k4 = extract_bipartite(&generators::complete(4), 0);
        assert_eq!(k4.graph.edge_count(), 4);
        let c6 = extract_bipartite(&generators::cycle(6), 5);
        assert_eq!(c6.graph.edge_count(), 6);
        let tri = extract_bipartite(&generators::complete(3), 1);
        assert_eq!(tri.graph.edge_count(), 2);
        for seed in 0..10 {
            let g = generators::random_gnp(30, 0.3, seed);
            let b = extract_bipartite(&g, seed);
            assert!(half_degree_cross_condition(&g, &b.graph));
            assert!(2 * b.graph.edge_count() >= g.edge_count());
        }
    }

    #[test]
    fn bipartite_expander_examples() {
        let g = generators::complete_bipartite(16, 16);
        let ex = extract_bipartite_expander(&g, 0.5, 0.5, 2, &CertifyConfig::default()).unwrap();
        assert!(ex.degree_conditions);
        assert!(crate::generators::is_bipartite(&ex.graph));
        let g = generators::complete_bipartite(9, 9);
        let ex = extract_bipartite_expander(&g, 0.5, 0.5, 1, &CertifyConfig::default()).unwrap();
        assert!(ex.degree_conditions && ex.graph.min_degree() >= 1);
        let c4 = generators::cycle(4);
        assert!(matches!(
            extract_bipartite_expander(&c4, 0.5, 0.5, 1, &CertifyConfig::default()),
            Err(Error::Precondition(_))
        ));
    }
}
