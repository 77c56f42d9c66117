//! Adjusters: two expansions joined through a core that offers a ladder of
//! path lengths `ℓ, ℓ+2, …, ℓ+2k` between their centers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::connect::shortest_connection;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, bipartition, cycles_by_length, induced, mark, Bipartition, Graph, Path, UNREACHABLE};
use crate::outcome::Outcome;

use super::expansion::{distances_inside, find_vertex_expansions, VertexExpansion};
use super::oracle::{self, DEFAULT_ORACLE_BUDGET};

pub const DEFAULT_RETRY_BUDGET: usize = 64;
/// Anchors tried per cycle, nearest to the cycle first.
const ANCHOR_CANDIDATES: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Adjuster {
    pub v1: usize,
    pub f1: VertexExpansion,
    pub v2: usize,
    pub f2: VertexExpansion,
    /// The core `A`, sorted.
    pub core: Vec<usize>,
    pub capacity: usize,
    pub base_length: usize,
    pub d: usize,
    pub m: usize,
    /// Known `v1,v2`-paths inside `G[A ∪ {v1, v2}]`, keyed by length.
    #[serde(skip)]
    pub rungs: BTreeMap<usize, Path>,
}

impl Adjuster {
    /// `A ∪ {v1, v2}`, sorted.
    pub fn core_with_ends(&self) -> Vec<usize> {
        let mut s = self.core.clone();
        s.push(self.v1);
        s.push(self.v2);
        s.sort_unstable();
        s.dedup();
        s
    }

    /// `ℓ, ℓ+2, …, ℓ+2k`.
    pub fn ladder(&self) -> Vec<usize> {
        (0..=self.capacity).map(|i| self.base_length + 2 * i).collect()
    }

    /// A `v1,v2`-path of exactly `length` inside `G[A ∪ {v1, v2}]`.
    pub fn rung(&self, g: &Graph, length: usize, budget: u64) -> Outcome<Path> {
        if let Some(p) = self.rungs.get(&length) {
            return Outcome::Found(p.clone());
        }
        let subset = self.core_with_ends();
        if subset.len() > 64 {
            return Outcome::Unknown(format!("core of {} vertices is too large to search", subset.len()));
        }
        oracle::search_in_subset(g, &subset, self.v1, self.v2, length, budget)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjusterConfig {
    /// Oracle nodes per length query inside a core.
    pub oracle_budget: u64,
    /// Simple-adjuster constructions attempted before giving up.
    pub retry_budget: usize,
}

impl Default for AdjusterConfig {
    fn default() -> Self {
        AdjusterConfig { oracle_budget: DEFAULT_ORACLE_BUDGET, retry_budget: DEFAULT_RETRY_BUDGET }
    }
}

/// Memoized exact-length queries between the ends inside a core.
struct LengthProbe {
    h: Graph,
    parent: Vec<usize>,
    x: usize,
    y: usize,
    budget: u64,
    memo: BTreeMap<usize, Outcome<Path>>,
}

impl LengthProbe {
    fn new(g: &Graph, subset: &[usize], v1: usize, v2: usize, budget: u64) -> std::result::Result<Self, String> {
        if subset.len() > 64 {
            return Err(format!("core of {} vertices is too large for exhaustive search", subset.len()));
        }
        let (h, parent) = induced(g, subset).map_err(|e| e.to_string())?;
        let local = |v: usize| parent.binary_search(&v).map_err(|_| format!("end {v} missing from core"));
        let (x, y) = (local(v1)?, local(v2)?);
        Ok(LengthProbe { h, parent, x, y, budget, memo: BTreeMap::new() })
    }

    fn seed(&mut self, known: &BTreeMap<usize, Path>) {
        for (&l, p) in known {
            self.memo.insert(l, Outcome::Found(p.clone()));
        }
    }

    fn query(&mut self, len: usize) -> &Outcome<Path> {
        if !self.memo.contains_key(&len) {
            let out = oracle::search(&self.h, self.x, self.y, len, self.h.all_mask(), self.budget)
                .map(|p| Path::new(p.vertices().iter().map(|&v| self.parent[v]).collect()));
            self.memo.insert(len, out);
        }
        &self.memo[&len]
    }

    /// Whether `l, l+2, …, l+2k` are all realized; `Err` if undecided.
    fn ladder(&mut self, l: usize, k: usize) -> std::result::Result<bool, String> {
        for i in 0..=k {
            match self.query(l + 2 * i) {
                Outcome::Found(_) => {}
                Outcome::NotFound(_) => return Ok(false),
                Outcome::Unknown(why) => return Err(format!("length {} undecided: {why}", l + 2 * i)),
            }
        }
        Ok(true)
    }

    fn found(&self) -> BTreeMap<usize, Path> {
        self.memo.iter().filter_map(|(&l, o)| o.as_found().map(|p| (l, p.clone()))).collect()
    }
}

/// Smallest `l` whose ladder of capacity `k` is realized, scanning up to `upper`.
fn minimal_base(probe: &mut LengthProbe, k: usize, upper: usize) -> std::result::Result<Option<usize>, String> {
    for l in 1..=upper {
        if probe.ladder(l, k)? {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

struct Parts {
    v1: usize,
    f1: VertexExpansion,
    v2: usize,
    f2: VertexExpansion,
    core: Vec<usize>,
    capacity: usize,
    rungs: BTreeMap<usize, Path>,
}

/// Certifies the base length of an assembled adjuster by exhaustive search.
fn finish(g: &Graph, mut parts: Parts, d: usize, m: usize, budget: u64) -> std::result::Result<Adjuster, String> {
    parts.core.sort_unstable();
    let k = parts.capacity;
    if parts.core.len() > 10 * m * k {
        return Err(format!("core has {} vertices, above 10·m·k = {}", parts.core.len(), 10 * m * k));
    }
    let mut subset = parts.core.clone();
    subset.extend([parts.v1, parts.v2]);
    subset.sort_unstable();
    let mut probe = LengthProbe::new(g, &subset, parts.v1, parts.v2, budget)?;
    probe.seed(&parts.rungs);
    let base = minimal_base(&mut probe, k, subset.len())?.ok_or("no ladder of the stated capacity")?;
    Ok(Adjuster {
        v1: parts.v1,
        f1: parts.f1,
        v2: parts.v2,
        f2: parts.f2,
        core: parts.core,
        capacity: k,
        base_length: base,
        d,
        m,
        rungs: probe.found(),
    })
}

fn check_cycle_shape(g: &Graph, c: &[usize]) -> Result<()> {
    g.check_vertices(c)?;
    let k = c.len();
    if k < 4 || k % 2 == 1 {
        return Err(Error::domain(format!("C must be an even cycle of length at least 4, got {k}")));
    }
    let distinct = {
        let mut s = c.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == k
    };
    if !distinct || (0..k).any(|i| !g.has_edge(c[i], c[(i + 1) % k])) {
        return Err(Error::domain("C is not a cycle of G"));
    }
    Ok(())
}

/// A capacity-1 adjuster anchored at `x1`, `x2` whose core contains `V(C)`.
///
/// Picks `x3`, `x4` on `C` at distance `|C|/2 − 1` along the cycle, joins
/// `x1` to `x3` and `x2` to `x4` by disjoint shortest connectors, and uses the
/// two arcs of `C` between `x3` and `x4` for lengths differing by 2. Ends are
/// expansions of size `d` and radius at most `m`.
pub fn build_simple_adjuster(
    g: &Graph,
    c: &[usize],
    x1: usize,
    x2: usize,
    d: usize,
    m: usize,
) -> Result<Outcome<Adjuster>> {
    g.check_vertices(&[x1, x2])?;
    if matches!(bipartition(g), Bipartition::OddCycle { .. }) {
        return Err(Error::domain("G must be bipartite"));
    }
    check_cycle_shape(g, c)?;
    if x1 == x2 {
        return Err(Error::domain("anchors must be distinct"));
    }
    if d == 0 {
        return Err(Error::domain("expansion size must be at least 1"));
    }
    Ok(simple_adjuster(g, &vec![false; g.n()], c, x1, x2, d, m, &AdjusterConfig::default()))
}

struct Candidate {
    p: Path,
    q: Path,
    f1: VertexExpansion,
    f2: VertexExpansion,
    r1: Path,
    r2: Path,
}

fn simple_adjuster(
    g: &Graph,
    blocked: &[bool],
    c: &[usize],
    x1: usize,
    x2: usize,
    d: usize,
    m: usize,
    cfg: &AdjusterConfig,
) -> Outcome<Adjuster> {
    let n = g.n();
    let on_c = mark(n, c);
    if on_c[x1] || on_c[x2] {
        return Outcome::NotFound("an anchor lies on C".into());
    }
    if blocked[x1] || blocked[x2] || c.iter().any(|&v| blocked[v]) {
        return Outcome::NotFound("C or an anchor lies in the avoided set".into());
    }
    let k = c.len();
    let gap = k / 2 - 1;
    let mut base_block: Vec<usize> = (0..n).filter(|&v| blocked[v] || on_c[v]).collect();
    let early = find_vertex_expansions(g, None, &[x1, x2], &[vec![d], vec![d]], m, &base_block)
        .ok()
        .and_then(Outcome::found);
    base_block.extend([x1, x2]);

    let mut best: Option<(usize, Candidate)> = None;
    for p in 0..k {
        for dir in [1, k - 1] {
            let step = |i: usize, s: usize| (i + s * dir) % k;
            let x3 = c[p];
            let x4 = c[step(p, gap)];
            let r1 = Path::new((0..=gap).map(|s| c[step(p, s)]).collect());
            let back = k - dir;
            let r2 = Path::new((0..=k - gap).map(|s| c[(p + s * back) % k]).collect());
            debug_assert_eq!(r2.end(), x4);
            let cand = match &early {
                Some(exps) => {
                    let (f1, f2) = (exps[0][0].clone(), exps[1][0].clone());
                    connectors(g, &base_block, &[&f1.vertices, &f2.vertices], (x1, x3), (x2, x4))
                        .map(|(p, q)| Candidate { p, q, f1, f2, r1: r1.clone(), r2: r2.clone() })
                }
                None => None,
            }
            .or_else(|| {
                let (pp, qq) = connectors(g, &base_block, &[], (x1, x3), (x2, x4))?;
                let mut avoid = base_block.clone();
                avoid.retain(|&v| v != x1 && v != x2);
                avoid.extend(pp.vertices().iter().chain(qq.vertices()).filter(|&&v| v != x1 && v != x2));
                let exps = find_vertex_expansions(g, None, &[x1, x2], &[vec![d], vec![d]], m, &avoid).ok()?.found()?;
                Some(Candidate { p: pp, q: qq, f1: exps[0][0].clone(), f2: exps[1][0].clone(), r1: r1.clone(), r2: r2.clone() })
            });
            if let Some(cand) = cand {
                let size = k + cand.p.len() - 1 + cand.q.len() - 1;
                if best.as_ref().is_none_or(|(s, _)| size < *s) {
                    best = Some((size, cand));
                }
            }
        }
    }
    let Some((_, cand)) = best else {
        return Outcome::NotFound("connectors to C cannot be routed disjointly".into());
    };
    let mut core: Vec<usize> = c.to_vec();
    core.extend(cand.p.vertices().iter().chain(cand.q.vertices()).filter(|&&v| v != x1 && v != x2));
    core.sort_unstable();
    core.dedup();
    let qr = cand.q.reversed();
    let mut rungs = BTreeMap::new();
    for r in [&cand.r1, &cand.r2] {
        let path = cand.p.join(r).join(&qr);
        rungs.insert(path.len(), path);
    }
    let parts = Parts { v1: x1, f1: cand.f1, v2: x2, f2: cand.f2, core, capacity: 1, rungs };
    match finish(g, parts, d, m, cfg.oracle_budget) {
        Ok(adj) => Outcome::Found(adj),
        Err(why) => Outcome::NotFound(why),
    }
}

/// Disjoint shortest connectors `a.0 → a.1` and `b.0 → b.1` avoiding
/// `block` and `extra` apart from their own endpoints.
fn connectors(
    g: &Graph,
    block: &[usize],
    extra: &[&[usize]],
    a: (usize, usize),
    b: (usize, usize),
) -> Option<(Path, Path)> {
    let n = g.n();
    let mut blocked = mark(n, block);
    for s in extra {
        for &v in s.iter() {
            blocked[v] = true;
        }
    }
    let route = |blocked: &mut Vec<bool>, (s, t): (usize, usize)| {
        let (bs, bt) = (blocked[s], blocked[t]);
        blocked[s] = false;
        blocked[t] = false;
        let p = shortest_connection(g, &mark(n, &[s]), &mark(n, &[t]), blocked);
        blocked[s] = bs;
        blocked[t] = bt;
        p
    };
    let p = route(&mut blocked, a)?;
    for &v in p.vertices() {
        blocked[v] = true;
    }
    let q = route(&mut blocked, b)?;
    Some((p, q))
}

/// A capacity-1 adjuster inside `G − U`.
///
/// Walks the even cycles of `G − U` shortest first and, for each, anchor
/// pairs off the cycle nearest to it, until a construction succeeds or the
/// retry budget is spent.
pub fn find_adjuster_avoiding(g: &Graph, u: &[usize], d: usize, m: usize) -> Result<Outcome<Adjuster>> {
    g.check_vertices(u)?;
    if d == 0 {
        return Err(Error::domain("expansion size must be at least 1"));
    }
    Ok(adjuster_avoiding(g, &mark(g.n(), u), d, m, &AdjusterConfig::default()))
}

pub(crate) fn adjuster_avoiding(g: &Graph, blocked: &[bool], d: usize, m: usize, cfg: &AdjusterConfig) -> Outcome<Adjuster> {
    let cycles: Vec<Vec<usize>> =
        cycles_by_length(g, Some(blocked)).into_iter().filter(|c| c.len() % 2 == 0).collect();
    if cycles.is_empty() {
        return Outcome::NotFound("G − U has no even cycle".into());
    }
    let mut attempts = 0;
    for c in &cycles {
        let on_c = mark(g.n(), c);
        let dist = bfs_distances(g, c, Some(blocked));
        let mut anchors: Vec<usize> =
            (0..g.n()).filter(|&v| !blocked[v] && !on_c[v] && dist[v] != UNREACHABLE).collect();
        anchors.sort_by_key(|&v| (dist[v], v));
        anchors.truncate(ANCHOR_CANDIDATES);
        for i in 0..anchors.len() {
            for j in i + 1..anchors.len() {
                if attempts >= cfg.retry_budget {
                    return Outcome::NotFound(format!("retry budget of {} constructions spent", cfg.retry_budget));
                }
                attempts += 1;
                if let Outcome::Found(adj) = simple_adjuster(g, blocked, c, anchors[i], anchors[j], d, m, cfg) {
                    return Outcome::Found(adj);
                }
            }
        }
    }
    Outcome::NotFound(format!("no adjuster after {attempts} constructions"))
}

/// Result of [`chain_adjusters`]: the largest capacity reached and, when it
/// falls short of the request, why.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainOutcome {
    pub adjuster: Option<Adjuster>,
    pub requested: usize,
    pub failure: Option<String>,
}

impl ChainOutcome {
    pub fn is_complete(&self) -> bool {
        self.failure.is_none()
    }

    pub fn into_outcome(self) -> Outcome<Adjuster> {
        match (self.adjuster, self.failure) {
            (Some(a), None) => Outcome::Found(a),
            (_, Some(why)) => Outcome::NotFound(why),
            (None, None) => Outcome::NotFound("no adjuster".into()),
        }
    }
}

/// A capacity-`r` adjuster in `G − U` built by repeatedly attaching a fresh
/// simple adjuster to one end of the current one.
pub fn chain_adjusters(g: &Graph, u: &[usize], d: usize, m: usize, r: usize) -> Result<ChainOutcome> {
    g.check_vertices(u)?;
    if r == 0 {
        return Err(Error::domain("capacity must be at least 1"));
    }
    if d == 0 {
        return Err(Error::domain("expansion size must be at least 1"));
    }
    Ok(chain_in(g, &mark(g.n(), u), d, m, r, &AdjusterConfig::default()))
}

pub(crate) fn chain_in(g: &Graph, blocked: &[bool], d: usize, m: usize, r: usize, cfg: &AdjusterConfig) -> ChainOutcome {
    let fail = |adjuster, why: String| ChainOutcome { adjuster, requested: r, failure: Some(why) };
    let mut cur = match adjuster_avoiding(g, blocked, d, m, cfg) {
        Outcome::Found(a) => a,
        other => return fail(None, format!("capacity 1: {}", describe(&other))),
    };
    while cur.capacity < r {
        let step = cur.capacity + 1;
        let mut used = blocked.to_vec();
        for &v in cur.core.iter().chain(&cur.f1.vertices).chain(&cur.f2.vertices) {
            used[v] = true;
        }
        let next = match adjuster_avoiding(g, &used, d, m, cfg) {
            Outcome::Found(a) => a,
            other => return fail(Some(cur), format!("capacity {step}: {}", describe(&other))),
        };
        match merge(g, blocked, &cur, &next, cfg) {
            Ok(merged) => {
                let report = validate_adjuster_with(g, &merged, cfg.oracle_budget);
                if !report.passed() {
                    return fail(Some(cur), format!("capacity {step}: {}", report.failures.join("; ")));
                }
                cur = merged;
            }
            Err(why) => return fail(Some(cur), format!("capacity {step}: {why}")),
        }
    }
    ChainOutcome { adjuster: Some(cur), requested: r, failure: None }
}

fn describe<T>(o: &Outcome<T>) -> String {
    match o {
        Outcome::Found(_) => "found".into(),
        Outcome::NotFound(s) | Outcome::Unknown(s) => s.clone(),
    }
}

/// Path from `from` to `to` inside `G[set]`, lexicographically least among
/// shortest ones.
fn path_inside(g: &Graph, set: &[usize], from: usize, to: usize) -> Option<Path> {
    let dist = distances_inside(g, set, to);
    if dist[from] == UNREACHABLE {
        return None;
    }
    let mut path = vec![from];
    let mut cur = from;
    while cur != to {
        cur = g.neighbors(cur).iter().copied().find(|&w| dist[w] == dist[cur] - 1)?;
        path.push(cur);
    }
    Some(Path::new(path))
}

/// Joins one end of `cur` to one end of `next` through their expansions.
fn merge(g: &Graph, blocked: &[bool], cur: &Adjuster, next: &Adjuster, cfg: &AdjusterConfig) -> std::result::Result<Adjuster, String> {
    let n = g.n();
    let mut in_a = mark(n, &cur.f1.vertices);
    for &v in &cur.f2.vertices {
        in_a[v] = true;
    }
    let mut in_b = mark(n, &next.f1.vertices);
    for &v in &next.f2.vertices {
        in_b[v] = true;
    }
    let mut wall = blocked.to_vec();
    for &v in cur.core.iter().chain(&next.core) {
        wall[v] = true;
    }
    let p = shortest_connection(g, &in_a, &in_b, &wall).ok_or("no path between the two adjusters")?;
    let (p0, p1) = (p.start(), p.end());
    let (fa, va, fa_other, va_other, a_is_v2) = if cur.f1.contains(p0) {
        (&cur.f1, cur.v1, &cur.f2, cur.v2, false)
    } else {
        (&cur.f2, cur.v2, &cur.f1, cur.v1, true)
    };
    let (fb, vb, fb_other, vb_other, b_is_v1) = if next.f1.contains(p1) {
        (&next.f1, next.v1, &next.f2, next.v2, true)
    } else {
        (&next.f2, next.v2, &next.f1, next.v1, false)
    };
    let head = path_inside(g, &fa.vertices, va, p0).ok_or("expansion is disconnected")?;
    let tail = path_inside(g, &fb.vertices, p1, vb).ok_or("expansion is disconnected")?;
    let q = head.join(&p).join(&tail);

    let mut core: Vec<usize> = cur.core.iter().chain(&next.core).chain(q.vertices()).copied().collect();
    core.sort_unstable();
    core.dedup();
    let mut rungs = BTreeMap::new();
    for r1 in cur.rungs.values() {
        let r1 = if a_is_v2 { r1.clone() } else { r1.reversed() };
        for r2 in next.rungs.values() {
            let r2 = if b_is_v1 { r2.clone() } else { r2.reversed() };
            let path = r1.join(&q).join(&r2);
            rungs.entry(path.len()).or_insert(path);
        }
    }
    let parts = Parts {
        v1: va_other,
        f1: fa_other.clone(),
        v2: vb_other,
        f2: fb_other.clone(),
        core,
        capacity: cur.capacity + next.capacity,
        rungs,
    };
    finish(g, parts, cur.d, cur.m, cfg.oracle_budget)
}

/// Outcome of checking the four adjuster axioms and base minimality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjusterReport {
    pub a1: bool,
    pub a2: bool,
    pub a3: bool,
    pub a4: bool,
    pub minimal: bool,
    /// Lengths up to the top of the ladder realized inside the core.
    pub realized: Vec<usize>,
    pub failures: Vec<String>,
}

impl AdjusterReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn validate_adjuster(g: &Graph, adj: &Adjuster) -> AdjusterReport {
    validate_adjuster_with(g, adj, DEFAULT_ORACLE_BUDGET)
}

pub fn validate_adjuster_with(g: &Graph, adj: &Adjuster, budget: u64) -> AdjusterReport {
    let mut rep = AdjusterReport {
        a1: true,
        a2: true,
        a3: true,
        a4: true,
        minimal: true,
        realized: Vec::new(),
        failures: Vec::new(),
    };
    let all: Vec<usize> = adj.core.iter().chain(&adj.f1.vertices).chain(&adj.f2.vertices).copied().collect();
    if let Some(&v) = all.iter().chain([&adj.v1, &adj.v2]).find(|&&v| v >= g.n()) {
        rep.a1 = false;
        rep.failures.push(format!("vertex {v} outside the graph"));
        return rep;
    }

    let mut seen = vec![false; g.n()];
    let mut clash = None;
    for &v in &all {
        if std::mem::replace(&mut seen[v], true) {
            clash.get_or_insert(v);
        }
    }
    if let Some(v) = clash {
        rep.a1 = false;
        rep.failures.push(format!("A1: vertex {v} lies in two of A, F1, F2"));
    }

    for (name, v, f) in [("F1", adj.v1, &adj.f1), ("F2", adj.v2, &adj.f2)] {
        let mut problems = Vec::new();
        if f.center != v {
            problems.push(format!("center {} is not the end {v}", f.center));
        }
        if f.size() != adj.d {
            problems.push(format!("size {} is not D = {}", f.size(), adj.d));
        }
        if f.radius_bound > adj.m {
            problems.push(format!("radius bound {} exceeds m = {}", f.radius_bound, adj.m));
        }
        if let Err(e) = f.validate(g) {
            problems.push(e);
        }
        if !problems.is_empty() {
            rep.a2 = false;
            rep.failures.push(format!("A2: {name}: {}", problems.join(", ")));
        }
    }

    let k = adj.capacity;
    if adj.core.len() > 10 * adj.m * k {
        rep.a3 = false;
        rep.failures.push(format!("A3: |A| = {} exceeds 10·m·k = {}", adj.core.len(), 10 * adj.m * k));
    }

    if k == 0 {
        rep.a4 = false;
        rep.failures.push("A4: capacity must be at least 1".into());
        return rep;
    }
    let subset = adj.core_with_ends();
    let mut probe = match LengthProbe::new(g, &subset, adj.v1, adj.v2, budget) {
        Ok(p) => p,
        Err(why) => {
            rep.a4 = false;
            rep.minimal = false;
            rep.failures.push(format!("A4: {why}"));
            return rep;
        }
    };
    for i in 0..=k {
        let len = adj.base_length + 2 * i;
        match probe.query(len) {
            Outcome::Found(p) => {
                if p.validate_full(g, adj.v1, adj.v2, Some(len), &[]).is_err() {
                    rep.a4 = false;
                    rep.failures.push(format!("A4: rung {i} failed revalidation"));
                }
            }
            Outcome::NotFound(_) => {
                rep.a4 = false;
                rep.failures.push(format!("A4: no path of length {len} (rung {i}) in the core"));
            }
            Outcome::Unknown(why) => {
                rep.a4 = false;
                rep.failures.push(format!("A4: rung {i} undecided: {why}"));
            }
        }
    }
    for l in 1..adj.base_length {
        match probe.ladder(l, k) {
            Ok(false) => {}
            Ok(true) => {
                rep.minimal = false;
                rep.failures.push(format!("base length {} is not minimal: {l} also has a full ladder", adj.base_length));
                break;
            }
            Err(why) => {
                rep.minimal = false;
                rep.failures.push(format!("minimality undecided: {why}"));
                break;
            }
        }
    }
    let top = adj.base_length + 2 * k;
    rep.realized = (1..=top).filter(|&l| probe.query(l).is_found()).collect();
    rep
}
