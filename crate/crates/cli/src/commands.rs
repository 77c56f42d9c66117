use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use cyclespan_core::connect::{connect_avoiding, contact_profile};
use cyclespan_core::expander::{
    check_expander, extract_bipartite_expander, extract_expander, CertifyConfig, CheckMode, ExpansionParams,
    DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SAMPLE_BUDGET,
};
use cyclespan_core::gadget::{
    build_simple_adjuster, chain_adjusters, exact_length_path_between, exact_length_path_oracle,
    validate_adjuster, Adjuster, AdjusterConfig, ExactOptions, OracleConfig, DEFAULT_ORACLE_BUDGET,
    DEFAULT_ORACLE_CAP,
};
use cyclespan_core::graph::{to_dot, DotOverlay};
use cyclespan_core::spectrum::{
    cycle_spectrum_exact_with, cycle_spectrum_lower_with, property_p_check, spectrum_report, LowerConfig,
    SequenceSpec, DEFAULT_CC_CAP, DEFAULT_DP_CAP,
};
use cyclespan_core::subdivision::{
    construct_balanced_subdivision_expander, find_balanced_subdivision, find_tk2_skewed, validate_subdivision,
    BalancedSubdivision, ConstructParams,
};
use cyclespan_core::{Graph, Outcome};
use serde_json::{json, Value};

use crate::source::{vertex, vertex_set, GraphSource};

/// What a command produced: the JSON document, a one-word verdict for
/// sweeps, and an optional DOT rendering.
pub struct Report {
    pub json: Value,
    pub verdict: String,
    pub dot: Option<String>,
}

impl Report {
    fn new(json: Value, verdict: impl Into<String>) -> Self {
        Report { json, verdict: verdict.into(), dot: None }
    }

    fn with_dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }
}

fn outcome_word<T>(o: &Outcome<T>) -> &'static str {
    match o {
        Outcome::Found(_) => "found",
        Outcome::NotFound(_) => "not_found",
        Outcome::Unknown(_) => "unknown",
    }
}

/// Expansion parameters from `--eps1` with either `--k` or `--eps2` and `--d`.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, env = "CYCLESPAN_EPS1", default_value_t = 0.5)]
    pub eps1: f64,
    /// Expansion threshold `k`; defaults to `eps2·d` when both are given, else 2.
    #[arg(long, env = "CYCLESPAN_K")]
    pub k: Option<f64>,
    #[arg(long, env = "CYCLESPAN_EPS2")]
    pub eps2: Option<f64>,
    #[arg(long, env = "CYCLESPAN_D")]
    pub d: Option<f64>,
}

impl ParamArgs {
    fn params(&self) -> Result<ExpansionParams> {
        Ok(match (self.k, self.eps2, self.d) {
            (Some(k), _, _) => ExpansionParams::new(self.eps1, k)?,
            (None, Some(e2), Some(d)) => ExpansionParams::with_density(self.eps1, e2, d)?,
            (None, None, None) => ExpansionParams::new(self.eps1, 2.0)?,
            _ => bail!("give --k, or both --eps2 and --d"),
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Require the exact subset-DP method.
    #[arg(long, conflicts_with = "budget")]
    pub exact: bool,
    /// Work budget for the one-sided method; selects it when given.
    #[arg(long, env = "CYCLESPAN_BUDGET")]
    pub budget: Option<u64>,
    /// Largest `n` for the exact method.
    #[arg(long, env = "CYCLESPAN_CAP", default_value_t = DEFAULT_DP_CAP)]
    pub cap: usize,
    #[arg(long, default_value_t = DEFAULT_CC_CAP)]
    pub cc_cap: usize,
    /// Sequences to test: `pow2`, `arith:a,d`, `geom:s,r`, `list:a,b,...`.
    #[arg(long)]
    pub sequence: Vec<String>,
    /// Residue class `a,b`: lengths congruent to `a` mod `b`.
    #[arg(long)]
    pub residue: Option<String>,
    /// Include one witness cycle per length.
    #[arg(long)]
    pub witnesses: bool,
}

pub fn spectrum(g: &Graph, a: &SpectrumArgs) -> Result<Report> {
    let use_exact = a.exact || (a.budget.is_none() && g.n() <= a.cap);
    let s = if use_exact {
        cycle_spectrum_exact_with(g, a.cap, a.witnesses)?
    } else {
        let cfg = LowerConfig { budget: a.budget.unwrap_or(LowerConfig::default().budget), seed: a.source.seed, cc_cap: a.cc_cap };
        let mut s = cycle_spectrum_lower_with(g, &cfg);
        if !a.witnesses {
            s.witnesses = None;
        }
        s
    };
    let sequences = a.sequence.iter().map(|q| SequenceSpec::parse(q)).collect::<Result<Vec<_>, _>>()?;
    let residue = match &a.residue {
        Some(r) => {
            let (x, y) = r.split_once(',').context("--residue takes a,b")?;
            Some((x.trim().parse()?, y.trim().parse()?))
        }
        None => None,
    };
    let report = spectrum_report(&s, &sequences, residue)?;
    let mut json = serde_json::to_value(&report)?;
    json["n"] = json!(g.n());
    json["edges"] = json!(g.edge_count());
    json["average_degree"] = json!(s.average_degree);
    json["seed"] = json!(a.source.seed);
    if let Some(b) = s.budget {
        json["budget"] = json!(b);
    }
    if let Some(w) = &s.witnesses {
        json["witnesses"] = serde_json::to_value(w)?;
    }
    let verdict = if s.exact { "exact" } else { "lower_bound" };
    Ok(Report::new(json, verdict))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
    Auto,
}

#[derive(Debug, Clone, Args)]
pub struct ExpanderArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, env = "CYCLESPAN_MODE", default_value = "auto")]
    pub mode: ModeArg,
    /// Candidate sets for the sampled mode.
    #[arg(long, env = "CYCLESPAN_BUDGET", default_value_t = DEFAULT_SAMPLE_BUDGET)]
    pub budget: usize,
    /// Largest `n` for the exhaustive mode.
    #[arg(long, env = "CYCLESPAN_CAP", default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    pub cap: usize,
}

pub fn expander_check(g: &Graph, a: &ExpanderArgs) -> Result<Report> {
    let p = a.params.params()?;
    let seed = a.source.seed;
    let mode = match a.mode {
        ModeArg::Exhaustive => CheckMode::Exhaustive { cap: a.cap },
        ModeArg::Sampled => CheckMode::Sampled { budget: a.budget, seed },
        ModeArg::Auto => CheckMode::auto(g.n(), a.cap, a.budget, seed),
    };
    let rep = check_expander(g, &p, mode)?;
    let verdict = if rep.verdict.is_certified() { "certified" } else { "witness" };
    let mut json = serde_json::to_value(&rep)?;
    json["seed"] = json!(seed);
    let mut report = Report::new(json, verdict);
    if let Some(w) = rep.verdict.witness() {
        let overlay = DotOverlay { groups: vec![("witness".into(), w.set.clone())], paths: vec![] };
        report = report.with_dot(to_dot(g, &overlay));
    }
    Ok(report)
}

#[derive(Debug, Clone, Args)]
pub struct ExtractArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Bipartite extraction; needs `--eps2` and `--d`.
    #[arg(long)]
    pub bipartite: bool,
    #[arg(long, env = "CYCLESPAN_BUDGET", default_value_t = DEFAULT_SAMPLE_BUDGET)]
    pub budget: usize,
    #[arg(long, env = "CYCLESPAN_CAP", default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    pub cap: usize,
    /// Include the extracted subgraph as JSON.
    #[arg(long)]
    pub emit_graph: bool,
}

pub fn extract(g: &Graph, a: &ExtractArgs) -> Result<Report> {
    let cfg = CertifyConfig { cap: a.cap, budget: a.budget, seed: a.source.seed };
    let e = if a.bipartite {
        let (Some(eps2), Some(d)) = (a.params.eps2, a.params.d) else {
            bail!("--bipartite needs --eps2 and --d");
        };
        if d < 1.0 || d.fract() != 0.0 {
            bail!("--d must be a positive integer for bipartite extraction");
        }
        extract_bipartite_expander(g, a.params.eps1, eps2, d as usize, &cfg)?
    } else {
        extract_expander(g, &a.params.params()?, &cfg)?
    };
    let mut json = serde_json::to_value(&e)?;
    json["seed"] = json!(a.source.seed);
    if a.emit_graph {
        json["subgraph"] = serde_json::to_value(cyclespan_core::graph::to_json(&e.graph))?;
    }
    let verdict = if e.degree_conditions { "degree_ok" } else { "degree_failed" };
    let overlay = DotOverlay { groups: vec![("H".into(), e.vertices.clone())], paths: vec![] };
    Ok(Report::new(json, verdict).with_dot(to_dot(g, &overlay)))
}

#[derive(Debug, Clone, Args)]
pub struct ConnectArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Source set `A`, comma-separated labels.
    #[arg(long = "from-set", value_name = "LABELS")]
    pub from_set: String,
    /// Target set `B`.
    #[arg(long = "to-set", value_name = "LABELS")]
    pub to_set: String,
    /// Forbidden set `W`.
    #[arg(long)]
    pub avoid: Option<String>,
    #[arg(long)]
    pub avoid_file: Option<String>,
    /// Also report the contact profile of `A` against `W` to this depth.
    #[arg(long)]
    pub profile: Option<usize>,
}

pub fn connect(g: &Graph, a: &ConnectArgs) -> Result<Report> {
    let from = vertex_set(g, Some(&a.from_set), None)?;
    let to = vertex_set(g, Some(&a.to_set), None)?;
    let avoid = vertex_set(g, a.avoid.as_deref(), a.avoid_file.as_deref())?;
    let out = connect_avoiding(g, &from, &to, &avoid)?;
    let mut json = json!({ "path": out });
    if let Some(depth) = a.profile {
        json["contact_profile"] = serde_json::to_value(contact_profile(g, &from, &avoid, depth)?)?;
    }
    let overlay = DotOverlay {
        groups: vec![("A".into(), from), ("B".into(), to), ("W".into(), avoid)],
        paths: out.as_found().map(|p| vec![p.vertices().to_vec()]).unwrap_or_default(),
    };
    Ok(Report::new(json, outcome_word(&out)).with_dot(to_dot(g, &overlay)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Constructive,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct ExactPathArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long)]
    pub from: u64,
    #[arg(long)]
    pub to: u64,
    #[arg(long)]
    pub length: usize,
    #[arg(long)]
    pub avoid: Option<String>,
    #[arg(long)]
    pub avoid_file: Option<String>,
    #[arg(long, value_enum, env = "CYCLESPAN_BACKEND", default_value = "constructive")]
    pub backend: Backend,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: u64,
    /// Disable the direct lengthening fallback of the constructive backend.
    #[arg(long)]
    pub no_lengthening: bool,
}

pub fn exact_path(g: &Graph, a: &ExactPathArgs) -> Result<Report> {
    let (x, y) = (vertex(g, a.from)?, vertex(g, a.to)?);
    let avoid = vertex_set(g, a.avoid.as_deref(), a.avoid_file.as_deref())?;
    let mut json = json!({ "backend": format!("{:?}", a.backend).to_lowercase(), "length": a.length });
    let mut constructive = None;
    let mut oracle = None;
    if a.backend != Backend::Oracle {
        let opts = ExactOptions { lengthening: !a.no_lengthening, ..ExactOptions::default() };
        let rep = exact_length_path_between(g, x, y, a.length, &avoid, &opts)?;
        json["constructive"] = serde_json::to_value(&rep)?;
        constructive = Some(rep.path);
    }
    if a.backend != Backend::Constructive {
        let host = if avoid.is_empty() { g.clone() } else { restrict(g, &avoid) };
        let cfg = OracleConfig { cap: a.oracle_cap, budget: a.oracle_budget };
        let o = if avoid.contains(&x) || avoid.contains(&y) {
            Outcome::NotFound("an endpoint is avoided".into())
        } else {
            exact_length_path_oracle(&host, x, y, a.length, &cfg)?
        };
        json["oracle"] = serde_json::to_value(&o)?;
        oracle = Some(o);
    }
    if let (Some(c), Some(o)) = (&constructive, &oracle) {
        // A constructive success against a proved absence is a contradiction.
        json["consistent"] = json!(!(c.is_found() && o.is_not_found()));
        json["agreement"] = json!(c.is_found() == o.is_found());
    }
    let primary = constructive.as_ref().or(oracle.as_ref()).expect("some backend ran");
    let verdict = outcome_word(primary);
    let overlay = DotOverlay {
        groups: vec![("ends".into(), vec![x, y]), ("avoid".into(), avoid)],
        paths: primary.as_found().map(|p| vec![p.vertices().to_vec()]).unwrap_or_default(),
    };
    Ok(Report::new(json, verdict).with_dot(to_dot(g, &overlay)))
}

/// `g` with every edge at an avoided vertex removed; ids are unchanged.
fn restrict(g: &Graph, avoid: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> =
        g.edges().filter(|(u, v)| avoid.binary_search(u).is_err() && avoid.binary_search(v).is_err()).collect();
    Graph::from_edges(g.n(), &edges).expect("subgraph of a simple graph")
}

#[derive(Debug, Clone, Args)]
pub struct AdjusterArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Shortest even cycle for a simple adjuster, as labels in cyclic order.
    #[arg(long, requires_all = ["x1", "x2"])]
    pub cycle: Option<String>,
    #[arg(long)]
    pub x1: Option<u64>,
    #[arg(long)]
    pub x2: Option<u64>,
    /// Capacity of a chained adjuster (ignored with `--cycle`).
    #[arg(long, default_value_t = 1)]
    pub capacity: usize,
    /// Size of the end expansions.
    #[arg(long = "size", short = 'D', default_value_t = 1)]
    pub size: usize,
    /// Radius bound of the end expansions.
    #[arg(long, short = 'm', env = "CYCLESPAN_M", default_value_t = 2)]
    pub m: usize,
    #[arg(long)]
    pub avoid: Option<String>,
    #[arg(long)]
    pub avoid_file: Option<String>,
}

fn adjuster_json(g: &Graph, adj: &Adjuster) -> Result<(Value, DotOverlay)> {
    let report = validate_adjuster(g, adj);
    let rungs: Vec<Value> = adj
        .ladder()
        .into_iter()
        .map(|l| json!({ "length": l, "path": adj.rung(g, l, AdjusterConfig::default().oracle_budget) }))
        .collect();
    let overlay = DotOverlay {
        groups: vec![("F1".into(), adj.f1.vertices.clone()), ("F2".into(), adj.f2.vertices.clone()), ("A".into(), adj.core.clone())],
        paths: vec![],
    };
    Ok((json!({ "adjuster": adj, "ladder": rungs, "validation": report }), overlay))
}

pub fn adjuster(g: &Graph, a: &AdjusterArgs) -> Result<Report> {
    let (outcome, requested) = match &a.cycle {
        Some(c) => {
            let c = crate::source::vertex_list(g, c)?;
            let (x1, x2) = (vertex(g, a.x1.unwrap())?, vertex(g, a.x2.unwrap())?);
            (build_simple_adjuster(g, &c, x1, x2, a.size, a.m)?, 1)
        }
        None => {
            let avoid = vertex_set(g, a.avoid.as_deref(), a.avoid_file.as_deref())?;
            (chain_adjusters(g, &avoid, a.size, a.m, a.capacity)?.into_outcome(), a.capacity)
        }
    };
    let verdict = outcome_word(&outcome);
    match outcome {
        Outcome::Found(adj) => {
            let (mut json, overlay) = adjuster_json(g, &adj)?;
            json["requested_capacity"] = json!(requested);
            json["verdict"] = json!("found");
            Ok(Report::new(json, verdict).with_dot(to_dot(g, &overlay)))
        }
        other => Ok(Report::new(json!({ "outcome": other.map(|_| ()), "requested_capacity": requested }), verdict)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TkMode {
    Search,
    Construct,
    Skewed,
}

#[derive(Debug, Clone, Args)]
pub struct TkArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub ell_min: usize,
    /// Defaults to `ell-min`.
    #[arg(long)]
    pub ell_max: Option<usize>,
    #[arg(long, value_enum, env = "CYCLESPAN_MODE", default_value = "search")]
    pub mode: TkMode,
    /// Search node budget.
    #[arg(long, env = "CYCLESPAN_BUDGET", default_value_t = 50_000_000)]
    pub budget: u64,
    /// Ratio between consecutive reserved expansion sizes (construct mode).
    #[arg(long, env = "CYCLESPAN_ALPHA", default_value_t = 0.5)]
    pub alpha: f64,
    #[arg(long, short = 'm', env = "CYCLESPAN_M", default_value_t = 2)]
    pub m: usize,
    /// Subdividing side `U` (skewed mode).
    #[arg(long)]
    pub u_set: Option<String>,
    /// Branch side `W` (skewed mode).
    #[arg(long)]
    pub w_set: Option<String>,
}

fn subdivision_json(g: &Graph, s: &BalancedSubdivision) -> (Value, DotOverlay) {
    let v = validate_subdivision(g, s);
    let paths: Vec<Vec<usize>> = s.paths.iter().map(|p| p.vertices().to_vec()).collect();
    let overlay = DotOverlay { groups: vec![("branch".into(), s.branch_vertices.clone())], paths: paths.clone() };
    let json = json!({
        "k": s.k,
        "ell": s.ell,
        "branch_vertices": s.branch_vertices,
        "paths": paths,
        "validation": v,
    });
    (json, overlay)
}

pub fn tk(g: &Graph, a: &TkArgs) -> Result<Report> {
    let ell_max = a.ell_max.unwrap_or(a.ell_min);
    let (outcome, extra): (Outcome<BalancedSubdivision>, Value) = match a.mode {
        TkMode::Search => (find_balanced_subdivision(g, a.k, (a.ell_min, ell_max), a.budget)?, json!({ "budget": a.budget })),
        TkMode::Construct => {
            let params = ConstructParams { alpha: a.alpha, m: a.m, ..ConstructParams::default() };
            let mut last = Outcome::NotFound(format!("no even ℓ in [{}, {ell_max}]", a.ell_min));
            let mut info = Value::Null;
            for ell in (a.ell_min..=ell_max).filter(|l| l % 2 == 0) {
                match construct_balanced_subdivision_expander(g, a.k, ell, &params)? {
                    Outcome::Found(rep) => {
                        info = json!({
                            "order": rep.order,
                            "reserved_sizes": rep.reserved_sizes,
                            "avoidance_sizes": rep.avoidance_sizes,
                            "stages": rep.stages,
                            "avoidance_rechecked": rep.avoidance_rechecked,
                        });
                        last = Outcome::Found(rep.subdivision);
                        break;
                    }
                    other => last = other.map(|r| r.subdivision),
                }
            }
            (last, info)
        }
        TkMode::Skewed => {
            let (Some(u), Some(w)) = (&a.u_set, &a.w_set) else {
                bail!("skewed mode needs --u-set and --w-set");
            };
            let u = vertex_set(g, Some(u), None)?;
            let w = vertex_set(g, Some(w), None)?;
            (Outcome::Found(find_tk2_skewed(g, &u, &w, a.k)?), Value::Null)
        }
    };
    let verdict = outcome_word(&outcome);
    match outcome {
        Outcome::Found(s) => {
            let (mut json, overlay) = subdivision_json(g, &s);
            json["verdict"] = json!("found");
            json["mode"] = json!(format!("{:?}", a.mode).to_lowercase());
            json["details"] = extra;
            Ok(Report::new(json, verdict).with_dot(to_dot(g, &overlay)))
        }
        other => Ok(Report::new(json!({ "outcome": other.map(|_| ()), "details": extra }), verdict)),
    }
}

#[derive(Debug, Clone, Args)]
pub struct PropertyPArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Least path length checked.
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
    /// Largest path length checked; defaults to `n − 1`.
    #[arg(long)]
    pub upper: Option<usize>,
}

pub fn property_p(g: &Graph, a: &PropertyPArgs) -> Result<Report> {
    let upper = a.upper.unwrap_or(g.n().saturating_sub(1));
    let r = property_p_check(g, a.ell, upper)?;
    let verdict = if r.holds { "holds" } else { "fails" };
    Ok(Report::new(json!({ "ell": a.ell, "upper": upper, "report": r }), verdict))
}
