//! One-sided spectra: lengths certified by explicit cycles, never absences.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exact::degree_f64;
use super::{is_cycle, CycleSpectrum, SpectrumMethod};
use crate::graph::{cycles_by_length, Graph};

/// Longest length probed by color coding.
pub const DEFAULT_CC_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerConfig {
    /// Work units shared by the DFS and color-coding phases.
    pub budget: u64,
    pub seed: u64,
    pub cc_cap: usize,
}

impl Default for LowerConfig {
    fn default() -> Self {
        LowerConfig { budget: 10_000_000, seed: 0, cc_cap: DEFAULT_CC_CAP }
    }
}

pub fn cycle_spectrum_lower(g: &Graph, budget: u64, seed: u64) -> CycleSpectrum {
    cycle_spectrum_lower_with(g, &LowerConfig { budget, seed, ..LowerConfig::default() })
}

/// Shortest cycles through each vertex, then randomized DFS back-edge
/// cycles, then color coding for short lengths still missing.
pub fn cycle_spectrum_lower_with(g: &Graph, cfg: &LowerConfig) -> CycleSpectrum {
    let mut found: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in cycles_by_length(g, None) {
        found.entry(c.len()).or_insert(c);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    random_dfs(g, cfg.budget / 2, &mut rng, &mut found);
    if g.n() <= 64 && g.n() >= 3 {
        color_coding(g, cfg.cc_cap.min(g.n()), cfg.budget - cfg.budget / 2, &mut rng, &mut found);
    }
    debug_assert!(found.iter().all(|(&l, c)| c.len() == l && is_cycle(g, c)));
    CycleSpectrum {
        lengths: found.keys().copied().collect(),
        exact: false,
        witnesses: Some(found),
        n: g.n(),
        average_degree: degree_f64(g),
        method: SpectrumMethod::LowerBound,
        budget: Some(cfg.budget),
    }
}

/// Repeated DFS from random roots with shuffled neighbour order; every back
/// edge closes a cycle with the tree path.
fn random_dfs(g: &Graph, budget: u64, rng: &mut ChaCha8Rng, found: &mut BTreeMap<usize, Vec<usize>>) {
    let n = g.n();
    if n == 0 || g.edge_count() == 0 {
        return;
    }
    let mut spent = 0u64;
    let mut pos = vec![usize::MAX; n];
    while spent < budget {
        let root = rng.gen_range(0..n);
        let mut visited = vec![false; n];
        let mut stack: Vec<usize> = vec![root];
        let mut iters: Vec<Vec<usize>> = vec![shuffled(g, root, rng)];
        visited[root] = true;
        pos[root] = 0;
        while let Some(it) = iters.last_mut() {
            spent += 1;
            let u = *stack.last().unwrap();
            match it.pop() {
                Some(w) => {
                    if pos[w] != usize::MAX {
                        let p = pos[w];
                        let len = stack.len() - p;
                        if len >= 3 {
                            found.entry(len).or_insert_with(|| stack[p..].to_vec());
                        }
                    } else if !visited[w] {
                        visited[w] = true;
                        pos[w] = stack.len();
                        stack.push(w);
                        iters.push(shuffled(g, w, rng));
                    }
                }
                None => {
                    pos[u] = usize::MAX;
                    stack.pop();
                    iters.pop();
                }
            }
            if spent >= budget {
                for &v in &stack {
                    pos[v] = usize::MAX;
                }
                return;
            }
        }
    }
}

fn shuffled(g: &Graph, v: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut nb = g.neighbors(v).to_vec();
    nb.shuffle(rng);
    nb
}

/// Repetitions for 99% confidence of making a fixed `len`-cycle colorful.
fn repetitions_needed(len: usize) -> f64 {
    let log_p: f64 = (1..=len).map(|i| (i as f64).ln()).sum::<f64>() - len as f64 * (len as f64).ln();
    (100f64.ln() / log_p.exp()).ceil()
}

fn color_coding(g: &Graph, cap: usize, budget: u64, rng: &mut ChaCha8Rng, found: &mut BTreeMap<usize, Vec<usize>>) {
    let mut remaining = budget;
    let arcs = 2 * g.edge_count() as u64 + g.n() as u64;
    for len in 3..=cap {
        if found.contains_key(&len) {
            continue;
        }
        let cost = (1u64 << (len - 1)) * arcs;
        let reps = (repetitions_needed(len) as u64).min(remaining / cost.max(1));
        for _ in 0..reps {
            remaining -= cost;
            let colors: Vec<usize> = (0..g.n()).map(|_| rng.gen_range(0..len)).collect();
            if let Some(c) = colorful_cycle(g, len, &colors) {
                found.insert(len, c);
                break;
            }
        }
    }
}

/// A cycle using each of the `len` colors once, through a color-0 start.
/// `dp[S·n + v]` holds the starts of colorful paths ending at `v` with color set `S`.
fn colorful_cycle(g: &Graph, len: usize, colors: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let full = (1usize << len) - 1;
    let mut dp = vec![0u64; (full + 1) * n];
    for v in 0..n {
        if colors[v] == 0 {
            dp[n + v] = 1 << v;
        }
    }
    for s in (1..=full).step_by(2) {
        for v in 0..n {
            let starts = dp[s * n + v];
            if starts == 0 {
                continue;
            }
            for &w in g.neighbors(v) {
                let c = 1usize << colors[w];
                if s & c == 0 {
                    dp[(s | c) * n + w] |= starts;
                }
            }
        }
    }
    let (end, start) = (0..n).find_map(|v| {
        let closing = dp[full * n + v] & g.mask(v);
        (closing != 0).then(|| (v, closing.trailing_zeros() as usize))
    })?;
    let mut seq = vec![end];
    let (mut s, mut cur) = (full, end);
    while s != 1 {
        let prev = s ^ (1 << colors[cur]);
        cur = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| dp[prev * n + u] >> start & 1 == 1)
            .expect("colorful predecessor");
        seq.push(cur);
        s = prev;
    }
    debug_assert_eq!(cur, start);
    seq.reverse();
    Some(seq)
}
