//! Exact-length path search by pruned backtracking over bitmasks.

use crate::error::{Error, Result};
use crate::graph::{Graph, Path};
use crate::outcome::Outcome;

pub const DEFAULT_ORACLE_CAP: usize = 40;
pub const DEFAULT_ORACLE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest order searched; at most 64.
    pub cap: usize,
    /// Search nodes before giving up with `Unknown`.
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cap: DEFAULT_ORACLE_CAP, budget: DEFAULT_ORACLE_BUDGET }
    }
}

/// An `x,y`-path of length exactly `ell`, or a proof that none exists
/// (`NotFound`), or `Unknown` once the budget is spent. Among all such paths
/// the first in lexicographic order of vertex sequence is returned.
pub fn exact_length_path_oracle(
    g: &Graph,
    x: usize,
    y: usize,
    ell: usize,
    cfg: &OracleConfig,
) -> Result<Outcome<Path>> {
    let cap = cfg.cap.min(64);
    if g.n() > cap {
        return Err(Error::Capacity { what: "exact-length oracle", n: g.n(), cap });
    }
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    Ok(search(g, x, y, ell, g.all_mask(), cfg.budget))
}

/// Oracle restricted to the vertices in `allowed`. Requires `n ≤ 64`.
pub(crate) fn search(g: &Graph, x: usize, y: usize, ell: usize, allowed: u64, budget: u64) -> Outcome<Path> {
    debug_assert!(g.has_masks());
    if allowed >> x & 1 == 0 || allowed >> y & 1 == 0 {
        return Outcome::NotFound("endpoint outside the allowed set".into());
    }
    if x == y {
        return if ell == 0 {
            Outcome::Found(Path::single(x))
        } else {
            Outcome::NotFound("a path from a vertex to itself has length 0".into())
        };
    }
    if ell as u32 >= allowed.count_ones() {
        return Outcome::NotFound("longer than the number of available vertices".into());
    }
    let mut s = Search::new(g, y, allowed, budget);
    let mut stack = vec![x];
    if s.dfs(x, 1u64 << x, ell, &mut stack) {
        Outcome::Found(Path::new(stack))
    } else if s.exhausted {
        Outcome::Unknown(format!("search budget of {budget} nodes exhausted"))
    } else {
        Outcome::NotFound(format!("no path of length {ell} exists"))
    }
}

struct Search<'a> {
    g: &'a Graph,
    y: usize,
    allowed: u64,
    dist: Vec<usize>,
    /// Side mask of `y`'s component when that component is bipartite.
    side: Option<u64>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, y: usize, allowed: u64, budget: u64) -> Self {
        let n = g.n();
        let mut dist = vec![usize::MAX; n];
        let mut side_bits = 0u64;
        let mut bipartite = true;
        dist[y] = 0;
        let mut queue = std::collections::VecDeque::from([y]);
        while let Some(u) = queue.pop_front() {
            for w in bits(g.mask(u) & allowed) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    if dist[w] % 2 == 1 {
                        side_bits |= 1 << w;
                    }
                    queue.push_back(w);
                } else if dist[w] % 2 == dist[u] % 2 {
                    bipartite = false;
                }
            }
        }
        Search {
            g,
            y,
            allowed,
            dist,
            side: bipartite.then_some(side_bits),
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    /// `used` contains `u`. `rem` edges remain to be placed.
    fn dfs(&mut self, u: usize, used: u64, rem: usize, stack: &mut Vec<usize>) -> bool {
        if rem == 0 {
            return u == self.y;
        }
        if u == self.y || self.dist[u] > rem {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        if let Some(side) = self.side {
            let differ = (side >> u & 1) != (side >> self.y & 1);
            if differ != (rem % 2 == 1) {
                return false;
            }
        }
        let free = self.allowed & !used;
        if !self.enough_room(u, free, rem) {
            return false;
        }
        for w in bits(self.g.mask(u) & free) {
            if w == self.y && rem != 1 {
                continue;
            }
            stack.push(w);
            if self.dfs(w, used | 1 << w, rem - 1, stack) {
                return true;
            }
            stack.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }

    /// Flood fill from `u` through `free`, never passing through `y`.
    fn enough_room(&self, u: usize, free: u64, rem: usize) -> bool {
        let ybit = 1u64 << self.y;
        let mut reached = 0u64;
        let mut frontier = self.g.mask(u) & free;
        while frontier != 0 {
            reached |= frontier;
            let mut next = 0u64;
            for v in bits(frontier & !ybit) {
                next |= self.g.mask(v);
            }
            frontier = next & free & !reached;
        }
        if reached & ybit == 0 || (reached.count_ones() as usize) < rem {
            return false;
        }
        if let Some(side) = self.side {
            // The remaining vertices alternate sides starting opposite to `u`.
            let u_side = side >> u & 1;
            let same = if u_side == 1 { reached & side } else { reached & !side };
            let opposite = reached & !same;
            if (opposite.count_ones() as usize) < rem.div_ceil(2) || (same.count_ones() as usize) < rem / 2 {
                return false;
            }
        }
        true
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Runs the oracle in `G[S]` for an arbitrary host, mapping the answer back
/// to host ids. `S` must contain `x` and `y` and have at most 64 vertices.
pub(crate) fn search_in_subset(
    g: &Graph,
    subset: &[usize],
    x: usize,
    y: usize,
    ell: usize,
    budget: u64,
) -> Outcome<Path> {
    let (h, parent) = crate::graph::induced(g, subset).expect("subset of host vertices");
    debug_assert!(h.n() <= 64);
    let local = |v: usize| parent.binary_search(&v).expect("endpoint in subset");
    search(&h, local(x), local(y), ell, h.all_mask(), budget)
        .map(|p| Path::new(p.vertices().iter().map(|&v| parent[v]).collect()))
}
