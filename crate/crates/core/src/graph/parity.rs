//! Two-colourings and the path-parity function π.

use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, UNREACHABLE};
use crate::error::{Error, Result};

/// Side of every vertex, 0 or 1, with each component's least vertex on side 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartitionLabel {
    pub side: Vec<u8>,
}

impl BipartitionLabel {
    pub fn class(&self, s: u8) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Bipartition {
    Bipartite(BipartitionLabel),
    /// An odd cycle as a vertex sequence; consecutive vertices, and the last
    /// and first, are adjacent.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartition {
    pub fn label(&self) -> Option<&BipartitionLabel> {
        match self {
            Bipartition::Bipartite(l) => Some(l),
            Bipartition::OddCycle { .. } => None,
        }
    }
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![UNREACHABLE; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartition::OddCycle { cycle: close_cycle(&parent, &depth, u, w) };
                }
            }
        }
    }
    Bipartition::Bipartite(BipartitionLabel { side })
}

/// Joins the tree paths from `a` and `b` to their lowest common ancestor.
fn close_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Precomputed π for a connected bipartite graph.
#[derive(Debug, Clone)]
pub struct Parity {
    side: Vec<u8>,
}

impl Parity {
    pub fn new(h: &Graph) -> Result<Parity> {
        if !h.is_connected() {
            return Err(Error::domain("π needs a connected graph"));
        }
        match bipartition(h) {
            Bipartition::Bipartite(l) => Ok(Parity { side: l.side }),
            Bipartition::OddCycle { .. } => Err(Error::domain("π needs a bipartite graph")),
        }
    }

    pub fn pi(&self, u: usize, v: usize) -> u8 {
        if u == v {
            0
        } else if self.side[u] != self.side[v] {
            1
        } else {
            2
        }
    }

    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }
}

pub fn parity_pi(h: &Graph, u: usize, v: usize) -> Result<u8> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    Ok(Parity::new(h)?.pi(u, v))
}

/// `π(a1,a3) + π(a2,a3) − π(a1,a2)` for distinct vertices.
pub fn parity_triple(h: &Graph, a1: usize, a2: usize, a3: usize) -> Result<i32> {
    h.check_vertices(&[a1, a2, a3])?;
    if a1 == a2 || a1 == a3 || a2 == a3 {
        return Err(Error::domain("parity_triple needs three distinct vertices"));
    }
    let p = Parity::new(h)?;
    Ok(p.pi(a1, a3) as i32 + p.pi(a2, a3) as i32 - p.pi(a1, a2) as i32)
}
