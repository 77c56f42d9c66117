//! Balanced subdivisions `TK_k^(ℓ)`: `k` branch vertices joined pairwise by
//! internally disjoint paths of a common length `ℓ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadget::{
    exact_length_path, find_vertex_expansions, trim_expansion, ExactOptions, ExactStage, VertexExpansion,
};
use crate::graph::{bfs_distances, bipartition, mark, Bipartition, Graph, Parity, Path, UNREACHABLE};
use crate::outcome::Outcome;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalancedSubdivision {
    pub k: usize,
    pub ell: usize,
    pub branch_vertices: Vec<usize>,
    /// One path per pair `(i, j)`, `i < j`, in lexicographic order, running
    /// from `branch_vertices[i]` to `branch_vertices[j]`.
    pub paths: Vec<Path>,
}

/// Pairs `(i, j)` with `i < j < k` in lexicographic order.
pub fn pair_order(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

impl BalancedSubdivision {
    pub fn path(&self, i: usize, j: usize) -> Option<&Path> {
        let (i, j) = (i.min(j), i.max(j));
        pair_order(self.k).iter().position(|&p| p == (i, j)).map(|idx| &self.paths[idx])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubdivisionReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Rechecks every invariant of `s` against `g`.
pub fn validate_subdivision(g: &Graph, s: &BalancedSubdivision) -> SubdivisionReport {
    let mut v = Vec::new();
    if s.branch_vertices.len() != s.k {
        v.push(format!("{} branch vertices for k = {}", s.branch_vertices.len(), s.k));
    }
    if let Some(&b) = s.branch_vertices.iter().find(|&&b| b >= g.n()) {
        v.push(format!("branch vertex {b} outside the graph"));
        return SubdivisionReport { valid: false, violations: v };
    }
    let is_branch = mark(g.n(), &s.branch_vertices);
    if is_branch.iter().filter(|&&b| b).count() != s.branch_vertices.len() {
        v.push("branch vertices repeat".into());
    }
    let pairs = pair_order(s.branch_vertices.len());
    if s.paths.len() != pairs.len() {
        v.push(format!("{} paths for {} pairs", s.paths.len(), pairs.len()));
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (idx, (&(i, j), p)) in pairs.iter().zip(&s.paths).enumerate() {
        let (a, b) = (s.branch_vertices[i], s.branch_vertices[j]);
        if p.is_empty() {
            v.push(format!("path {a}–{b} is empty"));
            continue;
        }
        if let Err(e) = p.validate_full(g, a, b, Some(s.ell), &[]) {
            v.push(format!("path {a}–{b}: {e:?}"));
        }
        for &x in p.interior() {
            if x >= g.n() {
                continue;
            }
            if is_branch[x] {
                v.push(format!("path {a}–{b} passes through branch vertex {x}"));
            }
            if owner[x] != usize::MAX && owner[x] != idx {
                v.push(format!("internal vertex {x} shared by two paths"));
            }
            owner[x] = idx;
        }
    }
    if s.k >= 3 && s.ell % 2 == 1 && matches!(bipartition(g), Bipartition::Bipartite(_)) {
        v.push(format!("odd ℓ = {} with k ≥ 3 would give an odd cycle in a bipartite host", s.ell));
    }
    SubdivisionReport { valid: v.is_empty(), violations: v }
}

/// A `TK_d^(2)` with branch vertices in `W` and subdividing vertices in `U`.
///
/// Greedily assigns distinct common neighbours in `U` to pairs of `W`; an
/// unassigned vertex of `U` then sees `d` vertices of `W` all of whose pairs
/// were assigned, and those form the branch set.
pub fn find_tk2_skewed(g: &Graph, u: &[usize], w: &[usize], d: usize) -> Result<BalancedSubdivision> {
    g.check_vertices(u)?;
    g.check_vertices(w)?;
    let in_w = mark(g.n(), w);
    let in_u = mark(g.n(), u);
    if let Some(&x) = u.iter().find(|&&x| in_w[x]) {
        return Err(Error::domain(format!("vertex {x} lies in both U and W")));
    }
    let mut us: Vec<usize> = u.to_vec();
    us.sort_unstable();
    us.dedup();
    let mut ws: Vec<usize> = w.to_vec();
    ws.sort_unstable();
    ws.dedup();
    if us.len() < ws.len() * ws.len() {
        return Err(Error::domain(format!("|U| = {} is below |W|² = {}", us.len(), ws.len() * ws.len())));
    }
    if d < 2 {
        return Err(Error::domain("d must be at least 2"));
    }
    for &x in &us {
        let deg = g.neighbors(x).iter().filter(|&&y| in_w[y]).count();
        if deg < d {
            return Err(Error::domain(format!("vertex {x} of U has only {deg} neighbours in W, fewer than {d}")));
        }
    }
    let idx = |x: usize| ws.binary_search(&x).expect("vertex of W");
    let nw = ws.len();
    let mut rep: Vec<Option<usize>> = vec![None; nw * nw];
    let mut used = vec![false; g.n()];
    for a in 0..nw {
        for b in a + 1..nw {
            let (x, y) = (ws[a], ws[b]);
            let cand = g.neighbors(x).iter().copied().find(|&z| in_u[z] && !used[z] && g.has_edge(z, y));
            if let Some(z) = cand {
                used[z] = true;
                rep[a * nw + b] = Some(z);
            }
        }
    }
    let spare = *us.iter().find(|&&z| !used[z]).expect("|U| exceeds the number of pairs");
    let branch: Vec<usize> = g.neighbors(spare).iter().copied().filter(|&y| in_w[y]).take(d).collect();
    let paths = pair_order(d)
        .into_iter()
        .map(|(i, j)| {
            let (x, y) = (branch[i], branch[j]);
            let z = rep[idx(x) * nw + idx(y)].expect("maximality assigns every pair seen by the spare vertex");
            Path::new(vec![x, z, y])
        })
        .collect();
    Ok(BalancedSubdivision { k: d, ell: 2, branch_vertices: branch, paths })
}

/// Backtracking search for a `TK_k^(ℓ)` with `ℓ` in `ell_range`, smallest
/// `ℓ` first and then lexicographically least branch set.
///
/// Branch sets are pruned by degree, by distance and, in bipartite hosts,
/// by parity. Paths are routed one pair at a time, longest current distance
/// first, with internal vertices claimed exclusively. `budget` bounds the
/// number of search nodes; `Unknown` is returned when it runs out.
pub fn find_balanced_subdivision(
    g: &Graph,
    k: usize,
    ell_range: (usize, usize),
    budget: u64,
) -> Result<Outcome<BalancedSubdivision>> {
    if k < 3 {
        return Err(Error::domain("k must be at least 3"));
    }
    if g.n() > 64 {
        return Err(Error::Capacity { what: "balanced subdivision search", n: g.n(), cap: 64 });
    }
    let (lo, hi) = ell_range;
    let side = match bipartition(g) {
        Bipartition::Bipartite(label) => Some(label.side),
        Bipartition::OddCycle { .. } => None,
    };
    let cands: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= k - 1).collect();
    let pairs = pair_order(k);
    let mut search = Backtrack { g, ell: 0, nodes: 0, budget, exhausted: false, claimed: 0, branch_mask: 0 };
    for ell in lo.max(1)..=hi {
        if k + pairs.len() * (ell - 1) > g.n() {
            break;
        }
        if k >= 3 && ell % 2 == 1 && side.is_some() {
            continue;
        }
        search.ell = ell;
        let mut combo: Vec<usize> = (0..k).collect();
        if cands.len() < k {
            break;
        }
        loop {
            let branch: Vec<usize> = combo.iter().map(|&i| cands[i]).collect();
            search.nodes += 1;
            if search.nodes > budget {
                return Ok(Outcome::Unknown(format!("search budget of {budget} nodes exhausted")));
            }
            if let Some(paths) = search.try_branch(&branch, &pairs, side.as_deref()) {
                return Ok(Outcome::Found(BalancedSubdivision { k, ell, branch_vertices: branch, paths }));
            }
            if search.exhausted {
                return Ok(Outcome::Unknown(format!("search budget of {budget} nodes exhausted")));
            }
            if !next_combination(&mut combo, cands.len()) {
                break;
            }
        }
    }
    Ok(Outcome::NotFound(format!("no TK_{k} with ℓ in [{lo}, {hi}]")))
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

struct Backtrack<'a> {
    g: &'a Graph,
    ell: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
    claimed: u64,
    branch_mask: u64,
}

impl Backtrack<'_> {
    fn try_branch(&mut self, branch: &[usize], pairs: &[(usize, usize)], side: Option<&[u8]>) -> Option<Vec<Path>> {
        let n = self.g.n();
        let others = |a: usize, b: usize| -> Vec<bool> {
            let mut m = mark(n, branch);
            m[a] = false;
            m[b] = false;
            m
        };
        // dists[p][w]: distance from w to the pair's second end avoiding other branch vertices.
        let mut routed: Vec<(usize, usize, usize, Vec<usize>)> = Vec::with_capacity(pairs.len());
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            let (a, b) = (branch[i], branch[j]);
            if let Some(s) = side {
                if (s[a] != s[b]) != (self.ell % 2 == 1) {
                    return None;
                }
            }
            let dist = bfs_distances(self.g, &[b], Some(&others(a, b)));
            if dist[a] == UNREACHABLE || dist[a] > self.ell {
                return None;
            }
            routed.push((idx, a, b, dist));
        }
        routed.sort_by_key(|(idx, a, _, dist)| (std::cmp::Reverse(dist[*a]), *idx));
        self.claimed = 0;
        self.branch_mask = branch.iter().fold(0u64, |m, &v| m | 1 << v);
        let mut found: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
        if self.route(&routed, 0, &mut found) {
            Some(found.into_iter().map(Path::new).collect())
        } else {
            None
        }
    }

    fn route(&mut self, order: &[(usize, usize, usize, Vec<usize>)], i: usize, found: &mut [Vec<usize>]) -> bool {
        if i == order.len() {
            return true;
        }
        let (idx, a, _, _) = &order[i];
        let mut stack = vec![*a];
        if self.walk(order, i, *a, self.ell, &mut stack, found) {
            found[*idx] = stack;
            true
        } else {
            false
        }
    }

    fn walk(
        &mut self,
        order: &[(usize, usize, usize, Vec<usize>)],
        i: usize,
        cur: usize,
        rem: usize,
        stack: &mut Vec<usize>,
        found: &mut [Vec<usize>],
    ) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        let (_, _, b, dist) = &order[i];
        let b = *b;
        if rem == 1 {
            if self.g.has_edge(cur, b) {
                stack.push(b);
                if self.route(order, i + 1, found) {
                    return true;
                }
                stack.pop();
            }
            return false;
        }
        let free = self.g.mask(cur) & !self.claimed & !self.branch_mask;
        for w in crate::expander::bits(free) {
            if dist[w] > rem - 1 {
                continue;
            }
            self.claimed |= 1 << w;
            stack.push(w);
            if self.walk(order, i, w, rem - 1, stack, found) {
                return true;
            }
            stack.pop();
            self.claimed &= !(1 << w);
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructParams {
    /// Ratio between the reserved expansion sizes of consecutive pairs.
    pub alpha: f64,
    /// Radius bound of the reserved expansions.
    pub m: usize,
    pub exact: ExactOptions,
}

impl Default for ConstructParams {
    fn default() -> Self {
        ConstructParams { alpha: 0.5, m: 2, exact: ExactOptions::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstructionReport {
    pub subdivision: BalancedSubdivision,
    /// Pairs in connection order, as branch indices.
    pub order: Vec<(usize, usize)>,
    /// Reserved expansion size for each pair.
    pub reserved_sizes: Vec<usize>,
    /// `|U_i|` for each pair.
    pub avoidance_sizes: Vec<usize>,
    pub stages: Vec<Option<ExactStage>>,
    /// Every path avoided its avoidance set away from its own ends.
    pub avoidance_rechecked: bool,
}

/// Builds a `TK_k^(ℓ)` in a connected bipartite host by connecting `k`
/// same-class vertices pair by pair with exact-length paths, each avoiding
/// the branch vertices, the expansions reserved for later pairs and the
/// paths already built.
pub fn construct_balanced_subdivision_expander(
    h: &Graph,
    k: usize,
    ell: usize,
    params: &ConstructParams,
) -> Result<Outcome<ConstructionReport>> {
    let parity = Parity::new(h)?;
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    if ell % 2 == 1 {
        return Err(Error::domain(format!("same-class branch vertices need even ℓ, got {ell}")));
    }
    if !(params.alpha > 0.0 && params.alpha <= 1.0) {
        return Err(Error::domain("alpha must lie in (0, 1]"));
    }
    let n = h.n();
    let class = {
        let zeros = (0..n).filter(|&v| parity.side(v) == 0).count();
        u8::from(zeros * 2 < n)
    };
    let mut same: Vec<usize> = (0..n).filter(|&v| parity.side(v) == class).collect();
    if same.len() < k {
        return Ok(Outcome::NotFound(format!("only {} vertices in the larger class", same.len())));
    }
    same.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut vs: Vec<usize> = same[..k].to_vec();
    vs.sort_unstable();

    let order = pair_order(k);
    let big_k = order.len();
    let top = (n / (4 * big_k)).max(1);
    let sizes: Vec<usize> =
        (0..big_k).map(|i| ((top as f64 * params.alpha.powi(i as i32)).floor() as usize).max(1)).collect();
    // F[a][b]: expansion of v_a reserved for the pair {a, b}, all of the largest size.
    let ds: Vec<Vec<usize>> = (0..k).map(|_| vec![top; k - 1]).collect();
    let exps = match find_vertex_expansions(h, None, &vs, &ds, params.m, &[])? {
        Outcome::Found(e) => e,
        other => return Ok(Outcome::NotFound(format!("reserved expansions: {}", describe(&other)))),
    };
    let slot = |a: usize, b: usize| if b < a { b } else { b - 1 };
    let mut reserved: Vec<(VertexExpansion, VertexExpansion)> = Vec::with_capacity(big_k);
    for (i, &(a, b)) in order.iter().enumerate() {
        reserved.push((trim_expansion(h, &exps[a][slot(a, b)], sizes[i])?, trim_expansion(h, &exps[b][slot(b, a)], sizes[i])?));
    }

    let mut paths: Vec<Path> = Vec::with_capacity(big_k);
    let mut avoidance_sizes = Vec::with_capacity(big_k);
    let mut stages = Vec::with_capacity(big_k);
    let mut avoidance_rechecked = true;
    for (i, &(a, b)) in order.iter().enumerate() {
        let (va, vb) = (vs[a], vs[b]);
        let mut u: Vec<usize> = vs.clone();
        for (h1, h2) in &reserved[i + 1..] {
            u.extend_from_slice(&h1.vertices);
            u.extend_from_slice(&h2.vertices);
        }
        for p in &paths {
            u.extend_from_slice(p.vertices());
        }
        u.retain(|&x| x != va && x != vb);
        u.sort_unstable();
        u.dedup();
        avoidance_sizes.push(u.len());
        let rep = exact_length_path(h, &u, &reserved[i].0, &reserved[i].1, ell, &params.exact)?;
        let Outcome::Found(p) = rep.path else {
            return Ok(Outcome::NotFound(format!("pair ({va}, {vb}): {}", describe(&rep.path))));
        };
        avoidance_rechecked &= p.vertices().iter().all(|x| u.binary_search(x).is_err());
        stages.push(rep.stage);
        paths.push(p);
    }
    let subdivision = BalancedSubdivision { k, ell, branch_vertices: vs, paths };
    Ok(Outcome::Found(ConstructionReport {
        subdivision,
        order,
        reserved_sizes: sizes,
        avoidance_sizes,
        stages,
        avoidance_rechecked,
    }))
}

fn describe<T>(o: &Outcome<T>) -> String {
    match o {
        Outcome::Found(_) => "found".into(),
        Outcome::NotFound(s) | Outcome::Unknown(s) => s.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn skewed_complete_bipartite() {
        let g = generators::complete_bipartite(3, 9);
        let w: Vec<usize> = (0..3).collect();
        let u: Vec<usize> = (3..12).collect();
        let s = find_tk2_skewed(&g, &u, &w, 3).unwrap();
        assert!(validate_subdivision(&g, &s).valid);
        assert!(s.branch_vertices.iter().all(|b| w.contains(b)));
        assert!(s.paths.iter().all(|p| p.interior().iter().all(|x| u.contains(x))));
        assert!(find_tk2_skewed(&g, &u[..8], &w, 3).is_err());
    }

    #[test]
    fn skewed_two_branches() {
        let g = generators::complete_bipartite(2, 4);
        let s = find_tk2_skewed(&g, &[2, 3, 4, 5], &[0, 1], 2).unwrap();
        assert_eq!(s.paths.len(), 1);
        assert_eq!(s.paths[0].len(), 2);
    }

    #[test]
    fn search_examples() {
        let k4 = generators::complete(4);
        let s = find_balanced_subdivision(&k4, 4, (1, 3), 1 << 20).unwrap().found().unwrap();
        assert_eq!(s.ell, 1);
        let c6 = generators::cycle(6);
        let s = find_balanced_subdivision(&c6, 3, (1, 3), 1 << 20).unwrap().found().unwrap();
        assert_eq!(s.ell, 2);
        assert!(validate_subdivision(&c6, &s).valid);
        // K_{2,2,2}: every 4-set contains an antipodal non-edge, and ℓ ≥ 2 needs 10 vertices.
        let oct = generators::octahedron();
        let has_k4 = (0..64u32).any(|m| m.count_ones() == 4 && crate::expander::bits(m as u64).iter().all(|&u| {
            crate::expander::bits(m as u64).iter().all(|&v| u == v || oct.has_edge(u, v))
        }));
        assert!(!has_k4);
        assert!(find_balanced_subdivision(&oct, 4, (1, 3), 1 << 20).unwrap().is_not_found());
        let s = find_balanced_subdivision(&oct, 3, (1, 1), 1 << 20).unwrap().found().unwrap();
        assert!(validate_subdivision(&oct, &s).valid);
        assert!(find_balanced_subdivision(&generators::path(6), 3, (1, 3), 1 << 20).unwrap().is_not_found());
    }

    #[test]
    fn validator_catches_tampering() {
        let c6 = generators::cycle(6);
        let s = find_balanced_subdivision(&c6, 3, (2, 2), 1 << 20).unwrap().found().unwrap();
        let mut shared = s.clone();
        let x = shared.paths[0].interior()[0];
        let mut v = shared.paths[1].clone().into_vertices();
        v[1] = x;
        shared.paths[1] = Path::new(v);
        let rep = validate_subdivision(&c6, &shared);
        assert!(rep.violations.iter().any(|m| m.contains("shared")));
        let mut wrong = s.clone();
        wrong.ell = 3;
        assert!(!validate_subdivision(&c6, &wrong).valid);
    }

    #[test]
    fn construct_in_complete_bipartite() {
        let g = generators::complete_bipartite(30, 30);
        let rep = construct_balanced_subdivision_expander(&g, 3, 4, &ConstructParams::default())
            .unwrap()
            .found()
            .unwrap();
        assert!(validate_subdivision(&g, &rep.subdivision).valid);
        assert!(rep.avoidance_rechecked);
        let one = construct_balanced_subdivision_expander(&g, 2, 4, &ConstructParams::default()).unwrap().found().unwrap();
        assert_eq!(one.subdivision.paths.len(), 1);
        assert!(construct_balanced_subdivision_expander(&g, 3, 3, &ConstructParams::default()).is_err());
    }
}
