//! Paths whose length falls in a prescribed window.

use crate::connect::{low_diameter_core, shortest_connection, CoreParams};
use crate::error::Result;
use crate::graph::{mark, Graph, Path};
use crate::outcome::Outcome;

use super::expansion::{check_disjoint, VertexExpansion};

/// Default slack of a single window path, `min(5m, n)`.
pub fn window_slack(m: usize, n: usize) -> usize {
    (5 * m).min(n)
}

/// Default combined slack of a pair of window paths, `min(22m, n)`.
pub fn pair_window_slack(m: usize, n: usize) -> usize {
    (22 * m).min(n)
}

/// A `v1,v2`-path in `G − W` of length in `[ell, ell + slack]`, where `v1`,
/// `v2` are the centers of `f1`, `f2`.
///
/// Iterative lengthening: two partial paths grow from `v1` and `v2` and are
/// closed by a shortest connection. Each move extends one partial path,
/// either by a single vertex or by a detour towards the center of a
/// low-diameter core of the unused graph, choosing the longest closed total
/// that stays within the window's upper end.
pub fn path_in_window(
    g: &Graph,
    w: &[usize],
    f1: &VertexExpansion,
    f2: &VertexExpansion,
    ell: usize,
    slack: usize,
) -> Result<Outcome<Path>> {
    check_disjoint(g, &[&f1.vertices, &f2.vertices, w])?;
    if ell > g.n() {
        return Ok(Outcome::NotFound(format!("no simple path has length {ell} > n")));
    }
    Ok(lengthen(g, &mark(g.n(), w), f1.center, f2.center, ell, ell + slack))
}

struct Partial<'a> {
    g: &'a Graph,
    blocked: &'a [bool],
    used: Vec<bool>,
    ends: [Vec<usize>; 2],
}

impl Partial<'_> {
    fn closing(&self) -> Option<Path> {
        let (a, b) = (*self.ends[0].last().unwrap(), *self.ends[1].last().unwrap());
        let n = self.g.n();
        let mut blocked: Vec<bool> = (0..n).map(|v| self.blocked[v] || self.used[v]).collect();
        blocked[a] = false;
        blocked[b] = false;
        shortest_connection(self.g, &mark(n, &[a]), &mark(n, &[b]), &blocked)
    }

    fn base(&self) -> usize {
        self.ends[0].len() + self.ends[1].len() - 2
    }

    fn total(&self) -> Option<usize> {
        self.closing().map(|c| self.base() + c.len())
    }

    /// Total after appending `ext` to side `s`, or `None` if it disconnects.
    fn total_with(&mut self, s: usize, ext: &[usize]) -> Option<usize> {
        for &v in ext {
            self.used[v] = true;
            self.ends[s].push(v);
        }
        let t = self.total();
        for &v in ext.iter().rev() {
            self.used[v] = false;
            self.ends[s].pop();
        }
        t
    }

    fn apply(&mut self, s: usize, ext: &[usize]) {
        for &v in ext {
            self.used[v] = true;
            self.ends[s].push(v);
        }
    }

    fn free(&self, v: usize) -> bool {
        !self.blocked[v] && !self.used[v]
    }

    fn assemble(&self) -> Path {
        let close = self.closing().expect("closing path exists");
        let mut vs = self.ends[0].clone();
        vs.extend_from_slice(&close.vertices()[1..close.vertices().len() - 1]);
        vs.extend(self.ends[1].iter().rev());
        Path::new(vs)
    }

    /// Best single-vertex move that does not shorten the total: the largest
    /// total at most `hi`, first side and smallest id on ties.
    fn best_step(&mut self, current: usize, hi: usize) -> Option<(usize, usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for s in 0..2 {
            let end = *self.ends[s].last().unwrap();
            let cands: Vec<usize> = self.g.neighbors(end).iter().copied().filter(|&v| self.free(v)).collect();
            for v in cands {
                if let Some(t) = self.total_with(s, &[v]) {
                    if t <= hi && t >= current && best.is_none_or(|(bt, _, _)| t > bt) {
                        best = Some((t, s, v));
                    }
                }
            }
        }
        best
    }

    /// Detour towards the center of a low-diameter core of the unused graph.
    fn best_detour(&mut self, current: usize, hi: usize) -> Option<(usize, usize, Vec<usize>)> {
        let n = self.g.n();
        let w: Vec<usize> = (0..n).filter(|&v| !self.free(v)).collect();
        let free = n - w.len();
        if free < 2 {
            return None;
        }
        let params = CoreParams { target: Some((free / 8).max(2)), ..CoreParams::default() };
        let core = low_diameter_core(self.g, &w, &params).ok()?.found()?;
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        for s in 0..2 {
            let end = *self.ends[s].last().unwrap();
            let mut blocked: Vec<bool> = (0..n).map(|v| !self.free(v)).collect();
            blocked[end] = false;
            let Some(route) = shortest_connection(self.g, &mark(n, &[end]), &mark(n, &[core.center]), &blocked) else {
                continue;
            };
            let tail = &route.vertices()[1..];
            for k in (1..=tail.len()).rev() {
                if let Some(t) = self.total_with(s, &tail[..k]) {
                    if t <= hi && t > current {
                        if best.as_ref().is_none_or(|(bt, _, _)| t > *bt) {
                            best = Some((t, s, tail[..k].to_vec()));
                        }
                        break;
                    }
                }
            }
        }
        best
    }
}

/// Lengthening loop on an explicit blocked set.
pub(crate) fn lengthen(g: &Graph, blocked: &[bool], v1: usize, v2: usize, ell: usize, hi: usize) -> Outcome<Path> {
    if blocked[v1] || blocked[v2] {
        return Outcome::NotFound("an endpoint is blocked".into());
    }
    if v1 == v2 {
        return if ell == 0 {
            Outcome::Found(Path::single(v1))
        } else {
            Outcome::NotFound("endpoints coincide".into())
        };
    }
    let mut used = vec![false; g.n()];
    used[v1] = true;
    used[v2] = true;
    let mut st = Partial { g, blocked, used, ends: [vec![v1], vec![v2]] };
    loop {
        let Some(total) = st.total() else {
            return Outcome::NotFound("the avoided set separates the endpoints".into());
        };
        if total >= ell && total <= hi {
            return Outcome::Found(st.assemble());
        }
        if total > hi {
            return Outcome::NotFound(format!("shortest completion has length {total} > {hi}"));
        }
        let step = st.best_step(total, hi);
        match step {
            Some((t, s, v)) if t > total => st.apply(s, &[v]),
            _ => {
                if let Some((_, s, ext)) = st.best_detour(total, hi) {
                    st.apply(s, &ext);
                } else if let Some((_, s, v)) = step {
                    st.apply(s, &[v]);
                } else {
                    return Outcome::NotFound(format!("lengthening stalled at length {total} below {ell}"));
                }
            }
        }
    }
}

/// Two disjoint paths `P` (from the center of `fs[0]`) and `Q` (from the
/// center of `fs[1]`) ending at the centers of `fs[2]` and `fs[3]` in some
/// order, with combined length in `[ell, ell + slack]`.
///
/// One path is a shortest connection avoiding the two expansions it does
/// not join; the other absorbs the remaining length through
/// [`path_in_window`].
pub fn two_paths_in_window(
    g: &Graph,
    a_avoid: &[usize],
    fs: [&VertexExpansion; 4],
    ell: usize,
    slack: usize,
) -> Result<Outcome<(Path, Path)>> {
    let mut sets: Vec<&[usize]> = fs.iter().map(|f| f.vertices.as_slice()).collect();
    sets.push(a_avoid);
    check_disjoint(g, &sets)?;
    let n = g.n();
    let hi = ell + slack;
    // (from, to) index pairs for P and Q.
    let assignments = [((0, 2), (1, 3)), ((0, 3), (1, 2))];
    for (pa, qa) in assignments {
        for short_first in [true, false] {
            let (short, long) = if short_first { (pa, qa) } else { (qa, pa) };
            let mut blocked = mark(n, a_avoid);
            for &v in fs[long.0].vertices.iter().chain(&fs[long.1].vertices) {
                blocked[v] = true;
            }
            let (a, b) = (fs[short.0].center, fs[short.1].center);
            let Some(sp) = shortest_connection(g, &mark(n, &[a]), &mark(n, &[b]), &blocked) else {
                continue;
            };
            if sp.len() > hi {
                continue;
            }
            let mut w = mark(n, a_avoid);
            for &v in sp.vertices() {
                w[v] = true;
            }
            let lo = ell.saturating_sub(sp.len());
            let lp = match lengthen(g, &w, fs[long.0].center, fs[long.1].center, lo, hi - sp.len()) {
                Outcome::Found(p) => p,
                _ => continue,
            };
            let (p, q) = if short_first { (sp, lp) } else { (lp, sp) };
            return Ok(Outcome::Found((p, q)));
        }
    }
    Ok(Outcome::NotFound(format!("no pair of disjoint connections with total length in [{ell}, {hi}]")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadget::find_vertex_expansions;
    use crate::generators;

    #[test]
    fn window_in_complete_bipartite() {
        let g = generators::complete_bipartite(20, 20);
        let exps = find_vertex_expansions(&g, None, &[0, 20], &[vec![5], vec![5]], 1, &[])
            .unwrap()
            .found()
            .unwrap();
        let p = path_in_window(&g, &[], &exps[0][0], &exps[1][0], 9, 4).unwrap().found().unwrap();
        assert!(p.validate_full(&g, 0, 20, None, &[]).is_ok());
        assert!((9..=13).contains(&p.len()) && p.len() % 2 == 1);
    }

    #[test]
    fn shortest_qualifies_and_pigeonhole() {
        let g = generators::grid(4, 4);
        let (a, b) = (VertexExpansion::bare(0), VertexExpansion::bare(15));
        let p = path_in_window(&g, &[], &a, &b, 6, 0).unwrap().found().unwrap();
        assert_eq!(p.len(), 6);
        assert!(path_in_window(&g, &[], &a, &b, 17, 3).unwrap().is_not_found());
    }

    #[test]
    fn exact_lengths_by_lengthening() {
        let g = generators::complete_bipartite(6, 6);
        let blocked = vec![false; 12];
        for ell in [1, 3, 5, 7, 9, 11] {
            let p = lengthen(&g, &blocked, 0, 6, ell, ell).found().unwrap();
            assert!(p.validate_full(&g, 0, 6, Some(ell), &[]).is_ok(), "ell {ell}");
        }
    }

    #[test]
    fn two_paths() {
        let g = generators::complete_bipartite(30, 30);
        let exps = find_vertex_expansions(&g, None, &[0, 1, 30, 31], &vec![vec![4]; 4], 1, &[])
            .unwrap()
            .found()
            .unwrap();
        let fs: Vec<_> = exps.iter().map(|r| &r[0]).collect();
        let (p, q) = two_paths_in_window(&g, &[], [fs[0], fs[1], fs[2], fs[3]], 12, 4).unwrap().found().unwrap();
        assert!(p.validate(&g).is_ok() && q.validate(&g).is_ok());
        assert!(p.vertices().iter().all(|v| !q.contains(*v)));
        assert_eq!((p.start(), q.start()), (0, 1));
        let ends = [p.end(), q.end()];
        assert!(ends == [30, 31] || ends == [31, 30]);
        assert!((12..=16).contains(&(p.len() + q.len())));
    }

    #[test]
    fn two_single_edges() {
        let g = generators::complete_bipartite(3, 3);
        let fs: Vec<_> = [0, 1, 3, 4].into_iter().map(VertexExpansion::bare).collect();
        let (p, q) = two_paths_in_window(&g, &[], [&fs[0], &fs[1], &fs[2], &fs[3]], 2, 0).unwrap().found().unwrap();
        assert_eq!((p.len(), q.len()), (1, 1));
    }

    #[test]
    fn everything_avoided() {
        let g = generators::cycle(8);
        let fs: Vec<_> = [0, 2, 4, 6].into_iter().map(VertexExpansion::bare).collect();
        let avoid = [1, 3, 5, 7];
        let out = two_paths_in_window(&g, &avoid, [&fs[0], &fs[1], &fs[2], &fs[3]], 2, 4).unwrap();
        assert!(out.is_not_found());
    }
}
