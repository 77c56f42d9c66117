//! Exact spectrum by dynamic programming over vertex subsets.
//!
//! `dp[S]` is the set of vertices `v` such that some path starting at the
//! least vertex of `S` visits exactly `S` and ends at `v`. A cycle of length
//! `|S|` exists iff some such end is adjacent to the least vertex.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{CycleSpectrum, SpectrumMethod};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_DP_CAP: usize = 24;

/// Exact spectrum with one witness per length.
pub fn cycle_spectrum_exact(g: &Graph) -> Result<CycleSpectrum> {
    cycle_spectrum_exact_with(g, DEFAULT_DP_CAP, true)
}

pub fn cycle_spectrum_exact_with(g: &Graph, cap: usize, witnesses: bool) -> Result<CycleSpectrum> {
    let cap = cap.min(30);
    let n = g.n();
    if n > cap {
        return Err(Error::Capacity { what: "subset-DP spectrum (use the lower-bound method)", n, cap });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.mask(v) as u32).collect();
    let mut dp = vec![0u32; 1usize << n];
    let mut layers: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 1u32..(1u32 << n) {
        layers[mask.count_ones() as usize].push(mask);
    }
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    let mut first: BTreeMap<usize, u32> = BTreeMap::new();
    for k in 2..=n {
        let layer = &layers[k];
        let vals: Vec<u32> = layer
            .par_iter()
            .map(|&mask| {
                let low = mask.trailing_zeros();
                let mut rest = mask & !(1 << low);
                let mut val = 0u32;
                while rest != 0 {
                    let w = rest.trailing_zeros();
                    rest &= rest - 1;
                    if dp[(mask ^ (1 << w)) as usize] & adj[w as usize] != 0 {
                        val |= 1 << w;
                    }
                }
                val
            })
            .collect();
        for (&mask, &val) in layer.iter().zip(&vals) {
            dp[mask as usize] = val;
        }
        if k >= 3 {
            let hit = layer
                .par_iter()
                .zip(vals.par_iter())
                .find_first(|(&mask, &val)| val & adj[mask.trailing_zeros() as usize] != 0);
            if let Some((&mask, _)) = hit {
                first.insert(k, mask);
            }
        }
    }
    let witnesses = witnesses.then(|| first.iter().map(|(&k, &mask)| (k, reconstruct(&dp, &adj, mask))).collect());
    Ok(CycleSpectrum {
        lengths: first.keys().copied().collect(),
        exact: true,
        witnesses,
        n,
        average_degree: degree_f64(g),
        method: SpectrumMethod::SubsetDp,
        budget: None,
    })
}

pub(crate) fn degree_f64(g: &Graph) -> f64 {
    if g.n() == 0 {
        0.0
    } else {
        2.0 * g.edge_count() as f64 / g.n() as f64
    }
}

/// Walks a cycle on `mask` back from an end adjacent to its least vertex.
fn reconstruct(dp: &[u32], adj: &[u32], mask: u32) -> Vec<usize> {
    let low = mask.trailing_zeros();
    let mut cur = (dp[mask as usize] & adj[low as usize]).trailing_zeros();
    let mut m = mask;
    let mut seq = vec![cur as usize];
    while cur != low {
        let prev = m ^ (1 << cur);
        let u = (dp[prev as usize] & adj[cur as usize]).trailing_zeros();
        seq.push(u as usize);
        m = prev;
        cur = u;
    }
    seq.reverse();
    seq
}
