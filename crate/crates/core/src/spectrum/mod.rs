//! Cycle-length spectra and the quantities read off them.

mod exact;
mod lower;
mod property_p;
mod report;

pub use exact::{cycle_spectrum_exact, cycle_spectrum_exact_with, DEFAULT_DP_CAP};
pub use lower::{cycle_spectrum_lower, cycle_spectrum_lower_with, LowerConfig, DEFAULT_CC_CAP};
pub use property_p::{property_p_check, PropertyPReport, DEFAULT_PROPERTY_P_CAP};
pub use report::{
    even_interval_report, hits_sequence, odd_interval_report, spectrum_report, EvenIntervalReport, GrowthReport,
    OddIntervalReport, SequenceHit, SequenceKind, SequenceSpec, SpectrumReport,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMethod {
    SubsetDp,
    LowerBound,
}

/// The set of cycle lengths of a graph, or a certified subset of it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleSpectrum {
    pub lengths: Vec<usize>,
    /// Whether `lengths` is the complete set.
    pub exact: bool,
    /// One cycle per length, as a vertex sequence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<usize, Vec<usize>>>,
    pub n: usize,
    pub average_degree: f64,
    pub method: SpectrumMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl CycleSpectrum {
    pub fn contains(&self, len: usize) -> bool {
        self.lengths.binary_search(&len).is_ok()
    }

    /// Checks every retained witness; returns the offending length.
    pub fn revalidate(&self, g: &Graph) -> Result<(), usize> {
        for (&len, cycle) in self.witnesses.iter().flatten() {
            if cycle.len() != len || !is_cycle(g, cycle) || !self.contains(len) {
                return Err(len);
            }
        }
        Ok(())
    }
}

/// Whether `cycle` is a simple closed cycle of `g` with at least 3 vertices.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

/// Lengths congruent to `a` modulo `b`.
pub fn residue_spectrum(s: &CycleSpectrum, a: usize, b: usize) -> crate::Result<Vec<usize>> {
    if b == 0 {
        return Err(crate::Error::domain("modulus must be at least 1"));
    }
    Ok(s.lengths.iter().copied().filter(|&l| l % b == a % b).collect())
}

/// `Σ 1/ℓ` with Neumaier compensated summation.
pub fn harmonic_sum(lengths: &[usize]) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for &l in lengths {
        let x = 1.0 / l as f64;
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_examples() {
        assert!((harmonic_sum(&[3, 4]) - 7.0 / 12.0).abs() < 1e-15);
        assert_eq!(harmonic_sum(&[]), 0.0);
    }

    #[test]
    fn residues() {
        let s = CycleSpectrum {
            lengths: vec![3, 4],
            exact: true,
            witnesses: None,
            n: 4,
            average_degree: 3.0,
            method: SpectrumMethod::SubsetDp,
            budget: None,
        };
        assert_eq!(residue_spectrum(&s, 1, 2).unwrap(), vec![3]);
        assert_eq!(residue_spectrum(&s, 0, 1).unwrap(), vec![3, 4]);
        assert!(residue_spectrum(&s, 0, 0).is_err());
        let empty = CycleSpectrum { lengths: vec![], ..s };
        assert!(residue_spectrum(&empty, 1, 2).unwrap().is_empty());
    }
}
