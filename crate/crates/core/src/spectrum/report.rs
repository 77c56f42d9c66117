//! Interval, residue and sequence readings of a spectrum.

use serde::{Deserialize, Serialize};

use super::{harmonic_sum, CycleSpectrum};
use crate::error::{Error, Result};
use crate::regime::ln_pow;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvenIntervalReport {
    /// Largest even `ℓ` whose interval is fully present.
    pub best_ell: Option<usize>,
    pub holds: bool,
    /// Lower endpoint used for `best_ell`.
    pub lower_endpoint: Option<usize>,
    /// Even lengths between 4 and the largest even length that are absent.
    pub missing: Vec<usize>,
    /// `⌈ln⁸ℓ⌉` exceeded `ℓ`, so the interval was taken from 4.
    pub degenerate: bool,
    /// `d/(10·ln¹²d)` for the average degree `d`.
    pub guaranteed_ell: f64,
    /// The guaranteed length is below 4 and says nothing.
    pub guarantee_vacuous: bool,
    /// The spectrum is a lower bound, so a failure is only "not shown".
    pub one_sided: bool,
}

fn even_ceil(x: f64) -> usize {
    let c = x.ceil().max(0.0) as usize;
    c + c % 2
}

/// Largest even `ℓ ∈ S` such that every even integer in
/// `[max(4, ⌈ln⁸ℓ⌉), ℓ]` is in `S`; when that lower end exceeds `ℓ` the
/// whole run `[4, ℓ]` is required instead and the report is marked degenerate.
pub fn even_interval_report(s: &CycleSpectrum) -> EvenIntervalReport {
    let evens: Vec<usize> = s.lengths.iter().copied().filter(|l| l % 2 == 0).collect();
    let top = evens.last().copied().unwrap_or(0);
    let missing: Vec<usize> = (4..=top).step_by(2).filter(|l| !s.contains(*l)).collect();
    let d = s.average_degree;
    let guaranteed_ell = if d > 1.0 { d / (10.0 * ln_pow(d, 12)) } else { 0.0 };
    let mut rep = EvenIntervalReport {
        best_ell: None,
        holds: false,
        lower_endpoint: None,
        missing,
        degenerate: false,
        guaranteed_ell,
        guarantee_vacuous: guaranteed_ell < 4.0,
        one_sided: !s.exact,
    };
    for &ell in evens.iter().rev() {
        let mut lo = even_ceil(ln_pow(ell as f64, 8)).max(4);
        let degenerate = lo > ell;
        if degenerate {
            lo = 4;
        }
        if (lo..=ell).step_by(2).all(|l| s.contains(l)) {
            rep.best_ell = Some(ell);
            rep.holds = true;
            rep.lower_endpoint = Some(lo);
            rep.degenerate = degenerate;
            break;
        }
    }
    rep
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OddIntervalReport {
    /// Maximal runs of consecutive odd lengths, as `(first, last)`.
    pub runs: Vec<(usize, usize)>,
    /// `(ℓ, r)` with every odd integer in `[ℓ, ℓ·r]` present and `r` largest.
    pub best: Option<(usize, f64)>,
    pub one_sided: bool,
}

pub fn odd_interval_report(s: &CycleSpectrum) -> OddIntervalReport {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for l in s.lengths.iter().copied().filter(|l| l % 2 == 1) {
        match runs.last_mut() {
            Some(run) if run.1 + 2 == l => run.1 = l,
            _ => runs.push((l, l)),
        }
    }
    let mut best: Option<(usize, f64)> = None;
    for &(a, b) in &runs {
        let r = b as f64 / a as f64;
        if best.is_none_or(|(_, br)| r > br) {
            best = Some((a, r));
        }
    }
    OddIntervalReport { runs, best, one_sided: !s.exact }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SequenceKind {
    /// `4, 8, 16, …`.
    PowersOfTwo,
    /// `a, a+d, a+2d, …`.
    Arithmetic { a: usize, d: usize },
    /// `start, ⌊c·start⌋, …`, each term at least one more than the last.
    Geometric { start: usize, ratio: f64 },
    Explicit { terms: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub kind: SequenceKind,
    /// Keep only terms of this parity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<u8>,
}

impl SequenceSpec {
    pub fn new(kind: SequenceKind) -> Self {
        SequenceSpec { kind, parity: None }
    }

    /// Parses `pow2`, `arith:a,d`, `geom:start,ratio` or `list:a,b,c`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unrecognised sequence `{text}`"));
        let (head, args) = text.split_once(':').unwrap_or((text, ""));
        let nums = |s: &str| -> Result<Vec<f64>> {
            s.split(',').map(|t| t.trim().parse::<f64>().map_err(|_| bad())).collect()
        };
        let kind = match head.trim() {
            "pow2" | "powers_of_two" => SequenceKind::PowersOfTwo,
            "arith" => match nums(args)?.as_slice() {
                [a, d] => SequenceKind::Arithmetic { a: *a as usize, d: *d as usize },
                _ => return Err(bad()),
            },
            "geom" => match nums(args)?.as_slice() {
                [s, r] => SequenceKind::Geometric { start: *s as usize, ratio: *r },
                _ => return Err(bad()),
            },
            "list" => SequenceKind::Explicit { terms: nums(args)?.into_iter().map(|x| x as usize).collect() },
            _ => return Err(bad()),
        };
        Ok(SequenceSpec::new(kind))
    }

    /// Terms not exceeding `upto`, after the parity filter.
    pub fn terms(&self, upto: usize) -> Result<Vec<usize>> {
        let mut out: Vec<usize> = match &self.kind {
            SequenceKind::PowersOfTwo => (2..usize::BITS).map(|i| 1usize << i).take_while(|&t| t <= upto).collect(),
            SequenceKind::Arithmetic { a, d } => {
                if *d == 0 {
                    return Err(Error::domain("arithmetic step must be positive"));
                }
                (0..).map(|i| a + i * d).take_while(|&t| t <= upto).collect()
            }
            SequenceKind::Geometric { start, ratio } => {
                if !(*ratio > 1.0) || *start == 0 {
                    return Err(Error::domain("geometric sequences need start ≥ 1 and ratio > 1"));
                }
                let mut v = Vec::new();
                let mut t = *start;
                while t <= upto {
                    v.push(t);
                    t = ((t as f64 * ratio).floor() as usize).max(t + 1);
                }
                v
            }
            SequenceKind::Explicit { terms } => {
                if terms.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::domain("sequence must be strictly increasing"));
                }
                terms.iter().copied().filter(|&t| t <= upto).collect()
            }
        };
        if let Some(p) = self.parity {
            out.retain(|t| t % 2 == p as usize % 2);
        }
        Ok(out)
    }
}

/// Whether consecutive terms obey the growth conditions on unavoidable
/// sequences, checked over the queried range.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    /// `σ_{i+1} ≤ exp(σ_i^{1/10})` for every consecutive pair.
    pub sub_exponential: bool,
    /// Largest `σ_{i+1}/σ_i`.
    pub max_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SequenceHit {
    /// Least term present in the spectrum.
    pub hit: Option<usize>,
    pub index: Option<usize>,
    /// A miss is definitive only for an exact spectrum.
    pub miss_is_exact: bool,
    pub growth: GrowthReport,
}

pub fn hits_sequence(s: &CycleSpectrum, seq: &SequenceSpec) -> Result<SequenceHit> {
    let terms = seq.terms(s.n.max(3))?;
    let idx = terms.iter().position(|&t| s.contains(t));
    let growth = GrowthReport {
        sub_exponential: terms.windows(2).all(|w| (w[1] as f64) <= (w[0] as f64).powf(0.1).exp()),
        max_ratio: terms.windows(2).map(|w| w[1] as f64 / w[0] as f64).reduce(f64::max),
    };
    Ok(SequenceHit {
        hit: idx.map(|i| terms[i]),
        index: idx,
        miss_is_exact: idx.is_none() && s.exact,
        growth,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub lengths: Vec<usize>,
    pub exact: bool,
    pub method: super::SpectrumMethod,
    pub missing_evens: Vec<usize>,
    pub even_interval: EvenIntervalReport,
    pub odd_runs: OddIntervalReport,
    pub harmonic_sum: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sequence_hits: Vec<(SequenceSpec, SequenceHit)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<((usize, usize), Vec<usize>)>,
}

pub fn spectrum_report(
    s: &CycleSpectrum,
    sequences: &[SequenceSpec],
    residue: Option<(usize, usize)>,
) -> Result<SpectrumReport> {
    let even = even_interval_report(s);
    let sequence_hits =
        sequences.iter().map(|q| hits_sequence(s, q).map(|h| (q.clone(), h))).collect::<Result<Vec<_>>>()?;
    let residue = residue.map(|(a, b)| super::residue_spectrum(s, a, b).map(|r| ((a, b), r))).transpose()?;
    Ok(SpectrumReport {
        lengths: s.lengths.clone(),
        exact: s.exact,
        method: s.method,
        missing_evens: even.missing.clone(),
        even_interval: even,
        odd_runs: odd_interval_report(s),
        harmonic_sum: harmonic_sum(&s.lengths),
        sequence_hits,
        residue,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::SpectrumMethod;

    fn spec(lengths: &[usize]) -> CycleSpectrum {
        CycleSpectrum {
            lengths: lengths.to_vec(),
            exact: true,
            witnesses: None,
            n: lengths.last().copied().unwrap_or(3),
            average_degree: 4.0,
            method: SpectrumMethod::SubsetDp,
            budget: None,
        }
    }

    #[test]
    fn even_reports() {
        let all: Vec<usize> = (4..=24).step_by(2).collect();
        let r = even_interval_report(&spec(&all));
        assert_eq!(r.best_ell, Some(24));
        assert!(r.degenerate && r.holds && r.guarantee_vacuous);
        let r = even_interval_report(&spec(&[4, 8]));
        assert_eq!(r.best_ell, Some(4));
        assert_eq!(r.missing, vec![6]);
        let r = even_interval_report(&spec(&[]));
        assert!(r.best_ell.is_none() && !r.holds);
    }

    #[test]
    fn odd_reports() {
        let r = odd_interval_report(&spec(&[3, 4, 5, 6, 7]));
        let (ell, ratio) = r.best.unwrap();
        assert_eq!(ell, 3);
        assert!((ratio - 7.0 / 3.0).abs() < 1e-12);
        assert!(odd_interval_report(&spec(&[4, 6])).best.is_none());
        assert_eq!(odd_interval_report(&spec(&[5])).best, Some((5, 1.0)));
    }

    #[test]
    fn sequences() {
        let pow2 = SequenceSpec::new(SequenceKind::PowersOfTwo);
        let k99: Vec<usize> = (4..=18).step_by(2).collect();
        let mut s = spec(&k99);
        s.n = 18;
        assert_eq!(hits_sequence(&s, &pow2).unwrap().hit, Some(4));
        let c5 = CycleSpectrum { n: 5, ..spec(&[5]) };
        let h = hits_sequence(&c5, &pow2).unwrap();
        assert!(h.hit.is_none() && h.miss_is_exact);
        let arith = SequenceSpec::new(SequenceKind::Arithmetic { a: 3, d: 4 });
        assert_eq!(hits_sequence(&spec(&[3, 4]), &arith).unwrap().hit, Some(3));
        let bad = SequenceSpec::new(SequenceKind::Explicit { terms: vec![4, 4] });
        assert!(hits_sequence(&s, &bad).is_err());
    }

    #[test]
    fn parse_sequences() {
        assert_eq!(SequenceSpec::parse("pow2").unwrap().kind, SequenceKind::PowersOfTwo);
        assert_eq!(SequenceSpec::parse("arith:3,4").unwrap().kind, SequenceKind::Arithmetic { a: 3, d: 4 });
        assert!(SequenceSpec::parse("nope").is_err());
        assert!(SequenceSpec::parse("arith:3").is_err());
    }
}
