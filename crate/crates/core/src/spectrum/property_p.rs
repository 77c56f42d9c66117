//! Exhaustive check that a bipartite graph realizes every parity-allowed
//! path length in a range between every pair of vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadget::{exact_length_path_oracle, OracleConfig};
use crate::graph::{Graph, Parity};
use crate::outcome::Outcome;

pub const DEFAULT_PROPERTY_P_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyPReport {
    pub holds: bool,
    /// First `(u, v, t)` with no `u,v`-path of length `t`.
    pub counterexample: Option<(usize, usize, usize)>,
    /// `(u, v, t)` triples decided.
    pub checked: usize,
}

/// For all `u < v` and all `t ∈ [ell, upper]` with `t ≡ π(u, v) mod 2`,
/// checks that a `u,v`-path of length `t` exists.
pub fn property_p_check(h: &Graph, ell: usize, upper: usize) -> Result<PropertyPReport> {
    if h.n() > DEFAULT_PROPERTY_P_CAP {
        return Err(Error::Capacity { what: "property P check", n: h.n(), cap: DEFAULT_PROPERTY_P_CAP });
    }
    let parity = Parity::new(h)?;
    let cfg = OracleConfig::default();
    let mut checked = 0;
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            let pi = parity.pi(u, v) as usize;
            let first = ell.max(1);
            let first = first + (first + pi) % 2;
            for t in (first..=upper).step_by(2) {
                checked += 1;
                match exact_length_path_oracle(h, u, v, t, &cfg)? {
                    Outcome::Found(_) => {}
                    Outcome::NotFound(_) => {
                        return Ok(PropertyPReport { holds: false, counterexample: Some((u, v, t)), checked })
                    }
                    Outcome::Unknown(why) => {
                        return Err(Error::precondition(format!("undecided at ({u}, {v}, {t}): {why}")))
                    }
                }
            }
        }
    }
    Ok(PropertyPReport { holds: true, counterexample: None, checked })
}
