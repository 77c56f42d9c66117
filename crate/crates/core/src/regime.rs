//! Records whether an instance met the asymptotic hypotheses under which a
//! construction is guaranteed to succeed.
//!
//! Desk-scale inputs almost never do. Reports carry these flags so that a
//! success or a miss can be read against the regime it happened in.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RegimeFlags(BTreeMap<String, bool>);

impl RegimeFlags {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, key: impl Into<String>, value: bool) -> &mut Self {
        self.0.insert(key.into(), value);
        self
    }

    pub fn with(mut self, key: impl Into<String>, value: bool) -> Self {
        self.set(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<bool> {
        self.0.get(key).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn merge(&mut self, other: &RegimeFlags) {
        for (k, v) in other.iter() {
            self.set(k, v);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `ln^p(x)`, zero for `x <= 1`.
pub fn ln_pow(x: f64, p: i32) -> f64 {
    if x <= 1.0 {
        0.0
    } else {
        x.ln().powi(p)
    }
}

/// Ball-growth radius `m = (16/ε₁)·ln³n`.
pub fn growth_radius(n: usize, eps1: f64) -> f64 {
    16.0 / eps1 * ln_pow(n as f64, 3)
}

/// Short-growth depth `ℓ₀ = (ln ln n)⁵`, zero when `ln n ≤ 1`.
pub fn short_depth(n: usize) -> f64 {
    let l = (n as f64).ln();
    if l <= 1.0 {
        0.0
    } else {
        l.ln().powi(5)
    }
}

/// Flags shared by every report that works inside an expander on `n`
/// vertices with growth radius `m`.
pub fn scale_flags(n: usize, eps1: f64) -> RegimeFlags {
    let m = growth_radius(n, eps1);
    RegimeFlags::new()
        .with("growth_radius_below_n", m < n as f64)
        .with("short_depth_at_least_one", short_depth(n) >= 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert_eq!(ln_pow(1.0, 3), 0.0);
        assert!((growth_radius(100, 1.0) - 16.0 * 100f64.ln().powi(3)).abs() < 1e-9);
        assert_eq!(short_depth(2), 0.0);
        assert!((short_depth(1_000_000) - (1e6f64).ln().ln().powi(5)).abs() < 1e-9);
    }

    #[test]
    fn desk_scale_is_out_of_regime() {
        let f = scale_flags(1000, 0.5);
        assert_eq!(f.get("growth_radius_below_n"), Some(false));
    }

    #[test]
    fn flags_serialize_sorted() {
        let f = RegimeFlags::new().with("b", true).with("a", false);
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"a":false,"b":true}"#);
    }
}
