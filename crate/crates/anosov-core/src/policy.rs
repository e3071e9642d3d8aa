//! Centralized numeric tolerance policy.
//!
//! All invariant checks in this crate use tolerances drawn from one policy
//! value so they can be tightened or loosened coherently. The environment
//! variable `ANOSOV_CERT_NUMERIC_SLACK` (a positive multiplier, default 1)
//! scales every tolerance; e.g. `ANOSOV_CERT_NUMERIC_SLACK=10` makes all
//! validation ten times more permissive.
//!
//! # Tolerance rationale
//!
//! | Tolerance | Default | Basis |
//! |-----------|---------|-------|
//! | `abs_log` | 1e-10   | absolute error on log-scale quantities (Cartan vectors, trace-zero checks); ~6 guard digits over f64 eigensolver accuracy for well-conditioned d ≤ 4 matrices |
//! | `rel_dist`| 1e-9    | relative error on distances and determinants; allows accumulation through matrix square roots |
//! | `rel_sym` | 1e-12   | relative asymmetry of matrices that are symmetric by construction |
//! | `rel_gap` | 1e-8    | relative eigenvalue gap below which an ordered eigenbasis is considered unreliable |

use std::sync::OnceLock;

/// Multiplicative slack applied to all tolerances, from
/// `ANOSOV_CERT_NUMERIC_SLACK` (default 1.0). Read once per process.
fn global_slack() -> f64 {
    static SLACK: OnceLock<f64> = OnceLock::new();
    *SLACK.get_or_init(|| {
        std::env::var("ANOSOV_CERT_NUMERIC_SLACK")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v > 0.0)
            .unwrap_or(1.0)
    })
}

/// The global numeric-policy value: all tolerances used by validation.
#[derive(Debug, Clone, Copy)]
pub struct NumericPolicy {
    /// Absolute tolerance on log-scale quantities (trace-zero sums, Cartan entries).
    pub abs_log: f64,
    /// Relative tolerance on distances and determinants.
    pub rel_dist: f64,
    /// Relative tolerance on matrix symmetry.
    pub rel_sym: f64,
    /// Relative eigenvalue gap below which eigenvector ordering is rejected.
    pub rel_gap: f64,
}

impl NumericPolicy {
    /// The process-wide policy: defaults scaled by `ANOSOV_CERT_NUMERIC_SLACK`.
    pub fn global() -> Self {
        let s = global_slack();
        NumericPolicy {
            abs_log: 1e-10 * s,
            rel_dist: 1e-9 * s,
            rel_sym: 1e-12 * s,
            rel_gap: 1e-8 * s,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_the_documented_values_under_unit_slack() {
        // The test harness does not set ANOSOV_CERT_NUMERIC_SLACK, so the
        // global policy must be the documented defaults.
        let p = NumericPolicy::global();
        assert_eq!(p.abs_log, 1e-10);
        assert_eq!(p.rel_dist, 1e-9);
        assert_eq!(p.rel_sym, 1e-12);
        assert_eq!(p.rel_gap, 1e-8);
    }
}
