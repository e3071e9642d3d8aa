//! Explicit geometric comparison bounds, each a pure function that returns
//! its value together with a checked list of preconditions.
//!
//! Every bound here compares a perturbed configuration in the symmetric
//! space (a projected segment, an asymptotic geodesic, a midpoint, a rotated
//! simplex) against an exponential-decay or small-angle estimate. The
//! formulas involve e^(κ₀D − α₀l) with l up to ~10⁶, so all values are
//! produced as [`LogScalar`]s; nothing silently underflows to zero.
//!
//! Preconditions are re-evaluated exactly, with zero hidden slack, and are
//! *advisory*: a [`BoundResult`] still carries the raw value when a check
//! fails (flagged), because the local-to-global solver probes infeasible
//! regions during its search and needs the numbers.

use crate::logscalar::LogScalar;
use thiserror::Error;

/// log10(e).
const LOG10_E: f64 = std::f64::consts::LOG10_E;
/// log10(2).
const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// Errors for the bounds that have hard domain restrictions (as opposed to
/// advisory preconditions).
#[derive(Debug, Error, PartialEq)]
pub enum EstimateError {
    #[error("projection length l = {l} must exceed the endpoint displacements {dx} + {dy}")]
    ProjectionTooShort { l: f64, dx: f64, dy: f64 },
    #[error("negative input: {name} = {value}")]
    NegativeInput { name: &'static str, value: f64 },
    #[error("distance {dist} exceeds the arcsin domain bound 2/kappa0 = {max}")]
    DistanceOutOfRange { dist: f64, max: f64 },
    #[error("nonpositive input: {name} = {value}")]
    NonPositiveInput { name: &'static str, value: f64 },
}

/// One checked inequality: `pass` ⇔ lhs ≤ rhs (or lhs < rhs when `strict`),
/// with zero slack.
#[derive(Debug, Clone)]
pub struct Precondition {
    pub name: &'static str,
    pub lhs: LogScalar,
    pub rhs: LogScalar,
    pub strict: bool,
    pub pass: bool,
}

impl Precondition {
    /// Non-strict check lhs ≤ rhs.
    pub fn le(name: &'static str, lhs: LogScalar, rhs: LogScalar) -> Precondition {
        let pass = lhs.le(rhs);
        Precondition {
            name,
            lhs,
            rhs,
            strict: false,
            pass,
        }
    }

    /// Strict check lhs < rhs.
    pub fn lt(name: &'static str, lhs: LogScalar, rhs: LogScalar) -> Precondition {
        let pass = lhs.le(rhs) && lhs != rhs;
        Precondition {
            name,
            lhs,
            rhs,
            strict: true,
            pass,
        }
    }

    /// Convenience for plain f64 operands.
    pub fn le_f64(name: &'static str, lhs: f64, rhs: f64) -> Precondition {
        Precondition::le(
            name,
            LogScalar::from_f64(lhs).expect("finite lhs"),
            LogScalar::from_f64(rhs).expect("finite rhs"),
        )
    }

    pub fn lt_f64(name: &'static str, lhs: f64, rhs: f64) -> Precondition {
        Precondition::lt(
            name,
            LogScalar::from_f64(lhs).expect("finite lhs"),
            LogScalar::from_f64(rhs).expect("finite rhs"),
        )
    }
}

/// A bound value together with its advisory precondition checks.
#[derive(Debug, Clone)]
pub struct BoundResult {
    /// The bound, in the same units as the bounded quantity.
    pub value: LogScalar,
    /// Every precondition of the underlying estimate, checked exactly.
    pub preconditions: Vec<Precondition>,
}

impl BoundResult {
    /// True iff every precondition holds; the value is advisory otherwise.
    pub fn all_pass(&self) -> bool {
        self.preconditions.iter().all(|p| p.pass)
    }
}

/// log10(e^x − 1) without overflow; −∞ at x = 0.
fn log10_expm1(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x == 0.0 {
        f64::NEG_INFINITY
    } else if x < 700.0 {
        x.exp_m1().log10()
    } else {
        // e^x − 1 = e^x to beyond double precision here.
        x * LOG10_E
    }
}

/// log10(sinh x) without overflow; −∞ at x = 0, +∞ for x < 0 is never needed
/// (callers treat nonpositive arguments as degenerate).
fn log10_sinh(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x == 0.0 {
        f64::NEG_INFINITY
    } else if x < 700.0 {
        x.sinh().log10()
    } else {
        x * LOG10_E - LOG10_2
    }
}

/// c·D·e^(κ₀·m·D − α₀·l) in log-domain: the shared decay kernel.
fn decay_kernel(c: f64, d_disp: f64, cone_m: f64, kappa0: f64, alpha0: f64, l: f64) -> LogScalar {
    LogScalar::from_f64(c * d_disp)
        .expect("finite coefficient")
        .mul(LogScalar::exp(cone_m * kappa0 * d_disp - alpha0 * l))
}

/// Regularity retained after moving the endpoints of an (α₀,τ)-regular
/// segment of length l by δx and δy: the projected segment is (α₀′,τ)-regular
/// for every α₀′ ≤ α₀ − (δx+δy)(α₀+κ₀)/(l−δx−δy).
pub fn regular_projection_alpha(
    alpha0: f64,
    kappa0: f64,
    delta_x: f64,
    delta_y: f64,
    l: f64,
) -> Result<f64, EstimateError> {
    if l <= delta_x + delta_y {
        return Err(EstimateError::ProjectionTooShort {
            l,
            dx: delta_x,
            dy: delta_y,
        });
    }
    Ok(alpha0 - (delta_x + delta_y) * (alpha0 + kappa0) / (l - delta_x - delta_y))
}

/// Contraction of two strongly asymptotic regular geodesics starting at
/// distance D: after parameter l their distance is at most D·e^(κ₀D − α₀l).
pub fn strong_asymptote_bound(
    d_disp: f64,
    l: f64,
    alpha0: f64,
    kappa0: f64,
) -> Result<LogScalar, EstimateError> {
    for (name, value) in [("D", d_disp), ("l", l)] {
        if value < 0.0 {
            return Err(EstimateError::NegativeInput { name, value });
        }
    }
    Ok(decay_kernel(1.0, d_disp, 1.0, kappa0, alpha0, l))
}

/// Displacement of a midpoint under the chamber-aligning rotation k:
/// d(m, km) ≤ 2D·e^(κ₀D − α₀l), provided
/// (i)  0 < α₀′ ≤ α₀ − D(κ₀+α₀)/(2l−D), and
/// (ii) ½(e^(2κ₀D) − 1)·sinh(α₀′(2l−D))^(−2) ≤ 3e^(2κ₀D).
pub fn cone_rotation_bound(
    d_disp: f64,
    l: f64,
    alpha0: f64,
    alpha0_prime: f64,
    kappa0: f64,
) -> BoundResult {
    let projected = if 2.0 * l - d_disp > 0.0 {
        alpha0 - d_disp * (kappa0 + alpha0) / (2.0 * l - d_disp)
    } else {
        f64::NEG_INFINITY
    };
    let p1 = Precondition::le_f64("alpha0_prime <= projected regularity", alpha0_prime, projected);
    let p1b = Precondition::lt_f64("alpha0_prime positive", 0.0, alpha0_prime);

    let sinh_arg = alpha0_prime * (2.0 * l - d_disp);
    let lhs = if d_disp == 0.0 {
        LogScalar::ZERO
    } else if sinh_arg <= 0.0 {
        LogScalar::from_log10(f64::INFINITY)
    } else {
        LogScalar::from_log10(
            -LOG10_2 + log10_expm1(2.0 * kappa0 * d_disp) - 2.0 * log10_sinh(sinh_arg),
        )
    };
    let rhs = LogScalar::from_log10(3f64.log10() + 2.0 * kappa0 * d_disp * LOG10_E);
    let p2 = Precondition::le("sinh comparison", lhs, rhs);

    BoundResult {
        value: decay_kernel(2.0, d_disp, 1.0, kappa0, alpha0, l),
        preconditions: vec![p1, p1b, p2],
    }
}

/// Attraction of a far point toward the Weyl cone of an asymptotic segment:
/// d(q, V(x, st(τ), α₀′)) ≤ D·e^(κ₀D − α₀l), provided
/// α₀′ ≤ α₀ − D(α₀+κ₀)/(l−D) and (1/(α₀′ζ₀))·(D/l) ≤ ζ₀²/κ₀².
pub fn weyl_cone_attraction_bound(
    d_disp: f64,
    l: f64,
    alpha0: f64,
    alpha0_prime: f64,
    kappa0: f64,
    zeta0: f64,
) -> BoundResult {
    let projected = if l - d_disp > 0.0 {
        alpha0 - d_disp * (alpha0 + kappa0) / (l - d_disp)
    } else {
        f64::NEG_INFINITY
    };
    let p1 = Precondition::le_f64("alpha0_prime <= projected regularity", alpha0_prime, projected);
    let ratio = if l > 0.0 && alpha0_prime > 0.0 {
        d_disp / l / (alpha0_prime * zeta0)
    } else {
        f64::INFINITY
    };
    let p2 = Precondition::le_f64(
        "angle budget within antipodality threshold",
        ratio,
        zeta0 * zeta0 / (kappa0 * kappa0),
    );
    BoundResult {
        value: decay_kernel(1.0, d_disp, 1.0, kappa0, alpha0, l),
        preconditions: vec![p1, p2],
    }
}

/// Attraction of the midpoint of a long segment toward the Weyl cone of a
/// nearby segment: d(m, V(x, st(τ), α₀′)) ≤ 5D·e^(2κ₀D − α₀l), provided
/// (1) 0 < α₀′ ≤ α₀ − 2D(α₀+κ₀)/(l−2D);
/// (2) ½(e^(4κ₀D) − 1)·sinh(α₀′(2l−2D))^(−2) ≤ 3e^(4κ₀D);
/// (3) (2/(α₀′ζ₀))·(D/l) ≤ ζ₀²/κ₀².
pub fn midpoint_projection_bound(
    d_disp: f64,
    l: f64,
    alpha0: f64,
    alpha0_prime: f64,
    kappa0: f64,
    zeta0: f64,
) -> BoundResult {
    let projected = if l - 2.0 * d_disp > 0.0 {
        alpha0 - 2.0 * d_disp * (alpha0 + kappa0) / (l - 2.0 * d_disp)
    } else {
        f64::NEG_INFINITY
    };
    let p1 = Precondition::le_f64("alpha0_prime <= projected regularity", alpha0_prime, projected);
    let p1b = Precondition::lt_f64("alpha0_prime positive", 0.0, alpha0_prime);

    let sinh_arg = alpha0_prime * (2.0 * l - 2.0 * d_disp);
    let lhs = if d_disp == 0.0 {
        LogScalar::ZERO
    } else if sinh_arg <= 0.0 {
        LogScalar::from_log10(f64::INFINITY)
    } else {
        LogScalar::from_log10(
            -LOG10_2 + log10_expm1(4.0 * kappa0 * d_disp) - 2.0 * log10_sinh(sinh_arg),
        )
    };
    let rhs = LogScalar::from_log10(3f64.log10() + 4.0 * kappa0 * d_disp * LOG10_E);
    let p2 = Precondition::le("sinh comparison", lhs, rhs);

    let ratio = if l > 0.0 && alpha0_prime > 0.0 {
        2.0 * d_disp / l / (alpha0_prime * zeta0)
    } else {
        f64::INFINITY
    };
    let p3 = Precondition::le_f64(
        "angle budget within antipodality threshold",
        ratio,
        zeta0 * zeta0 / (kappa0 * kappa0),
    );

    BoundResult {
        value: decay_kernel(5.0, d_disp, 2.0, kappa0, alpha0, l),
        preconditions: vec![p1, p1b, p2, p3],
    }
}

/// ζ-angle swept by translating a simplex by a transvection of norm |X|:
/// ∠ζ(τ, e^X τ) ≤ 2·arcsin(min(1, κ₀|X|/2)).
pub fn simplex_displacement_bound(transvection_norm: f64, kappa0: f64) -> Result<f64, EstimateError> {
    if transvection_norm < 0.0 {
        return Err(EstimateError::NegativeInput {
            name: "transvection_norm",
            value: transvection_norm,
        });
    }
    Ok(2.0 * (kappa0 * transvection_norm / 2.0).min(1.0).asin())
}

/// Lower bound on the ζ-angle between two simplices seen from a point at
/// distance `dist` from their parallel set: ∠ζ ≥ π − 4·arcsin(κ₀·dist/2).
///
/// Returned raw: the value may be ≤ 0, which means the bound is vacuous;
/// callers treat nonpositive values as "no information" (clamping would hide
/// infeasibility from the solver).
pub fn distance_to_angle(dist: f64, kappa0: f64) -> Result<f64, EstimateError> {
    let max = 2.0 / kappa0;
    if dist < 0.0 {
        return Err(EstimateError::NegativeInput {
            name: "dist",
            value: dist,
        });
    }
    if dist > max {
        return Err(EstimateError::DistanceOutOfRange { dist, max });
    }
    Ok(std::f64::consts::PI - 4.0 * (kappa0 * dist / 2.0).asin())
}

/// Distance to the parallel set of two simplices whose ζ-angle is within δ of
/// π: d(q, P(τ₋,τ₊)) ≤ δ/ζ₀, provided δ ≤ ζ₀²/(2κ₀²) (otherwise antipodality
/// is not guaranteed and the bound is advisory).
pub fn angle_to_distance(delta: f64, zeta0: f64, kappa0: f64) -> BoundResult {
    let pre = Precondition::le_f64(
        "angle gap within half antipodality threshold",
        delta,
        zeta0 * zeta0 / (2.0 * kappa0 * kappa0),
    );
    BoundResult {
        value: LogScalar::from_f64(delta / zeta0).expect("finite ratio"),
        preconditions: vec![pre],
    }
}

/// Lipschitz constant of the ζ-projection on (α₀,τ)-regular directions:
/// d(Z, Z′) ≤ (1/(α₀ζ₀))·d(X, X′).
pub fn zeta_projection_lipschitz(alpha0: f64, zeta0: f64) -> Result<f64, EstimateError> {
    for (name, value) in [("alpha0", alpha0), ("zeta0", zeta0)] {
        if value <= 0.0 {
            return Err(EstimateError::NonPositiveInput { name, value });
        }
    }
    Ok(1.0 / (alpha0 * zeta0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const K3: f64 = 0.577_350_269_189_625_7; // 1/√3
    const Z3: f64 = 0.288_675_134_594_812_87; // 1/(2√3)

    #[test]
    fn regular_projection_examples() {
        assert_abs_diff_eq!(
            regular_projection_alpha(0.3, 0.5, 0.0, 0.0, 10.0).unwrap(),
            0.3,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            regular_projection_alpha(0.25, 0.5, 1.0, 1.0, 100.0).unwrap(),
            0.25 - 2.0 * 0.75 / 98.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            regular_projection_alpha(Z3, K3, 3.28, 3.28, 11200.0).unwrap(),
            0.2881676,
            epsilon = 1e-7
        );
        assert!(matches!(
            regular_projection_alpha(0.25, 0.5, 3.0, 3.0, 5.0),
            Err(EstimateError::ProjectionTooShort { .. })
        ));
    }

    #[test]
    fn strong_asymptote_matches_direct_f64_in_range() {
        let b = strong_asymptote_bound(0.433, 20.0, Z3, K3).unwrap();
        let direct = 0.433 * (K3 * 0.433 - Z3 * 20.0).exp();
        assert_abs_diff_eq!(b.to_f64(), direct, epsilon = 1e-15);
        assert_abs_diff_eq!(direct, 1.7284545795677763e-3, epsilon = 1e-15);
        // Monotone: decreasing in l, increasing in D.
        let b2 = strong_asymptote_bound(0.433, 21.0, Z3, K3).unwrap();
        assert!(b2.le(b));
        let b3 = strong_asymptote_bound(0.5, 20.0, Z3, K3).unwrap();
        assert!(b.le(b3));
        assert!(strong_asymptote_bound(-1.0, 1.0, Z3, K3).is_err());
    }

    #[test]
    fn strong_asymptote_log_domain_shift_is_exact() {
        // Deep underflow territory: stepping l by Δ shifts log10 by α₀Δ·log10(e).
        let a = strong_asymptote_bound(3.28, 5600.0, Z3, K3).unwrap();
        let b = strong_asymptote_bound(3.28, 5700.0, Z3, K3).unwrap();
        assert!(a.log10_mag() < -600.0);
        assert_abs_diff_eq!(
            a.log10_mag() - b.log10_mag(),
            Z3 * 100.0 * std::f64::consts::LOG10_E,
            epsilon = 1e-9
        );
    }

    #[test]
    fn cone_rotation_examples() {
        let zero = cone_rotation_bound(0.0, 10.0, Z3, 0.25, K3);
        assert!(zero.value.is_zero());
        assert!(zero.all_pass());

        let ok = cone_rotation_bound(1.0, 50.0, Z3, 0.25, K3);
        let direct = 2.0 * (K3 - Z3 * 50.0).exp();
        assert_abs_diff_eq!(ok.value.to_f64(), direct, epsilon = 1e-18);
        assert!(ok.all_pass());

        // Too-short segment: the projected regularity goes negative.
        let bad = cone_rotation_bound(1.0, 1.0, Z3, 0.28, K3);
        assert!(!bad.preconditions[0].pass);
    }

    #[test]
    fn weyl_cone_attraction_examples() {
        let ok = weyl_cone_attraction_bound(1.0, 100.0, Z3, 0.27, K3, Z3);
        let direct = (K3 - Z3 * 100.0).exp();
        assert_abs_diff_eq!(ok.value.to_f64(), direct, epsilon = 1e-25);
        assert!(ok.all_pass());

        // (1/(0.05·ζ₀))·(1/10) = 6.93 > 0.25: angle budget fails.
        let bad = weyl_cone_attraction_bound(1.0, 10.0, Z3, 0.05, K3, Z3);
        assert!(bad.preconditions[0].pass);
        assert!(!bad.preconditions[1].pass);

        let zero = weyl_cone_attraction_bound(0.0, 10.0, Z3, 0.27, K3, Z3);
        assert!(zero.value.is_zero());
    }

    #[test]
    fn midpoint_projection_pipeline_instance_passes() {
        let r = midpoint_projection_bound(3.28, 5600.45, Z3, 0.2815, K3, Z3);
        assert!(r.all_pass(), "preconditions: {:?}", r.preconditions);
        // Angle-budget check value from direct arithmetic.
        let ratio = 2.0 / (0.2815 * Z3) * (3.28 / 5600.45);
        assert_abs_diff_eq!(ratio, 0.014415, epsilon = 1e-5);
        // Value is ~10^(−700): deep log-domain.
        assert!(r.value.log10_mag() < -600.0 && r.value.log10_mag() > -800.0);

        let short = midpoint_projection_bound(1.0, 5.0, Z3, 0.2815, K3, Z3);
        assert!(!short.all_pass());
    }

    #[test]
    fn midpoint_projection_matches_direct_f64_in_range() {
        let r = midpoint_projection_bound(0.5, 60.0, Z3, 0.25, K3, Z3);
        let direct = 5.0 * 0.5 * (2.0 * K3 * 0.5 - Z3 * 60.0).exp();
        assert_abs_diff_eq!(r.value.to_f64(), direct, epsilon = 1e-18);
    }

    #[test]
    fn simplex_displacement_examples() {
        assert_eq!(simplex_displacement_bound(0.0, K3).unwrap(), 0.0);
        assert_abs_diff_eq!(
            simplex_displacement_bound(1.0, K3).unwrap(),
            2.0 * (K3 / 2.0).asin(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(simplex_displacement_bound(1.0, K3).unwrap(), 0.5860, epsilon = 1e-3);
        // Saturation at norm ≥ 2/κ₀.
        assert_abs_diff_eq!(
            simplex_displacement_bound(5.0, K3).unwrap(),
            std::f64::consts::PI,
            epsilon = 1e-15
        );
        assert!(simplex_displacement_bound(-1.0, K3).is_err());
    }

    #[test]
    fn distance_to_angle_examples() {
        assert_abs_diff_eq!(
            distance_to_angle(0.0, K3).unwrap(),
            std::f64::consts::PI,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(distance_to_angle(0.1, K3).unwrap(), 3.02610655622734, epsilon = 1e-10);
        // At the domain edge the bound is vacuous (−π), returned raw.
        assert_abs_diff_eq!(
            distance_to_angle(2.0 / K3, K3).unwrap(),
            -std::f64::consts::PI,
            epsilon = 1e-12
        );
        assert!(distance_to_angle(2.0 / K3 + 0.01, K3).is_err());
    }

    #[test]
    fn angle_to_distance_examples() {
        let zero = angle_to_distance(0.0, Z3, K3);
        assert!(zero.value.is_zero());
        assert!(zero.all_pass());

        // δ = ζ₀²/(2κ₀²) = 0.125: equality passes (non-strict).
        let edge = angle_to_distance(0.125, Z3, K3);
        assert_abs_diff_eq!(edge.value.to_f64(), 0.4330127, epsilon = 1e-7);
        assert!(edge.all_pass());

        let bad = angle_to_distance(0.2, Z3, K3);
        assert!(!bad.all_pass());
    }

    #[test]
    fn zeta_projection_lipschitz_examples() {
        assert_abs_diff_eq!(zeta_projection_lipschitz(1.0, 1.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(zeta_projection_lipschitz(Z3, Z3).unwrap(), 12.0, epsilon = 1e-9);
        assert_abs_diff_eq!(
            zeta_projection_lipschitz(0.287235, Z3).unwrap(),
            12.06,
            epsilon = 1e-2
        );
        assert!(zeta_projection_lipschitz(0.0, 1.0).is_err());
    }

    #[test]
    fn distance_to_angle_is_decreasing_in_dist() {
        let mut prev = f64::INFINITY;
        for i in 0..20 {
            let d = i as f64 * 0.15;
            let a = distance_to_angle(d, K3).unwrap();
            assert!(a < prev);
            prev = a;
        }
    }
}
