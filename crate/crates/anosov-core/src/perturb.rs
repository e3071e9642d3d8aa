//! Log-domain perturbation estimates: how far the orbit of a word can move
//! when every generator of a matrix group is perturbed in Frobenius norm.
//!
//! The chain of bounds, for generators with Frobenius norm ≤ A perturbed by
//! at most ε and words of length ≤ k:
//!
//! 1. word products move by at most 2kA^(k−1)ε in Frobenius norm
//!    ([`word_perturbation_bound`]);
//! 2. a Frobenius perturbation of size f moves the orbit point by at most
//!    √(2)·d·(d−1)·f in the symmetric-space metric ([`frob_to_distance`]);
//! 3. combining the two over the length-(2k−1) words that arise when
//!    comparing two orbit segments gives the orbit displacement bound
//!    √8·d·(d−1)·k·A^(2k−1)·ε ([`orbit_displacement_bound`]);
//! 4. inverting (3) for a target displacement yields the certified
//!    neighborhood radius ([`neighborhood_radius`]) — quantities like
//!    10^(−15,308) that only exist in log-domain.
//!
//! [`local_morse_transfer`] then converts an orbit displacement budget into
//! relaxed Morse/quasigeodesic parameters valid at the local scale 2k.

use crate::estimates::{BoundResult, Precondition};
use crate::l2g::MorseQIParams;
use crate::logscalar::LogScalar;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PerturbError {
    #[error("word radius k = {0} must be at least 3")]
    WordRadiusTooSmall(u64),
    #[error("generator norm bound A = {0} must be at least 1")]
    NormBoundTooSmall(f64),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("returned radius violates the bound's own precondition (target displacement too large)")]
    PreconditionViolatedAtRadius,
}

/// A perturbation setting: dimension d, max generator Frobenius norm A, word
/// radius k, generator perturbation ε, and the displacement budget.
#[derive(Debug, Clone, Copy)]
pub struct PerturbationScenario {
    pub d: usize,
    pub a_norm: f64,
    pub k: u64,
    pub eps: LogScalar,
    pub target_disp: f64,
}

impl PerturbationScenario {
    pub fn new(
        d: usize,
        a_norm: f64,
        k: u64,
        eps: LogScalar,
        target_disp: f64,
    ) -> Result<PerturbationScenario, PerturbError> {
        if k < 3 {
            return Err(PerturbError::WordRadiusTooSmall(k));
        }
        if !(a_norm >= 1.0) {
            return Err(PerturbError::NormBoundTooSmall(a_norm));
        }
        if d < 2 || !target_disp.is_finite() || target_disp < 0.0 || eps.sign() < 0 {
            return Err(PerturbError::BadInput(
                "need d >= 2, target_disp >= 0, eps >= 0".into(),
            ));
        }
        Ok(PerturbationScenario {
            d,
            a_norm,
            k,
            eps,
            target_disp,
        })
    }
}

/// Frobenius distance between a length-k word in the original generators and
/// the same word in ε-perturbed generators: at most 2kA^(k−1)ε, valid when
/// k ≥ 3 and (k−1)ε/(2A) ≤ 1.
pub fn word_perturbation_bound(a_norm: f64, eps: LogScalar, k: u64) -> BoundResult {
    let p1 = Precondition::le_f64("word length at least 3", 3.0, k as f64);
    let growth = eps
        .mul(LogScalar::from_f64((k as f64 - 1.0) / (2.0 * a_norm)).expect("finite ratio"));
    let p2 = Precondition::le("relative perturbation budget", growth, LogScalar::ONE);
    let value = LogScalar::from_f64(2.0 * k as f64)
        .expect("finite 2k")
        .mul(LogScalar::from_f64(a_norm).expect("finite A").powi(k as i64 - 1))
        .mul(eps);
    BoundResult {
        value,
        preconditions: vec![p1, p2],
    }
}

/// Symmetric-space displacement of the basepoint caused by a matrix within
/// Frobenius distance f of the identity: d(gp, p) ≤ √d·(d−1)·|g−1|, where the
/// norm at p is √(2d) times Frobenius — in total √2·d·(d−1)·f.
pub fn frob_to_distance(d: usize, frob_diff: LogScalar) -> Result<LogScalar, PerturbError> {
    if d < 2 {
        return Err(PerturbError::BadInput(format!("d = {d} must be at least 2")));
    }
    let factor = std::f64::consts::SQRT_2 * d as f64 * (d as f64 - 1.0);
    Ok(frob_diff.mul(LogScalar::from_f64(factor).expect("finite factor")))
}

/// Orbit displacement of any word of length ≤ k under an ε-perturbation of
/// the generators: d(ρ′(γ)p, ρ(γ)p) ≤ √8·d·(d−1)·k·A^(2k−1)·ε.
pub fn orbit_displacement_bound(sc: &PerturbationScenario) -> BoundResult {
    // The underlying word estimate is applied to words of length 2k−1, with
    // its stated preconditions on k and the relative perturbation size.
    let word = word_perturbation_bound(sc.a_norm, sc.eps, sc.k);
    let value = LogScalar::from_f64(8f64.sqrt() * sc.d as f64 * (sc.d as f64 - 1.0) * sc.k as f64)
        .expect("finite coefficient")
        .mul(
            LogScalar::from_f64(sc.a_norm)
                .expect("finite A")
                .powi(2 * sc.k as i64 - 1),
        )
        .mul(sc.eps);
    BoundResult {
        value,
        preconditions: word.preconditions,
    }
}

/// Invert the orbit displacement bound: the generator perturbation radius ε
/// such that every word of length ≤ k moves its orbit point by at most
/// `target_disp`. Returned in log-domain (exponents like −15,308 are normal).
pub fn neighborhood_radius(
    d: usize,
    a_norm: f64,
    k: u64,
    target_disp: f64,
) -> Result<LogScalar, PerturbError> {
    let sc_probe = PerturbationScenario::new(d, a_norm, k, LogScalar::ONE, target_disp)?;
    let denom = LogScalar::from_f64(8f64.sqrt() * d as f64 * (d as f64 - 1.0) * k as f64)
        .expect("finite coefficient")
        .mul(LogScalar::from_f64(a_norm).expect("finite A").powi(2 * k as i64 - 1));
    let eps = LogScalar::from_f64(target_disp)
        .expect("finite target")
        .div(denom);
    // Self-consistency: the displacement bound at the returned ε must equal
    // the target exactly (in log-domain) and satisfy its own preconditions.
    let sc = PerturbationScenario { eps, ..sc_probe };
    let check = orbit_displacement_bound(&sc);
    if target_disp > 0.0 {
        let roundtrip = check.value.log10_mag() - target_disp.log10();
        assert!(
            roundtrip.abs() <= 1e-12 * target_disp.log10().abs().max(1.0),
            "round trip drifted by {roundtrip}"
        );
    }
    if !check.all_pass() {
        return Err(PerturbError::PreconditionViolatedAtRadius);
    }
    Ok(eps)
}

/// Round a positive radius down to the nearest integer power of ten
/// (conservative for certification output); returns the integer exponent.
pub fn floor_power_of_ten(radius: LogScalar) -> Option<i64> {
    if radius.sign() <= 0 {
        return None;
    }
    Some(radius.log10_mag().floor() as i64)
}

/// Frobenius-norm bound for any group element displacing the basepoint by at
/// most 2R+1: |g| ≤ exp((2R+1)/√(2d)).
pub fn generator_frob_bound(d: usize, two_r_plus_1: f64) -> Result<f64, PerturbError> {
    if d < 2 || !(two_r_plus_1 >= 0.0) {
        return Err(PerturbError::BadInput(
            "need d >= 2 and a nonnegative displacement bound".into(),
        ));
    }
    Ok((two_r_plus_1 / (2.0 * d as f64).sqrt()).exp())
}

/// Transfer a global Morse/quasigeodesic parameter set through an orbit
/// displacement of at most `eps_disp` on words of length ≤ k_w: the perturbed
/// orbit map is a 2k_w-local (α₀, D+ε)-Morse (c₁, c₂+ε, c₃, c₄+ε)-embedding.
pub fn local_morse_transfer(
    base: &MorseQIParams,
    eps_disp: f64,
    k_w: u64,
) -> Result<(u64, MorseQIParams), PerturbError> {
    if !(eps_disp >= 0.0) || k_w < 1 {
        return Err(PerturbError::BadInput(
            "need eps_disp >= 0 and k_w >= 1".into(),
        ));
    }
    let relaxed = MorseQIParams {
        alpha0: base.alpha0,
        d_disp: base.d_disp + eps_disp,
        c1: base.c1,
        c2: base.c2 + eps_disp,
        c3: base.c3,
        c4: base.c4 + eps_disp,
    };
    Ok((2 * k_w, relaxed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn word_perturbation_small_case() {
        let eps = LogScalar::from_f64(0.001).unwrap();
        let r = word_perturbation_bound(2.0, eps, 3);
        assert_abs_diff_eq!(r.value.to_f64(), 0.024, epsilon = 1e-15);
        assert!(r.all_pass());
        // Zero perturbation gives a zero bound.
        let z = word_perturbation_bound(2.0, LogScalar::ZERO, 5);
        assert!(z.value.is_zero());
        // k = 2 violates the word-length precondition.
        assert!(!word_perturbation_bound(2.0, eps, 2).all_pass());
    }

    #[test]
    fn word_perturbation_deep_log_domain() {
        let eps = LogScalar::from_log10(-15_309.0);
        let r = word_perturbation_bound(2.8535691936340255, eps, 16_801);
        assert!(r.all_pass());
        let expected = (2.0 * 16_801f64).log10()
            + 16_800.0 * 2.8535691936340255f64.log10()
            - 15_309.0;
        assert_abs_diff_eq!(r.value.log10_mag(), expected, epsilon = 1e-9);
    }

    #[test]
    fn frob_to_distance_constants() {
        let one = LogScalar::ONE;
        assert_abs_diff_eq!(
            frob_to_distance(3, one).unwrap().to_f64(),
            8.4853,
            epsilon = 1e-3
        );
        assert_abs_diff_eq!(
            frob_to_distance(2, one).unwrap().to_f64(),
            2.8284,
            epsilon = 1e-3
        );
        assert!(frob_to_distance(3, LogScalar::ZERO).unwrap().is_zero());
    }

    #[test]
    fn orbit_displacement_soundness_of_quoted_radii() {
        // Free-group radius: displacement stays below 0.1.
        let sc = PerturbationScenario::new(
            3,
            2.8536,
            16_801,
            LogScalar::from_log10(-15_309.0),
            0.1,
        )
        .unwrap();
        let r = orbit_displacement_bound(&sc);
        assert!(r.all_pass());
        assert!(r.value.le(LogScalar::from_f64(0.1).unwrap()));
        assert_abs_diff_eq!(r.value.log10_mag(), -1.88, epsilon = 2e-2);

        // Surface-group radius with the exact generator norm bound.
        let sc = PerturbationScenario::new(
            3,
            47.98473544628638,
            1_100_000,
            LogScalar::from_log10(-3_698_433.0),
            10.0,
        )
        .unwrap();
        let r = orbit_displacement_bound(&sc);
        assert!(r.all_pass());
        assert!(r.value.le(LogScalar::from_f64(10.0).unwrap()));
        assert_abs_diff_eq!(r.value.log10_mag(), -0.5796, epsilon = 1e-3);
    }

    #[test]
    fn orbit_displacement_monotone_in_a_k_eps() {
        let base = PerturbationScenario::new(3, 2.0, 100, LogScalar::from_log10(-500.0), 1.0).unwrap();
        let v0 = orbit_displacement_bound(&base).value;
        let mut bigger_a = base;
        bigger_a.a_norm = 2.5;
        let mut bigger_k = base;
        bigger_k.k = 150;
        let mut bigger_eps = base;
        bigger_eps.eps = LogScalar::from_log10(-400.0);
        for sc in [bigger_a, bigger_k, bigger_eps] {
            assert!(v0.le(orbit_displacement_bound(&sc).value));
        }
    }

    #[test]
    fn neighborhood_radius_roundtrip_and_linearity() {
        let eps = neighborhood_radius(3, 2.8535691936340255, 16_801, 0.1).unwrap();
        assert_abs_diff_eq!(eps.log10_mag(), -15_307.9609228, epsilon = 1e-6);
        // More generous than the quoted radius 10^(−15,309).
        assert!(LogScalar::from_log10(-15_309.0).le(eps));

        let surf = neighborhood_radius(3, 47.98473544628638, 1_100_000, 10.0).unwrap();
        assert_abs_diff_eq!(surf.log10_mag(), -3_698_431.42044771, epsilon = 1e-5);

        // Doubling the target shifts the radius by exactly log10(2).
        let eps2 = neighborhood_radius(3, 2.8535691936340255, 16_801, 0.2).unwrap();
        assert_abs_diff_eq!(
            eps2.log10_mag() - eps.log10_mag(),
            std::f64::consts::LOG10_2,
            epsilon = 1e-12
        );
    }

    #[test]
    fn floor_power_of_ten_is_conservative() {
        assert_eq!(floor_power_of_ten(LogScalar::from_log10(-15_307.96)), Some(-15_308));
        assert_eq!(floor_power_of_ten(LogScalar::from_log10(2.5)), Some(2));
        assert_eq!(floor_power_of_ten(LogScalar::ZERO), None);
    }

    #[test]
    fn generator_frob_bound_examples() {
        assert_abs_diff_eq!(generator_frob_bound(3, 9.5).unwrap(), 48.3448, epsilon = 1e-3);
        assert_abs_diff_eq!(
            generator_frob_bound(3, 9.481688078589611).unwrap(),
            47.98473544628638,
            epsilon = 1e-9
        );
        assert_eq!(generator_frob_bound(4, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn local_morse_transfer_relaxes_additive_parameters() {
        let base = MorseQIParams::new(0.2886751, 3.18, 1.0 / 1.2802, 0.0, 3.38, 0.0).unwrap();
        let (scale, relaxed) = local_morse_transfer(&base, 0.1, 16_801).unwrap();
        assert_eq!(scale, 33_602);
        assert_abs_diff_eq!(relaxed.d_disp, 3.28, epsilon = 1e-12);
        assert_abs_diff_eq!(relaxed.c2, 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(relaxed.c4, 0.1, epsilon = 1e-12);
        assert_eq!(relaxed.c3, 3.38);

        let (scale0, same) = local_morse_transfer(&base, 0.0, 7).unwrap();
        assert_eq!(scale0, 14);
        assert_eq!(&same, &base);
    }
}
