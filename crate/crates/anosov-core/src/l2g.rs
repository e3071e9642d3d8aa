//! Local-to-global machinery for Morse quasigeodesics: condition checkers
//! for the two sufficient criteria and a deterministic parameter solver that
//! produces a finite verification scale L together with explicit global
//! Morse/quasigeodesic constants.
//!
//! The two criteria:
//!
//! 1. **Straight-and-spaced** ([`check_straight_spaced`]): a sequence whose
//!    consecutive ζ-angles are within ε of π and whose consecutive distances
//!    are at least s is a Morse quasigeodesic, provided five explicit
//!    inequalities in (α_in, α_out, δ, ε, s) hold. The conclusion carries the
//!    spacing increment 2·α_out·ζ₀·c₀·(s−2δ) per step.
//! 2. **Midpoint sequences** ([`check_quadruple`]): points spaced ≥ k apart
//!    along an (α₀,τ,D)-Morse (c₁,c₂)-lower-quasigeodesic have midpoint
//!    triples that are (α_out,τ,ε)-straight and s-spaced, provided the listed
//!    conditions in the auxiliary parameters (l, δ_aux, α_int) hold.
//!
//! [`solve_local_scale`] chains the two: it fixes ε, δ, δ_aux and the α chain
//! from the documented heuristics, finds the minimal feasible s and then the
//! minimal feasible l by monotone doubling plus bisection (at fixed rounding
//! granularities, so results are reproducible and conservatively feasible),
//! sets k = ⌈c₁(2l+c₂)⌉ and L = 3k, and evaluates the five global-constant
//! formulas:
//!
//! - D′ = c₃k + (3/2)c₄ + δ
//! - (c₁′)⁻¹ = 2·α_out·ζ₀·c₀·(s−2δ)/k
//! - c₂′ = 2·α_out·ζ₀·c₀·(s−2δ) + 2δ + 2c₃k + 3c₄
//! - c₃′ = c₃ + c₄/L
//! - c₄′ = c₄

use crate::logscalar::LogScalar;
use crate::symspace::ModelConstants;
use thiserror::Error;

/// Rounding granularity for the spacing parameter s.
const S_GRANULARITY: f64 = 0.01;
/// Rounding granularity for the half-separation parameter l.
const L_GRANULARITY: f64 = 0.25;
/// Search cap: beyond this the system is declared infeasible.
const SEARCH_CAP: f64 = 1e9;

#[derive(Debug, Error)]
pub enum L2gError {
    #[error("invalid Morse/quasigeodesic parameters: {0}")]
    BadMorseParams(String),
    #[error("invalid checker parameters: {0}")]
    BadCheckerParams(String),
    #[error("spacing s = {s} must exceed 2*delta = {two_delta}")]
    SpacingTooSmall { s: f64, two_delta: f64 },
    #[error("empty alpha chain: alpha_out = {alpha_out} must be below alpha0 = {alpha0}")]
    EmptyAlphaChain { alpha_out: f64, alpha0: f64 },
    #[error("infeasible: condition {blocking:?} still fails for {parameter} = {at:.3e} (search cap)")]
    Infeasible {
        parameter: &'static str,
        blocking: String,
        at: f64,
    },
}

/// One checked inequality of a condition system: pass ⇔ lhs ≤ rhs with zero slack.
/// `margin` = rhs − lhs (nonnegative iff pass, up to the sign convention).
#[derive(Debug, Clone)]
pub struct Condition {
    pub name: &'static str,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
}

impl Condition {
    fn le(name: &'static str, lhs: f64, rhs: f64) -> Condition {
        Condition {
            name,
            lhs,
            rhs,
            margin: rhs - lhs,
            pass: lhs <= rhs,
        }
    }
}

/// Morse quasigeodesic parameters of an orbit map: the sandwich
/// (1/c₁)|N| − c₂ ≤ d(xᵢ, xᵢ₊ₙ) ≤ c₃|N| + c₄ together with the regularity α₀
/// and the Morse constant D (distance to a diamond).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseQIParams {
    pub alpha0: f64,
    /// Morse constant (denoted D): neighborhood size around diamonds.
    pub d_disp: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

impl MorseQIParams {
    /// Validates: α₀ > 0, D ≥ 0, c₁ > 0, c₂ ≥ 0, c₃ > 0, c₄ ≥ 0, and the
    /// slope sanity 1/c₁ ≤ c₃ (the lower quasigeodesic slope cannot exceed
    /// the upper one). c₁ < 1 is allowed: a lower slope steeper than the word
    /// metric occurs for orbit maps of strongly contracting generators.
    pub fn new(
        alpha0: f64,
        d_disp: f64,
        c1: f64,
        c2: f64,
        c3: f64,
        c4: f64,
    ) -> Result<MorseQIParams, L2gError> {
        let all = [alpha0, d_disp, c1, c2, c3, c4];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(L2gError::BadMorseParams("non-finite parameter".into()));
        }
        if alpha0 <= 0.0 {
            return Err(L2gError::BadMorseParams(format!("alpha0 = {alpha0} must be positive")));
        }
        if d_disp < 0.0 || c2 < 0.0 || c4 < 0.0 {
            return Err(L2gError::BadMorseParams("D, c2, c4 must be nonnegative".into()));
        }
        if c1 <= 0.0 || c3 <= 0.0 {
            return Err(L2gError::BadMorseParams("c1 and c3 must be positive".into()));
        }
        if 1.0 / c1 > c3 {
            return Err(L2gError::BadMorseParams(format!(
                "lower slope 1/c1 = {} exceeds upper slope c3 = {}",
                1.0 / c1,
                c3
            )));
        }
        Ok(MorseQIParams {
            alpha0,
            d_disp,
            c1,
            c2,
            c3,
            c4,
        })
    }
}

/// Parameters of the straight-and-spaced criterion. `alpha_in` is the
/// regularity of the given sequence; `alpha_out` the regularity of the
/// resulting Morse quasigeodesic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StraightSpacedParams {
    pub alpha_in: f64,
    pub alpha_out: f64,
    pub delta: f64,
    pub epsilon: f64,
    pub s: f64,
}

impl StraightSpacedParams {
    pub fn new(
        alpha_in: f64,
        alpha_out: f64,
        delta: f64,
        epsilon: f64,
        s: f64,
    ) -> Result<StraightSpacedParams, L2gError> {
        let all = [alpha_in, alpha_out, delta, epsilon, s];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(L2gError::BadCheckerParams("non-finite parameter".into()));
        }
        if !(0.0 < alpha_out && alpha_out < alpha_in) {
            return Err(L2gError::BadCheckerParams(format!(
                "need 0 < alpha_out ({alpha_out}) < alpha_in ({alpha_in})"
            )));
        }
        if epsilon < 0.0 || delta <= 0.0 || s <= 0.0 {
            return Err(L2gError::BadCheckerParams(
                "epsilon must be >= 0; delta, s must be positive".into(),
            ));
        }
        Ok(StraightSpacedParams {
            alpha_in,
            alpha_out,
            delta,
            epsilon,
            s,
        })
    }
}

/// Report of the straight-and-spaced checker.
#[derive(Debug, Clone)]
pub struct StraightSpacedReport {
    pub conditions: Vec<Condition>,
    /// ε = 0 is accepted but flagged: conditions degenerate to trivial form.
    pub degenerate: bool,
    /// The conclusion's coarse-spacing increment 2·α_out·ζ₀·c₀·(s−2δ): each
    /// step of the sequence advances at least this far along the ζ-ray.
    pub spacing_increment: f64,
}

impl StraightSpacedReport {
    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }
}

/// Check the five conditions of the straight-and-spaced criterion.
///
/// Condition 5 involves the exact antipodality angle gap ε(ζ), for which only
/// the lower bound ζ₀²/κ₀² is available; the check is enforced non-strictly
/// against that conservative stand-in (strictness against the true ε(ζ) is
/// then automatic).
pub fn check_straight_spaced(
    mc: &ModelConstants,
    p: &StraightSpacedParams,
) -> Result<StraightSpacedReport, L2gError> {
    let (a0, an, delta, eps, s) = (p.alpha_in, p.alpha_out, p.delta, p.epsilon, p.s);
    let (k0, z0) = (mc.kappa0, mc.zeta0);
    let thr = mc.antipodal_threshold;
    if s <= 2.0 * delta {
        return Err(L2gError::SpacingTooSmall {
            s,
            two_delta: 2.0 * delta,
        });
    }

    let mut conditions = Vec::with_capacity(5);
    conditions.push(Condition::le("1_epsilon_vs_antipodality", 5.0 * eps, thr / 2.0));

    let decay = (eps * k0 / z0) * (2.0 * k0 * eps / z0 - a0 * s).exp();
    conditions.push(Condition::le("2_decay_vs_sin", decay, (eps / 4.0).sin()));

    conditions.push(Condition::le("3_parallel_set_distance", 5.0 * eps / z0, delta));

    let projected = a0 - 2.0 * delta * (a0 + k0) / (s - 2.0 * delta);
    conditions.push(Condition::le("4_projected_regularity", an, projected));

    let asin_arg = 2.0 * delta / (a0 * z0 * s);
    let angle_sum = if asin_arg <= 1.0 {
        2.0 * eps + asin_arg.asin()
    } else {
        f64::INFINITY
    };
    conditions.push(Condition::le("5_antipodality_angle", angle_sum, thr));

    Ok(StraightSpacedReport {
        conditions,
        degenerate: eps == 0.0,
        spacing_increment: 2.0 * an * z0 * mc.c0 as f64 * (s - 2.0 * delta),
    })
}

/// Parameters of the midpoint-sequence criterion. `alpha0` is the regularity
/// of the given Morse quasigeodesic, `alpha_int` the internal auxiliary
/// regularity, `alpha_out` the regularity of the produced midpoint triples;
/// `delta_aux` the midpoint-to-diamond distance budget; (c₁,c₂) the lower
/// quasigeodesic constants; k the step spacing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrupleParams {
    pub alpha0: f64,
    pub alpha_int: f64,
    pub alpha_out: f64,
    pub d_disp: f64,
    pub epsilon: f64,
    pub c1: f64,
    pub c2: f64,
    pub s: f64,
    pub l: f64,
    pub delta_aux: f64,
    pub k: u64,
}

impl QuadrupleParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alpha0: f64,
        alpha_int: f64,
        alpha_out: f64,
        d_disp: f64,
        epsilon: f64,
        c1: f64,
        c2: f64,
        s: f64,
        l: f64,
        delta_aux: f64,
        k: u64,
    ) -> Result<QuadrupleParams, L2gError> {
        let all = [alpha0, alpha_int, alpha_out, d_disp, epsilon, c1, c2, s, l, delta_aux];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(L2gError::BadCheckerParams("non-finite parameter".into()));
        }
        if !(0.0 < alpha_out && alpha_out < alpha_int && alpha_int < alpha0) {
            return Err(L2gError::BadCheckerParams(format!(
                "need 0 < alpha_out ({alpha_out}) < alpha_int ({alpha_int}) < alpha0 ({alpha0})"
            )));
        }
        if d_disp < 0.0 || epsilon < 0.0 || delta_aux < 0.0 || c1 <= 0.0 || c2 < 0.0 {
            return Err(L2gError::BadCheckerParams(
                "D, epsilon, delta_aux, c2 must be >= 0 and c1 > 0".into(),
            ));
        }
        if s <= 0.0 || l <= 0.0 {
            return Err(L2gError::BadCheckerParams("s and l must be positive".into()));
        }
        Ok(QuadrupleParams {
            alpha0,
            alpha_int,
            alpha_out,
            d_disp,
            epsilon,
            c1,
            c2,
            s,
            l,
            delta_aux,
            k,
        })
    }
}

/// Report of the midpoint-sequence checker.
#[derive(Debug, Clone)]
pub struct QuadrupleReport {
    pub conditions: Vec<Condition>,
    /// D = 0 and δ_aux = 0 is accepted but flagged degenerate.
    pub degenerate: bool,
}

impl QuadrupleReport {
    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.pass)
    }
}

/// Check the conditions of the midpoint-sequence criterion. Degenerate
/// denominators (l too small relative to δ_aux and D) surface as failed
/// conditions with infinite left-hand sides, not as errors, so the solver can
/// probe freely.
pub fn check_quadruple(mc: &ModelConstants, p: &QuadrupleParams) -> Result<QuadrupleReport, L2gError> {
    let (a0, aa, an) = (p.alpha0, p.alpha_int, p.alpha_out);
    let (dd, delta, l, s) = (p.d_disp, p.delta_aux, p.l, p.s);
    let (k0, z0) = (mc.kappa0, mc.zeta0);
    let thr = mc.antipodal_threshold;

    let mut conditions = Vec::with_capacity(8);

    conditions.push(Condition::le(
        "1_k_spacing",
        p.c1 * (2.0 * l + p.c2),
        p.k as f64,
    ));

    // 1 ≤ 6·sinh(α_int(2l−2D))², restated in the bounded equivalent form
    // α_int(2l−2D) ≥ asinh(1/√6).
    let sinh_floor = (1.0 / 6f64.sqrt()).asinh();
    conditions.push(Condition::le(
        "2a_sinh_floor",
        sinh_floor,
        aa * (2.0 * l - 2.0 * dd),
    ));

    let ratio = if l > 0.0 { dd / l / (aa * z0) } else { f64::INFINITY };
    conditions.push(Condition::le("2b_angle_budget", ratio, thr));

    // 5D·e^(2κ₀D − α₀l) ≤ δ_aux, compared in log-domain so neither side
    // under- or overflows; reported values saturate to f64.
    let decay = LogScalar::from_f64(5.0 * dd)
        .expect("finite coefficient")
        .mul(LogScalar::exp(2.0 * k0 * dd - a0 * l));
    let delta_ls = LogScalar::from_f64(delta).expect("finite delta");
    conditions.push(Condition {
        name: "2c_midpoint_to_diamond",
        lhs: decay.to_f64(),
        rhs: delta,
        margin: delta - decay.to_f64(),
        pass: decay.le(delta_ls),
    });

    conditions.push(Condition::le(
        "3_midpoint_spacing",
        s,
        (2.0 * aa / k0) * (l - delta - dd),
    ));

    let denom4a = l - delta - 2.0 * dd;
    let lhs4a = if denom4a > 0.0 {
        (a0 * delta + 3.0 * a0 * dd + 2.0 * k0 * dd) / denom4a
    } else {
        f64::INFINITY
    };
    conditions.push(Condition::le("4a_alpha0_to_alpha_int_gap", lhs4a, a0 - aa));

    let denom4b = 2.0 * aa * (l - delta - dd) - 2.0 * k0 * delta;
    let lhs4b = if denom4b > 0.0 {
        2.0 * k0 * delta * (aa + k0) / denom4b
    } else {
        f64::INFINITY
    };
    conditions.push(Condition::le("4b_alpha_int_to_alpha_out_gap", lhs4b, aa - an));

    // Five-term straightness sum ≤ ε/π.
    let denom5b = 2.0 * aa * (l - delta - dd) - delta * k0;
    let sum = if l > 0.0 && l - dd > 0.0 && l - delta > 0.0 && denom5b > 0.0 {
        dd / l / (aa * z0)
            + k0 * delta / denom5b / (an * z0)
            + delta / (l - dd) / (2.0 * aa * z0)
            + delta / (l - delta) / (2.0 * an * z0)
            + 2.0 * k0 * delta
    } else {
        f64::INFINITY
    };
    conditions.push(Condition::le(
        "5_straightness_sum",
        sum,
        p.epsilon / std::f64::consts::PI,
    ));

    Ok(QuadrupleReport {
        conditions,
        degenerate: dd == 0.0 && delta == 0.0,
    })
}

/// The five global Morse/quasigeodesic constants produced by the
/// local-to-global principle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalMorseParams {
    pub d_prime: f64,
    pub c1_prime: f64,
    pub c2_prime: f64,
    pub c3_prime: f64,
    pub c4_prime: f64,
}

/// Evaluate the five global-constant formulas at the given solution values.
pub fn global_params(
    k: u64,
    s: f64,
    delta: f64,
    alpha_out: f64,
    mc: &ModelConstants,
    morse: &MorseQIParams,
) -> GlobalMorseParams {
    let kf = k as f64;
    let scale = 3.0 * kf;
    let spacing = 2.0 * alpha_out * mc.zeta0 * mc.c0 as f64 * (s - 2.0 * delta);
    GlobalMorseParams {
        d_prime: morse.c3 * kf + 1.5 * morse.c4 + delta,
        c1_prime: kf / spacing,
        c2_prime: spacing + 2.0 * delta + 2.0 * morse.c3 * kf + 3.0 * morse.c4,
        c3_prime: morse.c3 + morse.c4 / scale,
        c4_prime: morse.c4,
    }
}

/// How the two criteria are chained: the roles assigned to the α values when
/// applying the straight-and-spaced step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchPolicy {
    /// The wiring of the local-to-global proof: the midpoint sequence
    /// produced at regularity α_mid feeds the straight-and-spaced step with
    /// input α_mid and output α_out.
    Default,
    /// The wiring spelled out in the worked free-group application: the
    /// straight-and-spaced step is applied with input α₀ and output α_mid.
    /// Exposed for reproducing that computation; global constants then hold
    /// at regularity α_mid.
    Paper52,
}

impl SearchPolicy {
    /// Stable name embedded in reports.
    pub fn name(&self) -> &'static str {
        match self {
            SearchPolicy::Default => "default",
            SearchPolicy::Paper52 => "paper-5.2",
        }
    }

    pub fn from_name(name: &str) -> Option<SearchPolicy> {
        match name {
            "default" => Some(SearchPolicy::Default),
            "paper-5.2" => Some(SearchPolicy::Paper52),
            _ => None,
        }
    }
}

/// A complete local-to-global solution: all auxiliary values, the scale
/// L = 3k, the global constants, and both condition reports re-verified at
/// the returned values.
#[derive(Debug, Clone)]
pub struct L2GSolution {
    pub policy: SearchPolicy,
    pub epsilon: f64,
    pub delta: f64,
    pub delta_aux: f64,
    pub alpha0: f64,
    pub alpha_mid: f64,
    pub alpha_int: f64,
    pub alpha_out: f64,
    pub s: f64,
    pub l: f64,
    pub k: u64,
    /// The verification scale L = 3k.
    pub scale: u64,
    pub global: GlobalMorseParams,
    pub straight: StraightSpacedReport,
    pub quadruple: QuadrupleReport,
}

/// Minimal feasible multiple of `gran` in [floor(lo/gran), cap/gran] for a
/// monotone predicate, by doubling then integer bisection. Returns the value
/// or None when even the cap fails.
fn minimal_feasible(lo: f64, gran: f64, feasible: impl Fn(f64) -> bool) -> Option<f64> {
    let n_lo = (lo / gran).floor().max(1.0) as u64;
    let n_cap = (SEARCH_CAP / gran) as u64;
    // Doubling phase to bracket.
    let mut n_hi = (n_lo + 1).max(2);
    loop {
        if feasible(n_hi as f64 * gran) {
            break;
        }
        if n_hi >= n_cap {
            return None;
        }
        n_hi = (n_hi * 2).min(n_cap);
    }
    // Integer bisection: invariant lo infeasible (or below the domain),
    // hi feasible.
    let mut lo_n = n_lo;
    let mut hi_n = n_hi;
    while hi_n - lo_n > 1 {
        let mid = lo_n + (hi_n - lo_n) / 2;
        if feasible(mid as f64 * gran) {
            hi_n = mid;
        } else {
            lo_n = mid;
        }
    }
    Some(hi_n as f64 * gran)
}

/// Solve for the verification scale: fix the auxiliary parameters from the
/// documented heuristics (ε = ζ₀²/(10κ₀²), δ = ζ₀/(2κ₀²), δ_aux = ε/(20πκ₀),
/// α_mid = 0.5α₀ + 0.5α_out, α_int = 0.8α₀ + 0.2α_mid), find the minimal
/// feasible s and l, then k = ⌈c₁(2l+c₂)⌉ and L = 3k with the global
/// constants. Both condition reports are re-verified at the returned values
/// and asserted to pass.
pub fn solve_local_scale(
    mc: &ModelConstants,
    morse: &MorseQIParams,
    alpha_out: f64,
    policy: SearchPolicy,
) -> Result<L2GSolution, L2gError> {
    let alpha0 = morse.alpha0;
    if !(alpha_out > 0.0 && alpha_out < alpha0) {
        return Err(L2gError::EmptyAlphaChain { alpha_out, alpha0 });
    }
    let epsilon = mc.antipodal_threshold / 10.0;
    let delta = mc.zeta0 / (2.0 * mc.kappa0 * mc.kappa0);
    let delta_aux = epsilon / (20.0 * std::f64::consts::PI * mc.kappa0);
    let alpha_mid = 0.5 * alpha0 + 0.5 * alpha_out;
    let alpha_int = 0.8 * alpha0 + 0.2 * alpha_mid;

    // Role wiring of the straight-and-spaced step.
    let (ss_in, ss_out) = match policy {
        SearchPolicy::Default => (alpha_mid, alpha_out),
        SearchPolicy::Paper52 => (alpha0, alpha_mid),
    };

    let ss_params = |s: f64| StraightSpacedParams::new(ss_in, ss_out, delta, epsilon, s);
    let ss_feasible = |s: f64| match ss_params(s) {
        Ok(p) => check_straight_spaced(mc, &p).map(|r| r.all_pass()).unwrap_or(false),
        Err(_) => false,
    };
    let s = minimal_feasible(2.0 * delta, S_GRANULARITY, ss_feasible).ok_or_else(|| {
        L2gError::Infeasible {
            parameter: "s",
            blocking: blocking_name_straight(mc, &ss_params(SEARCH_CAP).unwrap()),
            at: SEARCH_CAP,
        }
    })?;

    // The midpoint step produces triples at regularity α_mid under both
    // wirings.
    let quad_params = |l: f64| {
        let k = (morse.c1 * (2.0 * l + morse.c2)).ceil() as u64;
        QuadrupleParams::new(
            alpha0,
            alpha_int,
            alpha_mid,
            morse.d_disp,
            epsilon,
            morse.c1,
            morse.c2,
            s,
            l,
            delta_aux,
            k,
        )
    };
    let quad_feasible = |l: f64| match quad_params(l) {
        Ok(p) => check_quadruple(mc, &p).map(|r| r.all_pass()).unwrap_or(false),
        Err(_) => false,
    };
    let l = minimal_feasible(morse.d_disp.max(1.0), L_GRANULARITY, quad_feasible).ok_or_else(
        || L2gError::Infeasible {
            parameter: "l",
            blocking: quad_params(SEARCH_CAP)
                .ok()
                .and_then(|p| check_quadruple(mc, &p).ok())
                .and_then(|r| r.conditions.into_iter().find(|c| !c.pass))
                .map(|c| c.name.to_string())
                .unwrap_or_else(|| "parameter validation".to_string()),
            at: SEARCH_CAP,
        },
    )?;

    let k = (morse.c1 * (2.0 * l + morse.c2)).ceil() as u64;
    let scale = 3 * k;

    // Re-verify at the returned values (solver soundness is asserted).
    let straight = check_straight_spaced(mc, &ss_params(s)?)?;
    let quadruple = check_quadruple(mc, &quad_params(l)?)?;
    assert!(
        straight.all_pass() && quadruple.all_pass(),
        "solver returned an infeasible solution"
    );

    let global = global_params(k, s, delta, ss_out, mc, morse);

    Ok(L2GSolution {
        policy,
        epsilon,
        delta,
        delta_aux,
        alpha0,
        alpha_mid,
        alpha_int,
        alpha_out,
        s,
        l,
        k,
        scale,
        global,
        straight,
        quadruple,
    })
}

fn blocking_name_straight(mc: &ModelConstants, p: &StraightSpacedParams) -> String {
    check_straight_spaced(mc, p)
        .ok()
        .and_then(|r| r.conditions.into_iter().find(|c| !c.pass))
        .map(|c| c.name.to_string())
        .unwrap_or_else(|| "parameter validation".to_string())
}
