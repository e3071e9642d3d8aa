//! The end-to-end certification pipeline shared by all presets.
//!
//! Stages, in report order:
//! 1. base Morse/quasi-isometry parameters of the unperturbed model
//!    (construction depends on the preset and is passed in);
//! 2. relaxation: the lower slope c₁ is floored at 1 (a weaker, still valid
//!    lower bound) and the additive parameters D, c₂, c₄ are relaxed by the
//!    `--slack` budget, so the conclusion transfers to every representation
//!    whose orbit points move by at most that budget;
//! 3. the local-to-global solver produces the verification scale L = 3k at
//!    which the relaxed local data forces global Morse quasigeodesics;
//! 4. the word radius k_w is chosen with 2·k_w ≥ L (the perturbation lemma
//!    certifies the relaxed parameters on 2k_w-local segments), either
//!    ⌈L/2⌉ or a larger `--local-scale`;
//! 5. the generator perturbation radius ε is the inverse of the orbit
//!    displacement bound at word radius k_w and norm bound A, reported as an
//!    exact log10 exponent and rounded down to an integer power of ten.

use anosov_core::jsonfmt::Json;
use anosov_core::l2g::{solve_local_scale, L2gError, MorseQIParams, SearchPolicy};
use anosov_core::perturb::{
    floor_power_of_ten, local_morse_transfer, neighborhood_radius, orbit_displacement_bound,
    PerturbationScenario,
};
use anosov_core::symspace::ModelConstants;

use crate::report::{bound_json, constants_json, morse_json, solution_json};
use crate::CliError;

/// Everything the preset construction determines before the shared pipeline.
pub struct CertifySpec {
    pub preset: &'static str,
    pub mc: ModelConstants,
    pub base: MorseQIParams,
    /// Where the base parameters come from (human-readable, embedded in the
    /// report).
    pub provenance: String,
    /// Frobenius-norm bound A over the generators.
    pub a_norm: f64,
    pub a_source: &'static str,
    pub generator_count: usize,
    pub generator_digest: String,
    /// Ball enumeration summary for cocompact presets.
    pub ball: Option<BallInfo>,
    /// Preset-specific inputs echoed into the report.
    pub inputs: Vec<(&'static str, Json)>,
}

pub struct BallInfo {
    pub radius: f64,
    pub size: usize,
    pub complete: bool,
    pub depth_reached: usize,
}

pub struct CertifyFlags {
    pub alpha_out_ratio: f64,
    pub slack: f64,
    pub target_disp: f64,
    pub policy: SearchPolicy,
    pub local_scale: Option<u64>,
}

/// Run the pipeline; returns the report and the process exit code
/// (0 certified, 1 infeasible/incomplete).
pub fn run_certify(spec: &CertifySpec, flags: &CertifyFlags) -> Result<(Json, u8), CliError> {
    let mut inputs = vec![
        ("alpha_out_ratio", Json::Float(flags.alpha_out_ratio)),
        ("slack", Json::Float(flags.slack)),
        ("target_disp", Json::Float(flags.target_disp)),
        (
            "local_scale",
            flags.local_scale.map_or(Json::Null, Json::UInt),
        ),
    ];
    inputs.extend(spec.inputs.iter().map(|(k, v)| (*k, v.clone())));

    let mut fields = vec![
        ("schema", Json::UInt(1)),
        ("report", Json::str("certification")),
        ("preset", Json::str(spec.preset)),
        ("policy", Json::str(flags.policy.name())),
        ("inputs", Json::obj(inputs)),
        ("constants", constants_json(&spec.mc)),
        (
            "generators",
            Json::obj(vec![
                ("count", Json::UInt(spec.generator_count as u64)),
                ("digest", Json::str(spec.generator_digest.clone())),
                ("norm_bound", Json::Float(spec.a_norm)),
                ("norm_bound_source", Json::str(spec.a_source)),
            ]),
        ),
        (
            "ball",
            spec.ball.as_ref().map_or(Json::Null, |b| {
                Json::obj(vec![
                    ("radius", Json::Float(b.radius)),
                    ("size", Json::UInt(b.size as u64)),
                    ("complete", Json::Bool(b.complete)),
                    ("depth_reached", Json::UInt(b.depth_reached as u64)),
                ])
            }),
        ),
        (
            "base_morse",
            Json::obj(vec![
                ("params", morse_json(&spec.base)),
                ("provenance", Json::str(spec.provenance.clone())),
            ]),
        ),
    ];
    let finish = |mut fields: Vec<(&str, Json)>, verdict: &str, code: u8| {
        fields.push(("verdict", Json::str(verdict)));
        (Json::obj(fields), code)
    };

    // Incomplete enumeration cannot certify anything: the quasi-isometry
    // constants assume the full ball generating set.
    if let Some(b) = &spec.ball {
        if !b.complete {
            return Ok(finish(fields, "incomplete", 1));
        }
    }

    // Stage 2: relaxation. Raising c₁ weakens the lower sandwich bound
    // d ≥ n/c₁ − c₂, so flooring at 1 is sound; the additive relaxation is
    // the perturbation transfer.
    let c1_floored = spec.base.c1.max(1.0);
    let floored = MorseQIParams::new(
        spec.base.alpha0,
        spec.base.d_disp,
        c1_floored,
        spec.base.c2,
        spec.base.c3,
        spec.base.c4,
    )
    .map_err(|e| CliError::Usage(format!("base parameters invalid: {e}")))?;
    // The locality scale from the transfer is fixed after the solver runs;
    // the parameter relaxation itself does not depend on it.
    let (_, relaxed) = local_morse_transfer(&floored, flags.slack, 1)
        .map_err(|e| CliError::Usage(format!("relaxation failed: {e}")))?;
    fields.push((
        "relaxed_morse",
        Json::obj(vec![
            ("params", morse_json(&relaxed)),
            ("c1_floored", Json::Bool(c1_floored != spec.base.c1)),
            ("slack", Json::Float(flags.slack)),
        ]),
    ));

    // Stage 3: solve for the verification scale.
    let alpha_out = flags.alpha_out_ratio * relaxed.alpha0;
    let solution = match solve_local_scale(&spec.mc, &relaxed, alpha_out, flags.policy) {
        Ok(s) => s,
        Err(e @ L2gError::Infeasible { .. }) => {
            fields.push((
                "solution",
                Json::obj(vec![("feasible", Json::Bool(false)), ("error", Json::str(e.to_string()))]),
            ));
            return Ok(finish(fields, "infeasible", 1));
        }
        Err(e) => return Err(CliError::Usage(format!("solver rejected the inputs: {e}"))),
    };
    let required_scale = solution.scale;
    fields.push(("solution", solution_json(&solution)));

    // Stage 4: word radius with 2·k_w ≥ L.
    let k_w = match flags.local_scale {
        Some(n) => {
            if n < required_scale {
                return Err(CliError::Usage(format!(
                    "--local-scale {n} is below the required verification scale {required_scale}"
                )));
            }
            n.div_ceil(2)
        }
        None => required_scale.div_ceil(2),
    };
    let (certified_scale, _) = local_morse_transfer(&floored, flags.slack, k_w)
        .map_err(|e| CliError::Usage(format!("transfer failed: {e}")))?;
    assert!(certified_scale >= required_scale);
    fields.push((
        "word_radius",
        Json::obj(vec![
            ("k_w", Json::UInt(k_w)),
            ("certified_scale", Json::UInt(certified_scale)),
            ("required_scale", Json::UInt(required_scale)),
            (
                "source",
                Json::str(if flags.local_scale.is_some() { "flag" } else { "solver" }),
            ),
        ]),
    ));

    // Stage 5: invert the displacement bound.
    let eps = neighborhood_radius(spec.mc.d, spec.a_norm, k_w, flags.target_disp)
        .map_err(|e| CliError::Usage(format!("radius computation failed: {e}")))?;
    let scenario = PerturbationScenario::new(spec.mc.d, spec.a_norm, k_w, eps, flags.target_disp)
        .map_err(|e| CliError::Usage(format!("displacement scenario invalid: {e}")))?;
    let displacement = orbit_displacement_bound(&scenario);
    let sound = displacement.all_pass();
    fields.push((
        "displacement",
        Json::obj(vec![
            ("target", Json::Float(flags.target_disp)),
            ("bound_at_radius", bound_json(&displacement)),
        ]),
    ));
    fields.push((
        "radius",
        Json::obj(vec![
            ("log10_epsilon", Json::Float(eps.log10())),
            (
                "epsilon_power_of_ten",
                floor_power_of_ten(eps).map_or(Json::Null, Json::Int),
            ),
        ]),
    ));

    if sound {
        Ok(finish(fields, "certified", 0))
    } else {
        Ok(finish(fields, "infeasible", 1))
    }
}
