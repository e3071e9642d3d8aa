//! `anosov-cert`: certification toolkit for the Anosov property of finitely
//! generated matrix subgroups of SL(d,ℝ).
//!
//! Subcommands:
//! - `constants` — model constants of the symmetric space of SL(d,ℝ);
//! - `check straight|quadruple` — evaluate one local-to-global condition
//!   system from a JSON parameter file;
//! - `solve` — find the minimal verification scale L for a Morse/QI
//!   parameter set;
//! - `certify free|surface|custom` — the end-to-end pipeline producing a
//!   certified generator perturbation radius;
//! - `verify-local` — exhaustive desk-scale verification of the local Morse
//!   criteria on all geodesic words up to a length cap.
//!
//! Exit codes: 0 certified/pass, 1 infeasible/fail, 2 usage or parse error.
//! Reports are deterministic JSON (stable key order, 17-significant-digit
//! floats): identical inputs give byte-identical bytes. The environment
//! variable `ANOSOV_CERT_NUMERIC_SLACK` scales the numeric validation
//! tolerances process-wide.

mod certify;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use anosov_core::groups::{
    ball_generating_set, canonical_key, classical_morse_constants, free_group_constants,
    free_group_generators, local_morse_verify, milnor_schwarz_constants, surface_covering_radius,
    surface_group_model, GroupModel, HyperbolicityInput, WordStructure,
};
use anosov_core::jsonfmt::Json;
use anosov_core::l2g::{
    check_quadruple, check_straight_spaced, solve_local_scale, L2gError, MorseQIParams,
    QuadrupleParams, SearchPolicy, StraightSpacedParams,
};
use anosov_core::matio::parse_group_elements;
use anosov_core::symspace::{model_constants, GroupElement, ModelConstants};

use certify::{run_certify, BallInfo, CertifyFlags, CertifySpec};
use report::{constants_json, morse_json, solution_json, straight_report_json, verify_json};

/// Depth at which the breadth-first ball enumeration of the surface model is
/// known to close: new in-radius elements appear through depth 4 (8, 32, 16
/// and 8 of them), and depth 5 finds none, which is what the completeness
/// flag certifies.
const SURFACE_BALL_DEPTH: usize = 5;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, malformed files, or out-of-domain inputs; exit code 2.
    Usage(String),
}

#[derive(Parser)]
#[command(
    name = "anosov-cert",
    version,
    about = "Certify the Anosov property of finitely generated subgroups of SL(d,R)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the model constants of the symmetric space of SL(d,R).
    Constants {
        #[arg(long)]
        d: usize,
        /// Simple-root subset (indices in 1..d), comma-separated; defaults to
        /// the full set.
        #[arg(long, value_delimiter = ',')]
        tau: Option<Vec<usize>>,
    },
    /// Evaluate one condition system from a JSON parameter file.
    Check {
        #[command(subcommand)]
        which: CheckCmd,
    },
    /// Solve for the minimal verification scale L = 3k.
    Solve {
        /// JSON file with the Morse/QI parameters (alpha0, d_disp, c1..c4).
        #[arg(long)]
        file: PathBuf,
        /// Output regularity, absolute; overrides --alpha-out-ratio.
        #[arg(long)]
        alpha_out: Option<f64>,
        /// Output regularity as a fraction of alpha0.
        #[arg(long, default_value_t = 0.95)]
        alpha_out_ratio: f64,
        #[arg(long, default_value = "default")]
        policy: String,
    },
    /// End-to-end certification of a perturbation neighborhood.
    Certify {
        #[command(subcommand)]
        what: CertifyCmd,
    },
    /// Exhaustively verify the local Morse criteria on short words.
    VerifyLocal {
        /// Generator file (matrix blocks); inverses are appended when absent.
        #[arg(long)]
        generators: PathBuf,
        /// Geodesic enumeration structure of the generating set.
        #[arg(long, value_enum, default_value_t = StructureArg::Free)]
        structure: StructureArg,
        #[arg(long)]
        max_len: usize,
        /// Regularity threshold alpha0.
        #[arg(long)]
        alpha0: f64,
        /// Morse parameter D of the target.
        #[arg(long)]
        d_disp: f64,
        /// QI constants c1,c2,c3,c4 (comma-separated).
        #[arg(long, value_delimiter = ',')]
        qi: Vec<f64>,
        /// Coarsening spacing s for the straightness check.
        #[arg(long)]
        spacing: f64,
        /// Angle budget epsilon for the straightness check.
        #[arg(long)]
        epsilon: f64,
        /// Spacing tolerance delta; defaults to zeta0/(2 kappa0^2).
        #[arg(long)]
        delta: Option<f64>,
        /// Output regularity; defaults to 0.95 * alpha0.
        #[arg(long)]
        alpha_out: Option<f64>,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Straight-and-spaced criterion.
    Straight {
        #[arg(long)]
        file: PathBuf,
    },
    /// Midpoint-quadruple criterion.
    Quadruple {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Two-generator free group preset (diagonal and conjugate hyperbolic).
    Free {
        /// Contraction parameter T = tanh(t), in (1/sqrt(2), 1).
        #[arg(long, default_value_t = 0.75)]
        tanh_t: f64,
        #[command(flatten)]
        common: CertifyCommon,
    },
    /// Genus-2 surface group preset (cocompact, ball generating set).
    Surface {
        /// Hyperbolicity constant of the target space.
        #[arg(long, default_value_t = 0.6376)]
        delta_hyp: f64,
        #[command(flatten)]
        common: CertifyCommon,
    },
    /// User-supplied generators and base Morse/QI parameters.
    Custom {
        /// Generator file (matrix blocks); inverses are appended when absent.
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        alpha0: f64,
        #[arg(long)]
        d_disp: f64,
        /// QI constants c1,c2,c3,c4 (comma-separated).
        #[arg(long, value_delimiter = ',')]
        qi: Vec<f64>,
        #[command(flatten)]
        common: CertifyCommon,
    },
}

#[derive(Args)]
struct CertifyCommon {
    /// Output regularity as a fraction of alpha0 (preset default: 0.95 free
    /// and custom, 0.5 surface).
    #[arg(long)]
    alpha_out_ratio: Option<f64>,
    /// Additive relaxation of D, c2, c4 absorbed by the perturbation (preset
    /// default: 0.1 free and custom, 10 surface).
    #[arg(long)]
    slack: Option<f64>,
    /// Orbit displacement the radius must enforce (preset default: 0.1 free
    /// and custom, 10 surface).
    #[arg(long)]
    target_disp: Option<f64>,
    #[arg(long, default_value = "default")]
    policy: String,
    /// Certify at this locality scale (>= the solved L) instead of the
    /// minimal one; larger scales give smaller, still valid radii.
    #[arg(long)]
    local_scale: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    /// Reduced words (free group on the non-inverse generators).
    Free,
    /// Breadth-first shortest words with dedup.
    Ball,
}

// ---------------------------------------------------------------------------
// JSON parameter files
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StraightFile {
    d: Option<usize>,
    tau: Option<Vec<usize>>,
    alpha_in: f64,
    alpha_out: f64,
    delta: f64,
    epsilon: f64,
    s: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuadrupleFile {
    d: Option<usize>,
    tau: Option<Vec<usize>>,
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
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorseFile {
    d: Option<usize>,
    tau: Option<Vec<usize>>,
    alpha0: f64,
    d_disp: f64,
    c1: f64,
    c2: f64,
    c3: f64,
    c4: f64,
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))
}

fn constants_for(d: Option<usize>, tau: Option<&[usize]>) -> Result<ModelConstants, CliError> {
    let d = d.unwrap_or(3);
    let full: Vec<usize> = (1..d).collect();
    let tau = tau.unwrap_or(&full);
    model_constants(d, tau).map_err(|e| CliError::Usage(format!("bad model constants: {e}")))
}

fn parse_policy(name: &str) -> Result<SearchPolicy, CliError> {
    SearchPolicy::from_name(name)
        .ok_or_else(|| CliError::Usage(format!("unknown policy '{name}' (default, paper-5.2)")))
}

/// FNV-1a 64-bit over the canonical integer keys of the generators, in
/// order: a stable fingerprint of the generating set for report provenance.
fn generator_digest(gens: &[(String, GroupElement)]) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for (_, g) in gens {
        for v in canonical_key(g.matrix()) {
            for b in v.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
    }
    format!("{h:016x}")
}

/// Build a symmetric generating set from a matrix file: label the blocks
/// m1, m2, ... and append any missing inverses (labelled mK^-1).
fn model_from_file(path: &PathBuf, structure: WordStructure) -> Result<GroupModel, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let elements = parse_group_elements(&text)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))?;
    if elements.is_empty() {
        return Err(CliError::Usage(format!("{}: no matrices", path.display())));
    }
    let mut gens: Vec<(String, GroupElement)> = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("m{}", i + 1), g.clone()))
        .collect();
    let keys: Vec<Vec<i64>> = gens.iter().map(|(_, g)| canonical_key(g.matrix())).collect();
    for (i, g) in elements.iter().enumerate() {
        let inv = g.inverse();
        if !keys.contains(&canonical_key(inv.matrix())) {
            gens.push((format!("m{}^-1", i + 1), inv));
        }
    }
    GroupModel::new(gens, structure)
        .map_err(|e| CliError::Usage(format!("bad generating set: {e}")))
}

fn qi_quadruple(qi: &[f64]) -> Result<(f64, f64, f64, f64), CliError> {
    if qi.len() != 4 {
        return Err(CliError::Usage("--qi needs exactly c1,c2,c3,c4".into()));
    }
    Ok((qi[0], qi[1], qi[2], qi[3]))
}

fn emit(report: &Json, code: u8) -> ExitCode {
    print!("{}", report.render());
    ExitCode::from(code)
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

fn free_spec(tanh_t: f64) -> Result<CertifySpec, CliError> {
    let mc = constants_for(Some(3), None)?;
    let fc = free_group_constants(tanh_t)
        .map_err(|e| CliError::Usage(format!("free preset rejected T = {tanh_t}: {e}")))?;
    let model = free_group_generators(tanh_t)
        .map_err(|e| CliError::Usage(format!("free preset rejected T = {tanh_t}: {e}")))?;
    let base = MorseQIParams::new(mc.zeta0, fc.r, 1.0 / fc.c1_inv, 0.0, fc.c3, 0.0)
        .map_err(|e| CliError::Usage(format!("free base parameters invalid: {e}")))?;
    let a_norm = model
        .generators()
        .iter()
        .map(|(_, g)| g.matrix().norm())
        .fold(0.0, f64::max);
    Ok(CertifySpec {
        preset: "free",
        mc,
        base,
        provenance: format!(
            "ping-pong free group at T = {tanh_t}: R = {}, c1 = 1/{}, c3 = {}",
            fc.r, fc.c1_inv, fc.c3
        ),
        a_norm,
        a_source: "max generator Frobenius norm",
        generator_count: model.generators().len(),
        generator_digest: generator_digest(model.generators()),
        ball: None,
        inputs: vec![("tanh_t", Json::Float(tanh_t))],
    })
}

fn surface_spec(delta_hyp: f64) -> Result<CertifySpec, CliError> {
    let mc = constants_for(Some(3), None)?;
    let model = surface_group_model();
    let r = surface_covering_radius();
    let (c1, c2, c3, c4) = milnor_schwarz_constants(r)
        .map_err(|e| CliError::Usage(format!("covering radius invalid: {e}")))?;
    let two_r_plus_1 = c3;
    let hyp = HyperbolicityInput::new(delta_hyp, two_r_plus_1, 1.0, 1.0)
        .map_err(|e| CliError::Usage(format!("bad hyperbolicity input: {e}")))?;
    let cm = classical_morse_constants(&hyp);
    let base = MorseQIParams::new(mc.zeta0, cm.r, c1, c2, c3, c4)
        .map_err(|e| CliError::Usage(format!("surface base parameters invalid: {e}")))?;
    let ball = ball_generating_set(&model, two_r_plus_1, SURFACE_BALL_DEPTH)
        .map_err(|e| CliError::Usage(format!("ball enumeration failed: {e}")))?;
    let a_norm = anosov_core::perturb::generator_frob_bound(3, two_r_plus_1)
        .map_err(|e| CliError::Usage(format!("norm bound failed: {e}")))?;
    Ok(CertifySpec {
        preset: "surface",
        mc,
        base,
        provenance: format!(
            "genus-2 surface group, covering radius R = {r}, orbit QI constants \
             (1, 1, 2R+1, 0), rank-1 Morse constant D = {} at hyperbolicity {delta_hyp}",
            cm.r
        ),
        a_norm,
        a_source: "displacement bound exp((2R+1)/sqrt(2d))",
        generator_count: ball.elements.len(),
        generator_digest: generator_digest(model.generators()),
        ball: Some(BallInfo {
            radius: two_r_plus_1,
            size: ball.elements.len(),
            complete: ball.complete,
            depth_reached: ball.depth_reached,
        }),
        inputs: vec![("delta_hyp", Json::Float(delta_hyp))],
    })
}

fn custom_spec(
    generators: &PathBuf,
    alpha0: f64,
    d_disp: f64,
    qi: &[f64],
) -> Result<CertifySpec, CliError> {
    let model = model_from_file(generators, WordStructure::BallGenerated)?;
    let d = model.dim();
    let mc = constants_for(Some(d), None)?;
    let (c1, c2, c3, c4) = qi_quadruple(qi)?;
    let base = MorseQIParams::new(alpha0, d_disp, c1, c2, c3, c4)
        .map_err(|e| CliError::Usage(format!("bad Morse/QI parameters: {e}")))?;
    let a_norm = model
        .generators()
        .iter()
        .map(|(_, g)| g.matrix().norm())
        .fold(0.0, f64::max);
    Ok(CertifySpec {
        preset: "custom",
        mc,
        base,
        provenance: format!("user-supplied generators from {}", generators.display()),
        a_norm,
        a_source: "max generator Frobenius norm",
        generator_count: model.generators().len(),
        generator_digest: generator_digest(model.generators()),
        ball: None,
        inputs: vec![("generators", Json::str(generators.display().to_string()))],
    })
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn cmd_constants(d: usize, tau: Option<Vec<usize>>) -> Result<(Json, u8), CliError> {
    let mc = constants_for(Some(d), tau.as_deref())?;
    Ok((
        Json::obj(vec![
            ("schema", Json::UInt(1)),
            ("report", Json::str("constants")),
            ("constants", constants_json(&mc)),
        ]),
        0,
    ))
}

fn cmd_check_straight(file: &PathBuf) -> Result<(Json, u8), CliError> {
    let p: StraightFile = read_json(file)?;
    let mc = constants_for(p.d, p.tau.as_deref())?;
    let params = StraightSpacedParams::new(p.alpha_in, p.alpha_out, p.delta, p.epsilon, p.s)
        .map_err(|e| CliError::Usage(format!("bad parameters: {e}")))?;
    let report = check_straight_spaced(&mc, &params)
        .map_err(|e| CliError::Usage(format!("check failed: {e}")))?;
    let pass = report.all_pass();
    Ok((
        Json::obj(vec![
            ("schema", Json::UInt(1)),
            ("report", Json::str("check-straight")),
            ("constants", constants_json(&mc)),
            (
                "params",
                Json::obj(vec![
                    ("alpha_in", Json::Float(params.alpha_in)),
                    ("alpha_out", Json::Float(params.alpha_out)),
                    ("delta", Json::Float(params.delta)),
                    ("epsilon", Json::Float(params.epsilon)),
                    ("s", Json::Float(params.s)),
                ]),
            ),
            ("result", straight_report_json(&report)),
        ]),
        u8::from(!pass),
    ))
}

fn cmd_check_quadruple(file: &PathBuf) -> Result<(Json, u8), CliError> {
    let p: QuadrupleFile = read_json(file)?;
    let mc = constants_for(p.d, p.tau.as_deref())?;
    let params = QuadrupleParams::new(
        p.alpha0, p.alpha_int, p.alpha_out, p.d_disp, p.epsilon, p.c1, p.c2, p.s, p.l,
        p.delta_aux, p.k,
    )
    .map_err(|e| CliError::Usage(format!("bad parameters: {e}")))?;
    let report =
        check_quadruple(&mc, &params).map_err(|e| CliError::Usage(format!("check failed: {e}")))?;
    let pass = report.all_pass();
    Ok((
        Json::obj(vec![
            ("schema", Json::UInt(1)),
            ("report", Json::str("check-quadruple")),
            ("constants", constants_json(&mc)),
            (
                "params",
                Json::obj(vec![
                    ("alpha0", Json::Float(params.alpha0)),
                    ("alpha_int", Json::Float(params.alpha_int)),
                    ("alpha_out", Json::Float(params.alpha_out)),
                    ("d_disp", Json::Float(params.d_disp)),
                    ("epsilon", Json::Float(params.epsilon)),
                    ("c1", Json::Float(params.c1)),
                    ("c2", Json::Float(params.c2)),
                    ("s", Json::Float(params.s)),
                    ("l", Json::Float(params.l)),
                    ("delta_aux", Json::Float(params.delta_aux)),
                    ("k", Json::UInt(params.k)),
                ]),
            ),
            ("result", report::quadruple_report_json(&report)),
        ]),
        u8::from(!pass),
    ))
}

fn cmd_solve(
    file: &PathBuf,
    alpha_out: Option<f64>,
    alpha_out_ratio: f64,
    policy: &str,
) -> Result<(Json, u8), CliError> {
    let p: MorseFile = read_json(file)?;
    let mc = constants_for(p.d, p.tau.as_deref())?;
    let policy = parse_policy(policy)?;
    let morse = MorseQIParams::new(p.alpha0, p.d_disp, p.c1, p.c2, p.c3, p.c4)
        .map_err(|e| CliError::Usage(format!("bad Morse/QI parameters: {e}")))?;
    let a_out = alpha_out.unwrap_or(alpha_out_ratio * p.alpha0);
    let head = vec![
        ("schema", Json::UInt(1)),
        ("report", Json::str("solve")),
        ("policy", Json::str(policy.name())),
        ("constants", constants_json(&mc)),
        ("morse", morse_json(&morse)),
        ("alpha_out", Json::Float(a_out)),
    ];
    match solve_local_scale(&mc, &morse, a_out, policy) {
        Ok(sol) => {
            let mut fields = head;
            fields.push(("solution", solution_json(&sol)));
            fields.push(("feasible", Json::Bool(true)));
            Ok((Json::obj(fields), 0))
        }
        Err(e @ L2gError::Infeasible { .. }) => {
            let mut fields = head;
            fields.push(("error", Json::str(e.to_string())));
            fields.push(("feasible", Json::Bool(false)));
            Ok((Json::obj(fields), 1))
        }
        Err(e) => Err(CliError::Usage(format!("solver rejected the inputs: {e}"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify_local(
    generators: &PathBuf,
    structure: StructureArg,
    max_len: usize,
    alpha0: f64,
    d_disp: f64,
    qi: &[f64],
    spacing: f64,
    epsilon: f64,
    delta: Option<f64>,
    alpha_out: Option<f64>,
) -> Result<(Json, u8), CliError> {
    let structure = match structure {
        StructureArg::Free => WordStructure::FreeReduced,
        StructureArg::Ball => WordStructure::BallGenerated,
    };
    let model = model_from_file(generators, structure)?;
    let mc = constants_for(Some(model.dim()), None)?;
    let (c1, c2, c3, c4) = qi_quadruple(qi)?;
    let target = MorseQIParams::new(alpha0, d_disp, c1, c2, c3, c4)
        .map_err(|e| CliError::Usage(format!("bad Morse/QI parameters: {e}")))?;
    let delta = delta.unwrap_or(mc.zeta0 / (2.0 * mc.kappa0 * mc.kappa0));
    let a_out = alpha_out.unwrap_or(0.95 * alpha0);
    let straightness = StraightSpacedParams::new(alpha0, a_out, delta, epsilon, spacing)
        .map_err(|e| CliError::Usage(format!("bad straightness parameters: {e}")))?;
    let result = local_morse_verify(&model, &mc, &target, &straightness, max_len)
        .map_err(|e| CliError::Usage(format!("verification failed: {e}")))?;
    let pass = result.pass();
    Ok((
        Json::obj(vec![
            ("schema", Json::UInt(1)),
            ("report", Json::str("verify-local")),
            ("constants", constants_json(&mc)),
            (
                "generators",
                Json::obj(vec![
                    ("count", Json::UInt(model.generators().len() as u64)),
                    ("digest", Json::str(generator_digest(model.generators()))),
                ]),
            ),
            ("target", morse_json(&target)),
            (
                "straightness",
                Json::obj(vec![
                    ("delta", Json::Float(delta)),
                    ("epsilon", Json::Float(epsilon)),
                    ("s", Json::Float(spacing)),
                ]),
            ),
            ("result", verify_json(&result)),
        ]),
        u8::from(!pass),
    ))
}

fn cmd_certify(what: &CertifyCmd) -> Result<(Json, u8), CliError> {
    let (spec, common, default_ratio, default_slack, default_target) = match what {
        CertifyCmd::Free { tanh_t, common } => (free_spec(*tanh_t)?, common, 0.95, 0.1, 0.1),
        CertifyCmd::Surface { delta_hyp, common } => {
            (surface_spec(*delta_hyp)?, common, 0.5, 10.0, 10.0)
        }
        CertifyCmd::Custom {
            generators,
            alpha0,
            d_disp,
            qi,
            common,
        } => (custom_spec(generators, *alpha0, *d_disp, qi)?, common, 0.95, 0.1, 0.1),
    };
    let flags = CertifyFlags {
        alpha_out_ratio: common.alpha_out_ratio.unwrap_or(default_ratio),
        slack: common.slack.unwrap_or(default_slack),
        target_disp: common.target_disp.unwrap_or(default_target),
        policy: parse_policy(&common.policy)?,
        local_scale: common.local_scale,
    };
    if !(flags.alpha_out_ratio > 0.0 && flags.alpha_out_ratio < 1.0) {
        return Err(CliError::Usage(format!(
            "--alpha-out-ratio must be in (0, 1), got {}",
            flags.alpha_out_ratio
        )));
    }
    run_certify(&spec, &flags)
}

fn run(cli: &Cli) -> Result<(Json, u8), CliError> {
    match &cli.cmd {
        Cmd::Constants { d, tau } => cmd_constants(*d, tau.clone()),
        Cmd::Check { which } => match which {
            CheckCmd::Straight { file } => cmd_check_straight(file),
            CheckCmd::Quadruple { file } => cmd_check_quadruple(file),
        },
        Cmd::Solve {
            file,
            alpha_out,
            alpha_out_ratio,
            policy,
        } => cmd_solve(file, *alpha_out, *alpha_out_ratio, policy),
        Cmd::Certify { what } => cmd_certify(what),
        Cmd::VerifyLocal {
            generators,
            structure,
            max_len,
            alpha0,
            d_disp,
            qi,
            spacing,
            epsilon,
            delta,
            alpha_out,
        } => cmd_verify_local(
            generators, *structure, *max_len, *alpha0, *d_disp, qi, *spacing, *epsilon, *delta,
            *alpha_out,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        // clap exits 2 on usage errors and 0 on --help/--version.
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok((report, code)) => emit(&report, code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
