//! Conversions from library result types to deterministic report JSON.
//!
//! Key order within every object is fixed here (insertion order is what the
//! writer emits), so identical inputs produce byte-identical reports.

use anosov_core::estimates::{BoundResult, Precondition};
use anosov_core::groups::{CriterionCheck, LocalVerifyReport};
use anosov_core::jsonfmt::Json;
use anosov_core::l2g::{
    Condition, GlobalMorseParams, L2GSolution, MorseQIParams, QuadrupleReport,
    StraightSpacedReport,
};
use anosov_core::symspace::ModelConstants;
use anosov_core::LogScalar;

pub fn constants_json(mc: &ModelConstants) -> Json {
    Json::obj(vec![
        ("d", Json::UInt(mc.d as u64)),
        (
            "tau",
            Json::Array(mc.tau_mod.iter().map(|&i| Json::UInt(i as u64)).collect()),
        ),
        ("kappa0", Json::Float(mc.kappa0)),
        ("zeta0", Json::Float(mc.zeta0)),
        ("c0", Json::UInt(mc.c0 as u64)),
        ("antipodal_threshold", Json::Float(mc.antipodal_threshold)),
    ])
}

pub fn condition_json(c: &Condition) -> Json {
    Json::obj(vec![
        ("name", Json::str(c.name)),
        ("lhs", Json::Float(c.lhs)),
        ("rhs", Json::Float(c.rhs)),
        ("margin", Json::Float(c.margin)),
        ("pass", Json::Bool(c.pass)),
    ])
}

pub fn straight_report_json(r: &StraightSpacedReport) -> Json {
    Json::obj(vec![
        (
            "conditions",
            Json::Array(r.conditions.iter().map(condition_json).collect()),
        ),
        ("degenerate", Json::Bool(r.degenerate)),
        ("spacing_increment", Json::Float(r.spacing_increment)),
        ("pass", Json::Bool(r.all_pass())),
    ])
}

pub fn quadruple_report_json(r: &QuadrupleReport) -> Json {
    Json::obj(vec![
        (
            "conditions",
            Json::Array(r.conditions.iter().map(condition_json).collect()),
        ),
        ("degenerate", Json::Bool(r.degenerate)),
        ("pass", Json::Bool(r.all_pass())),
    ])
}

pub fn morse_json(p: &MorseQIParams) -> Json {
    Json::obj(vec![
        ("alpha0", Json::Float(p.alpha0)),
        ("d_disp", Json::Float(p.d_disp)),
        ("c1", Json::Float(p.c1)),
        ("c2", Json::Float(p.c2)),
        ("c3", Json::Float(p.c3)),
        ("c4", Json::Float(p.c4)),
    ])
}

pub fn global_json(g: &GlobalMorseParams) -> Json {
    Json::obj(vec![
        ("d_prime", Json::Float(g.d_prime)),
        ("c1_prime", Json::Float(g.c1_prime)),
        ("c2_prime", Json::Float(g.c2_prime)),
        ("c3_prime", Json::Float(g.c3_prime)),
        ("c4_prime", Json::Float(g.c4_prime)),
    ])
}

pub fn solution_json(s: &L2GSolution) -> Json {
    Json::obj(vec![
        ("policy", Json::str(s.policy.name())),
        ("epsilon", Json::Float(s.epsilon)),
        ("delta", Json::Float(s.delta)),
        ("delta_aux", Json::Float(s.delta_aux)),
        ("alpha0", Json::Float(s.alpha0)),
        ("alpha_mid", Json::Float(s.alpha_mid)),
        ("alpha_int", Json::Float(s.alpha_int)),
        ("alpha_out", Json::Float(s.alpha_out)),
        ("s", Json::Float(s.s)),
        ("l", Json::Float(s.l)),
        ("k", Json::UInt(s.k)),
        ("scale", Json::UInt(s.scale)),
        ("global", global_json(&s.global)),
        ("straight", straight_report_json(&s.straight)),
        ("quadruple", quadruple_report_json(&s.quadruple)),
    ])
}

/// A log-domain scalar as {sign, log10_mag}; zero renders a null exponent.
pub fn logscalar_json(v: LogScalar) -> Json {
    Json::obj(vec![
        ("sign", Json::Int(i64::from(v.sign()))),
        (
            "log10_mag",
            if v.is_zero() { Json::Null } else { Json::Float(v.log10_mag()) },
        ),
    ])
}

pub fn precondition_json(p: &Precondition) -> Json {
    Json::obj(vec![
        ("name", Json::str(p.name)),
        ("lhs", logscalar_json(p.lhs)),
        ("rhs", logscalar_json(p.rhs)),
        ("strict", Json::Bool(p.strict)),
        ("pass", Json::Bool(p.pass)),
    ])
}

pub fn bound_json(b: &BoundResult) -> Json {
    Json::obj(vec![
        ("value", logscalar_json(b.value)),
        (
            "preconditions",
            Json::Array(b.preconditions.iter().map(precondition_json).collect()),
        ),
        ("pass", Json::Bool(b.all_pass())),
    ])
}

pub fn criterion_json(c: &CriterionCheck) -> Json {
    Json::obj(vec![
        ("name", Json::str(c.name)),
        ("worst_value", Json::Float(c.worst_value)),
        ("threshold", Json::Float(c.threshold)),
        (
            "witness",
            c.witness.as_deref().map_or(Json::Null, Json::str),
        ),
        ("comparisons", Json::UInt(c.comparisons)),
        ("pass", Json::Bool(c.pass)),
    ])
}

pub fn verify_json(r: &LocalVerifyReport) -> Json {
    Json::obj(vec![
        ("words", Json::UInt(r.words as u64)),
        ("max_len", Json::UInt(r.max_len as u64)),
        ("sandwich", criterion_json(&r.sandwich)),
        ("regularity", criterion_json(&r.regularity)),
        ("straightness", criterion_json(&r.straightness)),
        ("pass", Json::Bool(r.pass())),
    ])
}
