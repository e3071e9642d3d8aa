//! Command-line contract tests: exit codes, byte-level report determinism,
//! and parse diagnostics.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anosov-cert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("anosov-cert-test-{}-{name}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

const ZETA0: f64 = 0.2886751345948129;

fn straight_params(epsilon: f64) -> String {
    format!(
        r#"{{"alpha_in": {ZETA0}, "alpha_out": {}, "delta": {}, "epsilon": {epsilon}, "s": 255.0}}"#,
        0.975 * ZETA0,
        1.5 * ZETA0
    )
}

#[test]
fn constants_reports_are_deterministic_and_exit_zero() {
    let a = run(&["constants", "--d", "3"]);
    let b = run(&["constants", "--d", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "reports must be byte-identical");
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("\"kappa0\": 5.7735026918962584e-1"));
    assert!(text.contains("\"schema\": 1"));
    assert!(text.ends_with('\n'));
}

#[test]
fn constants_rejects_dimension_one() {
    let out = run(&["constants", "--d", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_straight_passes_and_fails_by_exit_code() {
    let good = temp_file("straight-good.json", &straight_params(0.025));
    let out = run(&["check", "straight", "--file", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["result"]["pass"], true);

    // A hopeless angle budget: epsilon far beyond the antipodality threshold.
    let bad = temp_file("straight-bad.json", &straight_params(0.2));
    let out = run(&["check", "straight", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["result"]["pass"], false);
}

#[test]
fn malformed_json_gives_exit_two_with_diagnostic() {
    let bad = temp_file("malformed.json", "{ not json ]");
    let out = run(&["check", "straight", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse"), "diagnostic names the parse failure: {err}");
    assert!(err.contains("line"), "diagnostic locates the failure: {err}");
}

#[test]
fn unknown_field_in_params_is_rejected() {
    let extra = temp_file(
        "straight-extra.json",
        r#"{"alpha_in": 0.29, "alpha_out": 0.27, "delta": 0.43, "epsilon": 0.025, "s": 255.0, "bogus": 1}"#,
    );
    let out = run(&["check", "straight", "--file", extra.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_report_is_deterministic() {
    let morse = temp_file(
        "morse.json",
        &format!(
            r#"{{"alpha0": {ZETA0}, "d_disp": 3.28, "c1": 1.0, "c2": 0.1, "c3": 3.38, "c4": 0.1}}"#
        ),
    );
    let a = run(&["solve", "--file", morse.to_str().unwrap()]);
    let b = run(&["solve", "--file", morse.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["feasible"], true);
    assert_eq!(json["solution"]["scale"], 33_156);
}

#[test]
fn solve_reports_infeasibility_with_exit_one() {
    // An absurd upper slope makes k so large that no l within the search cap
    // satisfies the spacing conditions.
    let morse = temp_file(
        "morse-bad.json",
        &format!(
            r#"{{"alpha0": {ZETA0}, "d_disp": 1e9, "c1": 1e6, "c2": 0.1, "c3": 1e6, "c4": 0.1}}"#
        ),
    );
    let out = run(&["solve", "--file", morse.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["feasible"], false);
    assert!(json["error"].as_str().unwrap().contains("infeasible"));
}

#[test]
fn certify_free_report_is_deterministic_and_policy_named() {
    let a = run(&["certify", "free"]);
    let b = run(&["certify", "free"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["policy"], "default");
    assert_eq!(json["verdict"], "certified");
    // The power-of-ten rounding is downward: never above the exact exponent.
    let exact = json["radius"]["log10_epsilon"].as_f64().unwrap();
    let floor = json["radius"]["epsilon_power_of_ten"].as_i64().unwrap();
    assert!(floor as f64 <= exact && exact < (floor + 1) as f64);
}

#[test]
fn certify_rejects_non_cocompact_tanh_parameter() {
    let out = run(&["certify", "free", "--tanh-t", "0.70"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("0.7"), "error names the bad value: {err}");
}

#[test]
fn certify_rejects_local_scale_below_required() {
    let out = run(&["certify", "free", "--local-scale", "100"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("local-scale"), "{err}");
}

#[test]
fn certify_paper_wiring_policy_is_accepted() {
    let out = run(&["certify", "free", "--policy", "paper-5.2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["policy"], "paper-5.2");
    assert_eq!(json["verdict"], "certified");

    let bad = run(&["certify", "free", "--policy", "nonsense"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_local_roundtrip_through_generator_file() {
    // Free generators at T = 0.75, written in the matrix block format; the
    // binary appends the missing inverses itself.
    let t: f64 = 0.75f64.atanh();
    let gens = format!(
        "# ping-pong pair\n{e:.16e} 0 0\n0 1 0\n0 0 {em:.16e}\n\n\
         {c:.16e} 0 {s:.16e}\n0 1 0\n{s:.16e} 0 {c:.16e}\n",
        e = t.exp(),
        em = (-t).exp(),
        c = t.cosh(),
        s = t.sinh()
    );
    let file = temp_file("free-gens.txt", &gens);
    let out = run(&[
        "verify-local",
        "--generators",
        file.to_str().unwrap(),
        "--structure",
        "free",
        "--max-len",
        "4",
        "--alpha0",
        "0.274241377865072",
        "--d-disp",
        "3.1753381275986294",
        "--qi",
        "0.78126093963836,0,3.3704152451277296,0",
        "--spacing",
        "4.0",
        "--epsilon",
        "2.5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["generators"]["count"], 4);
    assert_eq!(json["result"]["pass"], true);
    assert_eq!(json["result"]["words"], 4 + 12 + 36 + 108);
}
