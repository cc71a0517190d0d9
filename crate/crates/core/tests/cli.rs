use std::path::PathBuf;
use std::process::Command;

use lieact::cli::{run_cli_with, CliError, EXIT_CONTRADICTION, EXIT_INPUT, EXIT_OK};
use lieact::obstruction::{Mode, ObstructionError, Regularity};
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lieact").chain(args.iter().copied());
    let code = run_cli_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("docs/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_schema_valid(v: &Value) {
    let validator = schema();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn validate_accepts_catalog_and_fixture() {
    let (code, out, _) = run(&["validate", "--algebra", "st(3,R) x abelian(1)"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Jacobi identity holds"));
    let (code, out, _) = run(&["validate", "--algebra-file", &fixture("heisenberg.lie"), "--manifold", "torus"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dim 3"));
}

#[test]
fn validate_rejects_corrupt_constants() {
    let (code, _, err) = run(&["validate", "--algebra-file", &fixture("corrupt_sl2.lie")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("(1, 2, 3)"), "{err}");
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["validate"][..],
        &["invariants", "--algebra", "st(3 R)"],
        &["invariants", "--algebra", "nope(2,R)"],
        &["analyze", "--algebra", "st(2,R)"],
        &["analyze", "--algebra", "st(2,R)", "--manifold", "no-such-preset"],
        &["analyze", "--algebra", "st(2,R)", "--manifold", r#"{"dim":2,"compact":true,"boundary":false,"surface_kind":"sphere","euler":0}"#],
        &["analyze", "--algebra", "st(2,R)", "--manifold", "@/nonexistent/manifold.json"],
        &["invariants", "--algebra-file", "/nonexistent/file.lie"],
        &["invariants", "--algebra", "st(2,R)", "--algebra-file", "x.lie"],
        &["frobnicate"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).0, EXIT_OK);
    assert_eq!(run(&["--version"]).0, EXIT_OK);
}

#[test]
fn contradiction_maps_to_exit_two() {
    let e = CliError::Obstruction(ObstructionError::EngineContradiction {
        regularity: Regularity::Smooth,
        mode: Mode::Effective,
        impossible: vec!["R1".into()],
        possible: vec!["R8".into()],
    });
    assert_eq!(e.exit_code(), EXIT_CONTRADICTION);
    assert!(e.to_string().contains("R1"));
}

#[test]
fn invariants_json_is_schema_valid() {
    let v = run_json(&["invariants", "--algebra", "sl(2,R)", "--format", "json"]);
    assert_schema_valid(&v);
    assert_eq!(v["report_v"], 1);
    assert_eq!(v["algebra"]["semisimple"], true);
    assert_eq!(v["algebra"]["killing_det_sign"], "negative");
    assert!(v["manifold"].is_null());
}

#[test]
fn analyze_genus_two_from_file() {
    let manifold = format!("@{}", fixture("genus2.json"));
    let v = run_json(&[
        "analyze", "--algebra", "sl(2,R)", "--manifold", &manifold, "--regularity", "analytic", "--mode", "effective",
        "--format", "json",
    ]);
    assert_schema_valid(&v);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 1);
    assert_eq!(verdicts[0]["status"], "IMPOSSIBLE");
    assert!(verdicts[0]["citations"].as_array().unwrap().iter().any(|c| c["rule"] == "R6"));
}

#[test]
fn strict_suppresses_heuristic_rules() {
    let base = ["analyze", "--algebra", "st(2,C)", "--manifold", "genus-2", "--regularity", "analytic", "--mode", "effective", "--format", "json"];
    let loose = run_json(&base);
    assert_eq!(loose["verdicts"][0]["status"], "IMPOSSIBLE");
    assert!(loose["verdicts"][0]["citations"].as_array().unwrap().iter().all(|c| c["heuristic"].is_string()));
    let mut strict_args = base.to_vec();
    strict_args.push("--strict");
    let strict = run_json(&strict_args);
    assert_schema_valid(&strict);
    assert_eq!(strict["tool"]["strict"], true);
    assert_eq!(strict["verdicts"][0]["status"], "UNKNOWN");
    let trace = strict["verdicts"][0]["trace"].as_array().unwrap();
    assert!(trace.iter().any(|t| t["rule"] == "R5" && t["suppressed"] == "strict"));
}

#[test]
fn exact_semisimple_path_survives_strict() {
    let v = run_json(&[
        "analyze", "--algebra", "sl(2,R)", "--manifold", "genus-2", "--regularity", "analytic", "--mode", "effective",
        "--format", "json", "--strict",
    ]);
    assert_eq!(v["verdicts"][0]["status"], "IMPOSSIBLE");
    assert_eq!(v["algebra"]["spectral"]["method"], "cartan-rank");
}

#[test]
fn analyze_json_is_deterministic() {
    let args = ["analyze", "--algebra", "st(3,R)", "--manifold", "torus", "--format", "json", "--seed", "7", "--samples", "4"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_schema_valid(&v);
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 12);
    assert_eq!(v["tool"]["seed"], 7);
}

#[test]
fn analyze_text_summary() {
    let (code, out, _) = run(&["analyze", "--algebra", "st(2,R)", "--manifold", "sphere", "--mode", "fixed-point-free"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("queries decided"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("/ fixed")).count(), 3, "{out}");
}

#[test]
fn catalog_list_formats() {
    let (code, text, _) = run(&["catalog", "list"]);
    assert_eq!(code, EXIT_OK);
    for atom in ["st(", "nt(", "sl(", "abelian(", "strn("] {
        assert!(text.contains(atom), "{atom} missing from {text}");
    }
    let v = run_json(&["catalog", "list", "--format", "json"]);
    assert!(!v["standard"].as_array().unwrap().is_empty());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lieact");
    let ok = Command::new(bin).args(["validate", "--algebra", "nt(4,R)"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin).args(["validate", "--algebra-file", &fixture("corrupt_nt4.lie")]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("(1, 4, 6)"));
}
