use std::process::{Command, Output};

use nilred::fieldpoly::FieldSpec;
use nilred::groebner::{ideal_equal, GroebnerConfig, Ideal};
use nilred::schemes::{nilpotent_scheme_ideal, NilpotentSchemeSpec};

fn nilred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilred")).args(args).env_remove("RUST_BACKTRACE").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn list_names_every_check_and_suite() {
    let out = nilred(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for check in nilred::harness::registry() {
        assert!(text.contains(check.name), "{} missing", check.name);
    }
    for suite in nilred::harness::SUITES {
        assert!(text.contains(&format!("suite {suite}")));
    }
}

#[test]
fn run_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = nilred(&[
        "run",
        "relative_dimension",
        "--n",
        "2",
        "--e",
        "2",
        "--trials",
        "5",
        "--seed",
        "3",
        "--field",
        "Fp:5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("pass"));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let report = &value.as_array().unwrap()[0];
    assert_eq!(report["check"], "relative_dimension");
    assert_eq!(report["seed"], 3);
    assert_eq!(report["field"], "Fp:5");
    assert_eq!(report["params"]["trials"], 5);
}

#[test]
fn bad_invocations_exit_nonzero() {
    let missing = nilred(&["run", "nilpotent_reduced", "--n", "2"]);
    assert!(!missing.status.success());
    assert!(String::from_utf8_lossy(&missing.stderr).contains("`e` is required"));
    assert!(!nilred(&["run", "no_such_check"]).status.success());
    assert!(!nilred(&["run", "orbit_dimension", "--n", "2", "--field", "Fp:4"]).status.success());
    assert!(!nilred(&["suite", "nope"]).status.success());
    assert!(!nilred(&["ideal", "orbit"]).status.success());
}

#[test]
fn ideal_output_parses_back() {
    let out = nilred(&["ideal", "nilpotent", "--n", "2", "--e", "2", "--field", "Fp:3"]);
    assert!(out.status.success());
    let parsed = Ideal::parse(&stdout(&out)).unwrap();
    let direct = nilpotent_scheme_ideal(NilpotentSchemeSpec::new(2, 2).unwrap(), FieldSpec::Prime(3)).unwrap();
    assert!(ideal_equal(&parsed, &direct, &GroebnerConfig::default()).unwrap());
}

#[test]
fn ideal_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plucker.txt");
    let out = nilred(&["ideal", "plucker", "--n", "2", "--ambient", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let ideal = Ideal::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(ideal.generators().len(), 1);
    for scheme in
        [["invariant-chart", "[2,2]", "2,4"], ["shuffle-chart", "[3,1]", "1,2"], ["invariance-chart", "[2]", "1"]]
    {
        let out = nilred(&["ideal", scheme[0], "--partition", scheme[1], "--pivots", scheme[2]]);
        assert!(out.status.success(), "{scheme:?}: {}", String::from_utf8_lossy(&out.stderr));
        Ideal::parse(&stdout(&out)).unwrap();
    }
}

#[test]
fn small_suite_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let out = nilred(&["suite", "surjectivity", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let n = nilred::harness::suite_specs("surjectivity").unwrap().len();
    assert_eq!(value.as_array().unwrap().len(), n);
    assert!(stdout(&out).contains(&format!("{n} checks, 0 failed")));
}
