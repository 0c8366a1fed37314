use std::path::PathBuf;

use assert_cmd::Command;
use predicates::prelude::*;

fn fixture(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

fn spinq() -> Command {
    Command::cargo_bin("spinq").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = spinq().args(args).output().unwrap();
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn series_examples() {
    let s = stdout_of(&["series", "point-dim", "--N", "6"]);
    assert_eq!(s.lines().nth(1), Some("1 1 1 2 2 3 4"));
    assert!(s.starts_with("# prod"));
    let s = stdout_of(&["series", "euler-s", "--e", "1", "--N", "4"]);
    assert_eq!(s.lines().nth(1), Some("1 1 2 3 3"));
    let s = stdout_of(&["series", "euler", "--e", "0", "--N", "3"]);
    assert_eq!(s.lines().nth(1), Some("1 0 0 0"));
    let s = stdout_of(&["series", "omega", "--N", "8"]);
    assert_eq!(s.lines().nth(1), Some("1 1 1 2 2 3 4 5 6"));
}

#[test]
fn series_negative_exponent_and_json() {
    let s = stdout_of(&["series", "euler", "--e", "-1", "--N", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "-1", "0", "-1"]));
}

#[test]
fn point_dim_uses_group_classes() {
    let s = stdout_of(&["series", "point-dim", "--group", &fixture("groups/z2.json"), "--N", "3"]);
    assert_eq!(s.lines().nth(1), Some("1 2 3 6"));
}

#[test]
fn fock_dim_matches_series() {
    let m = fixture("models/point_1_0.json");
    let s = stdout_of(&["fock-dim", "--model", &m, "--N", "6"]);
    assert_eq!(s.lines().nth(1), Some("1 1 1 2 2 3 4"));
    let s = stdout_of(&["series", "fock-dim", "--model", &m, "--N", "6"]);
    assert_eq!(s.lines().nth(1), Some("1 1 1 2 2 3 4"));
}

#[test]
fn chartable_trivial_degree_three() {
    let s = stdout_of(&["chartable", "--group", &fixture("groups/trivial.json"), "--degree", "3"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "character,(3),\"(1,1,1)\"");
    assert_eq!(lines[1], "Z,6,48");
    assert!(lines.contains(&"xi^3,2,8"));
    assert!(lines.contains(&"\"T^(2,1)\",-2,4"));
}

#[test]
fn chartable_degree_zero_and_json() {
    let s = stdout_of(&["chartable", "--degree", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["columns"].as_array().unwrap().len(), 1);
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["values"], serde_json::json!(["1"]));
    }
}

#[test]
fn chartable_warns_without_irreducibles() {
    spinq()
        .args(["chartable", "--group", &fixture("groups/z2.json"), "--degree", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("xi^2,4,4,4"))
        .stderr(predicate::str::contains("warning"));
}

#[test]
fn verify_suites() {
    let m = fixture("models/point_1_1.json");
    spinq()
        .args(["verify", "heisenberg", "--model", &m, "--D", "5", "--seed", "4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("0 failed"));
    spinq()
        .args(["verify", "vertex", "--group", &fixture("groups/z2.json"), "--N", "6"])
        .assert()
        .success();
    spinq()
        .args(["verify", "all", "--model", &fixture("models/point_0_0.json"), "--N", "5", "--D", "3"])
        .assert()
        .success();
}

#[test]
fn verify_is_deterministic() {
    let m = fixture("models/z2_sectors.json");
    let args = ["verify", "heisenberg", "--model", &m, "--D", "4", "--seed", "9", "--format", "json"];
    let a = stdout_of(&args);
    assert_eq!(a, stdout_of(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 9);
}

#[test]
fn qlambda_json_report() {
    let s = stdout_of(&["qlambda", "verify", "--lines", "4", "--neg", "2", "--N", "8", "--seed", "5"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["passed"], true);
    let ids: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"sum-identity"));
    assert!(ids.contains(&"difference-identity"));
}

#[test]
fn expansions() {
    assert_eq!(stdout_of(&["expand", "q", "3"]), "q_3 = 2/3*p(3) + 4/3*p(1,1,1)\n");
    assert_eq!(stdout_of(&["expand", "p", "1"]), "p_(1) = 1/2*Q(1)\n");
    let s = stdout_of(&["expand", "Q", "3,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["name"], "Q_(3,1)");
    assert_eq!(v["p"]["coeffs"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_and_io_errors_exit_two() {
    spinq().args(["verify", "nonsense"]).assert().code(2);
    spinq().args(["expand", "Q", "1,3"]).assert().code(2);
    spinq().args(["expand", "p", "2"]).assert().code(2);
    spinq().args(["fock-dim", "--N", "3"]).assert().code(2);
    spinq().args(["series", "bogus"]).assert().code(2);
    spinq()
        .args(["chartable", "--group", "/nonexistent/g.json", "--degree", "2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("/nonexistent/g.json"));
}

#[test]
fn malformed_json_reports_path_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"name\": \"x\",\n  \"order\": }\n").unwrap();
    spinq()
        .args(["chartable", "--group", path.to_str().unwrap(), "--degree", "1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("bad.json:3"));
}
