//! Behavior of the command-line interface: exit codes, artifact round
//! trips, and determinism of generated output.

use std::path::Path;
use std::process::{Command, Output};

use rbdsat::cnf::{parse_dimacs, ParseOptions};
use rbdsat::srb::{SplitPolicy, SrbTree};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rbdsat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).expect("test file written");
    path.display().to_string()
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn detect_writes_a_valid_backdoor() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "unit.cnf", "p cnf 1 1\n1 0");
    let artifact = dir.path().join("srb.json");
    let out = run(&["detect", &cnf, "-k", "2", "--out", artifact.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let text = std::fs::read_to_string(&artifact).unwrap();
    let tree = SrbTree::from_json(&text).unwrap();
    let formula = parse_dimacs("p cnf 1 1\n1 0", ParseOptions::default())
        .unwrap()
        .formula;
    assert!(tree.validate(&formula, SplitPolicy::AllowDeferredSplit).is_empty());
}

#[test]
fn detect_reports_too_deep_for_wide_clauses() {
    let dir = tempfile::tempdir().unwrap();
    // A clause of width k + 1 cannot have depth k.
    let cnf = write(dir.path(), "wide.cnf", "p cnf 3 1\n1 2 3 0");
    let out = run(&["detect", &cnf, "-k", "2"]);
    assert_eq!(out.status.code(), Some(20));
    assert_eq!(stdout(&out).trim(), "TOO-DEEP");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "bad.cnf", "p cnf 1 1\n1 x 0");
    let out = run(&["detect", &cnf, "-k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("absent.cnf");
    let out = run(&["solve", missing.to_str().unwrap(), "-k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_exit_codes_encode_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let sat = write(dir.path(), "sat.cnf", "p cnf 2 1\n1 2 0");
    let unsat = write(dir.path(), "unsat.cnf", "p cnf 1 2\n1 0\n-1 0");
    let out = run(&["solve", &sat, "-k", "4"]);
    assert_eq!((out.status.code(), stdout(&out).trim().to_string()), (Some(10), "SAT".into()));
    let out = run(&["solve", &unsat, "-k", "4"]);
    assert_eq!((out.status.code(), stdout(&out).trim().to_string()), (Some(20), "UNSAT".into()));
    // Budget 0 admits only empty-class formulas.
    let out = run(&["solve", &sat, "-k", "0"]);
    assert_eq!((out.status.code(), stdout(&out).trim().to_string()), (Some(30), "TOO-DEEP".into()));
}

#[test]
fn count_prints_the_model_count() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "pair.cnf", "p cnf 2 1\n1 2 0");
    let out = run(&["count", &cnf, "-k", "12"]);
    assert_eq!(out.status.code(), Some(10));
    assert_eq!(stdout(&out).trim(), "3");
    let falsum = write(dir.path(), "falsum.cnf", "p cnf 1 2\n1 0\n-1 0");
    let out = run(&["count", &falsum, "-k", "12"]);
    assert_eq!(out.status.code(), Some(20));
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn oracle_reports_measures_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.cnf", "p cnf 0 0");
    let out = run(&["oracle", &empty, "--measure", "srbd", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["value"], serde_json::json!(0));
    assert_eq!(doc["measure"], serde_json::json!("srbd"));

    let falsum = write(dir.path(), "falsum.cnf", "p cnf 1 2\n1 0\n-1 0");
    let out = run(&["oracle", &falsum, "--measure", "wrbd", "--cap", "6"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["value"], serde_json::json!("infinite"));
}

#[test]
fn wrb_emits_witness_line_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "unit.cnf", "p cnf 1 1\n1 0");
    let out = run(&["wrb", &cnf, "-k", "1"]);
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    assert!(text.starts_with("v 1 0\n"), "got: {text}");
    let json_part = text.split_once('\n').unwrap().1;
    let doc: serde_json::Value = serde_json::from_str(json_part).unwrap();
    assert_eq!(doc["outcome"], serde_json::json!("satisfiable"));

    let unsat = write(dir.path(), "unsat.cnf", "p cnf 1 2\n1 0\n-1 0");
    let out = run(&["wrb", &unsat, "-k", "5"]);
    assert_eq!(out.status.code(), Some(30));
}

#[test]
fn validate_rejects_a_tampered_artifact() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "pair.cnf", "p cnf 2 1\n1 2 0");
    let artifact = dir.path().join("srb.json");
    let out = run(&["detect", &cnf, "-k", "3", "--out", artifact.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["validate", &cnf, "--artifact", artifact.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // Shrink the target class below the widest leaf-producing clause.
    let tampered = std::fs::read_to_string(&artifact)
        .unwrap()
        .replace("\"var\": 1", "\"var\": 9");
    let bad = dir.path().join("tampered.json");
    std::fs::write(&bad, tampered).unwrap();
    let out = run(&["validate", &cnf, "--artifact", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("violation"));
}

#[test]
fn sanitize_flag_controls_tautology_handling() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "taut.cnf", "p cnf 2 2\n1 -1 0\n2 0");
    let strict = run(&["solve", &cnf, "-k", "4"]);
    assert_eq!(strict.status.code(), Some(2));
    let relaxed = run(&["solve", &cnf, "-k", "4", "--sanitize"]);
    assert_eq!(relaxed.status.code(), Some(10));
}

#[test]
fn generated_output_is_seed_deterministic() {
    let first = run(&["gen", "random", "-n", "8", "-m", "10", "--width", "3", "--seed", "7"]);
    let second = run(&["gen", "random", "-n", "8", "-m", "10", "--width", "3", "--seed", "7"]);
    assert_eq!(first.stdout, second.stdout);
    let other = run(&["gen", "random", "-n", "8", "-m", "10", "--width", "3", "--seed", "8"]);
    assert_ne!(first.stdout, other.stdout);
}

#[test]
fn gen_writes_dimacs_with_roles_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("grid.cnf");
    let out = run(&["gen", "grid", "--size", "3", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let dimacs = std::fs::read_to_string(&out_path).unwrap();
    assert!(dimacs.starts_with("p cnf 41 33"));
    let sidecar: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("grid.cnf.roles.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(sidecar["roles"]["special_var"], serde_json::json!(1));
    assert_eq!(sidecar["roles"]["grid_clauses"].as_array().unwrap().len(), 9);
}

#[test]
fn guard_exhaustion_exits_40() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(
        dir.path(),
        "chain.cnf",
        "p cnf 6 5\n1 2 0\n2 3 0\n3 4 0\n4 5 0\n5 6 0",
    );
    let out = run(&["detect", &cnf, "-k", "5", "--max-nodes", "3"]);
    assert_eq!(out.status.code(), Some(40));
}

#[test]
fn thread_cap_env_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "unit.cnf", "p cnf 1 1\n1 0");
    let out = bin()
        .args(["solve", &cnf, "-k", "2"])
        .env("RBDSAT_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["solve", &cnf, "-k", "2"])
        .env("RBDSAT_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(10));
}

#[test]
fn json_reports_carry_digest_and_outcome() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "unit.cnf", "p cnf 1 1\n1 0");
    let out = run(&["solve", &cnf, "-k", "2", "--json"]);
    assert_eq!(out.status.code(), Some(10));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["outcome"], serde_json::json!("sat"));
    assert_eq!(doc["command"], serde_json::json!("solve"));
    let digest = doc["input"]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
}
