use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar-turan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn schema_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"))
}

/// Runs with `--json`, checks the exit code and validates against the
/// subcommand's schema.
fn json(schema: &str, args: &[&str], code: i32) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(code), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let value: Value = serde_json::from_slice(&out.stdout).expect("json output");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(schema_path(schema)).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("valid schema");
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema:?}: {errors:?}");
    value
}

fn temp_rot(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("planar-turan-cli-{}-{name}.rot", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn check_cycle_on_c8_file() {
    let rot = "n 8\n0: 1 7\n1: 2 0\n2: 3 1\n3: 4 2\n4: 5 3\n5: 6 4\n6: 7 5\n7: 0 6\n";
    let path = temp_rot("c8", rot);
    let p = path.to_str().unwrap();
    let out = run(&["check-cycle", "-i", p, "-l", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "false");
    let v = json("check-cycle", &["check-cycle", "-i", p, "-l", "8"], 0);
    assert_eq!(v["found"], true);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn construct_glued_chain() {
    let v = json("construct", &["construct", "--family", "glued-k4", "--copies", "18"], 0);
    let c = &v["certified"];
    assert_eq!(c["vertex_count"], 38);
    assert_eq!(c["edge_count"], 91);
    assert_eq!(c["c7_free"], true);
    assert_eq!(c["bound_value"], "636/7");
}

#[test]
fn construct_substitution() {
    let v = json(
        "construct",
        &["construct", "--family", "substitution", "--host", "c8", "--block", "octahedron"],
        0,
    );
    assert_eq!(v["certified"]["vertex_count"], 40);
    assert_eq!(v["certified"]["edge_count"], 96);
    assert_eq!(v["certified"]["excess"], "0");
    let out = run(&["construct", "--family", "substitution", "--host", "c7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn charge_verdicts_map_to_exit_codes() {
    let v = json("charge", &["charge", "-g", "octahedron"], 1);
    assert_eq!(v["total_g"], "24");
    let v = json("charge", &["charge", "-g", "c8"], 0);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 8);
}

#[test]
fn decompose_named() {
    let v = json("decompose", &["decompose", "-g", "glued-k4-3"], 0);
    let classes: Vec<&str> = v["blocks"].as_array().unwrap().iter().map(|b| b["class"].as_str().unwrap()).collect();
    assert!(classes.contains(&"B4a") && classes.contains(&"B6i"));
}

#[test]
fn sparse_and_membership() {
    let v = json("sparse", &["sparse", "-g", "c8", "--alpha", "18/7", "--max", "4"], 0);
    assert_eq!(v["set"], serde_json::json!([0]));
    let v = json("sparse", &["sparse", "-g", "octahedron", "--alpha", "18/7", "--max", "4"], 0);
    assert!(v["set"].is_null());
    json("membership", &["membership", "-g", "octahedron"], 0);
    let v = json("membership", &["membership", "-g", "c8"], 1);
    assert_eq!(v["member"], false);
}

#[test]
fn oracle_small() {
    let v = json("oracle", &["oracle", "--n", "6", "--ell", "7"], 0);
    assert_eq!(v["max_edges"], 12);
}

#[test]
fn oracle_resume_from_cache() {
    let dir = std::env::temp_dir().join(format!("planar-turan-cli-cache-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let first = json("oracle", &["oracle", "--n", "6", "--ell", "5", "--cache", d], 0);
    let resumed = json("oracle", &["oracle", "--n", "7", "--ell", "5", "--cache", d, "--resume"], 0);
    let fresh = json("oracle", &["oracle", "--n", "7", "--ell", "5"], 0);
    assert_eq!(resumed, fresh);
    assert_eq!(first["n"], 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_hpath_census() {
    let v = json("verify", &["verify", "--lemma", "hpath", "--max-n", "6", "--jobs", "1"], 0);
    assert!(v["violations"].as_array().unwrap().is_empty());
    for key in ["B6a (ii)", "B6c (iii)", "B6d (ii)"] {
        assert!(v["census"].get(key).is_some(), "{key}");
    }
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["--json", "verify", "--lemma", "paths", "--max-n", "6"]);
    let b = run(&["--json", "verify", "--lemma", "paths", "--max-n", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--json", "charge", "-g", "b7a"]);
    let b = run(&["--json", "charge", "-g", "b7a"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["charge", "-g", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["charge", "-i", "/nonexistent.rot"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--lemma", "paths", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--lemma", "nope", "--max-n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let bad = temp_rot("bad", "n 3\n0: 1\n1: 2\n");
    assert_eq!(run(&["decompose", "-i", bad.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_file(bad).unwrap();
    // two triangles sharing a vertex
    let bowtie = temp_rot("bowtie", "n 5\n0: 1 2 3 4\n1: 2 0\n2: 0 1\n3: 4 0\n4: 0 3\n");
    let out = run(&["charge", "-i", bowtie.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2-connected"));
    std::fs::remove_file(bowtie).unwrap();
}
