use std::process::{Command, Output};

use serde_json::Value;

fn eccmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eccmat")).args(args).env_remove("ECCMAT_JOBS").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn build_families() {
    let out = eccmat(&["build", "star", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n0 1\n0 2\n0 3\n0 4\n");

    let out = eccmat(&["build", "lollipop", "3", "2"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("5"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn build_graph6_round_trip() {
    let out = eccmat(&["build", "--graph6", "D?{", "--format", "graph6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "D?{\n");
    let out = eccmat(&["build", "--graph6", "D?{"]);
    assert_eq!(stdout(&out), "5\n0 4\n1 4\n2 4\n3 4\n");
}

#[test]
fn build_writes_file() {
    let dir = std::env::temp_dir().join(format!("eccmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p4.txt");
    let out = eccmat(&["build", "path", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let out = eccmat(&["eccmat", "--edge-list", path.to_str().unwrap()]);
    assert_eq!(stdout(&out), "0,0,2,3\n0,0,0,2\n2,0,0,0\n3,2,0,0\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn eccmat_csv_and_json() {
    assert_eq!(stdout(&eccmat(&["eccmat", "star", "3"])), "0,1,1\n1,0,2\n1,2,0\n");
    assert_eq!(stdout(&eccmat(&["eccmat", "cycle", "4"])), "0,0,2,0\n0,0,0,2\n2,0,0,0\n0,2,0,0\n");
    let v = json(&eccmat(&["eccmat", "path", "4", "--format", "json"]));
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["command"], "eccmat");
    assert_eq!(v["input"]["family"], "path(4)");
    assert_eq!(v["result"]["entries"][0], serde_json::json!([0, 0, 2, 3]));
}

#[test]
fn exact_and_numeric_spectra() {
    let out = eccmat(&["spectrum", "--exact-family", "star", "7", "--format", "text"]);
    assert_eq!(stdout(&out), "{-2 ×5, 5-√31, 5+√31}\n");
    let v = json(&eccmat(&["spectrum", "--exact-family", "star", "7"]));
    assert_eq!(v["result"]["det"], "192");

    let v = json(&eccmat(&["spectrum", "star", "7"]));
    let entries = v["result"]["spectrum"].as_array().unwrap();
    let least = entries[0]["value"]["float"].as_f64().unwrap();
    assert!((least + 2.0).abs() < 1e-9);
    assert_eq!(entries[0]["mult"], 5);
    let middle = entries[1]["value"]["float"].as_f64().unwrap();
    assert!((middle - (5.0 - 31f64.sqrt())).abs() < 1e-9);
}

#[test]
fn exact_family_needs_family_input() {
    let out = eccmat(&["spectrum", "--exact-family", "--graph6", "D?{"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inertia_of_path() {
    assert_eq!(stdout(&eccmat(&["inertia", "path", "10", "--format", "text"])), "(2, 2, 6)\n");
    let v = json(&eccmat(&["inertia", "path", "10"]));
    assert_eq!(v["result"]["rank"], 4);
}

#[test]
fn verify_tree_conjecture_passes() {
    let out = eccmat(&["verify", "tree-conjecture", "--max-n", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["passed"], true);
    assert_eq!(v["result"]["reports"][0]["instances_checked"], 3 + 16 + 125 + 1296 + 16807);
}

#[test]
fn verify_output_is_reproducible() {
    let a = eccmat(&["verify", "tree-irreducibility", "--max-n", "6", "--jobs", "1"]);
    let b = eccmat(&["verify", "tree-irreducibility", "--max-n", "6", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let c = eccmat(&["verify", "properties", "--seed", "5"]);
    let d = eccmat(&["verify", "properties", "--seed", "5"]);
    assert_eq!(c.stdout, d.stdout);
    assert_eq!(json(&c)["result"]["reports"].as_array().unwrap().len(), 4);
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_eccmat"))
        .args(["verify", "tree-conjecture", "--max-n", "5"])
        .env("ECCMAT_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_eccmat"))
        .args(["verify", "sentinel"])
        .env("ECCMAT_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verification_failure_exits_one() {
    // cocktail(1) is outside the family, so the cross-check records a failure
    let out = eccmat(&["verify", "cocktail", "--grid", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"]["passed"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(eccmat(&["verify", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(eccmat(&["build", "star", "5", "--graph6", "D?{"]).status.code(), Some(2));
    assert_eq!(eccmat(&["build"]).status.code(), Some(2));
    assert_eq!(eccmat(&["build", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(eccmat(&["bogus"]).status.code(), Some(2));
    assert_eq!(eccmat(&["verify", "tree-conjecture", "--max-n", "10"]).status.code(), Some(2));
    assert_eq!(eccmat(&["build", "star", "1"]).status.code(), Some(3));

    // a path on three vertices plus an isolated vertex
    let out = eccmat(&["eccmat", "--graph6", "Cg"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
}
