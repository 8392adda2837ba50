use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fan(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fans").join(format!("{name}.json")).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multifan")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let code = out.status.code().expect("exit code");
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (code, json)
}

#[test]
fn validate_reports_faces_and_degree() {
    let (code, r) = report(&["validate", &fan("p2")]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["face_counts"], serde_json::json!([1, 3, 3]));
    assert_eq!(r["results"]["complete"], true);
    assert_eq!(r["results"]["degree"], 1);
    let (code, r) = report(&["validate", &fan("half_line")]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["pre_complete"], false);
    assert!(r["warnings"][0].as_str().unwrap().contains("not pre-complete"));
}

#[test]
fn malformed_documents_fail_with_location() {
    let dir = std::env::temp_dir().join(format!("multifan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"rank": 2, "rays": [[1, 0], [0, 1]], "cones": [{"rays": [0, 7], "weight": 1}]}"#).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cone 0"));
    std::fs::write(&path, "{\"rank\": 2,\n \"rays\": [[1, 0.5]], \"cones\": []}").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn ehrhart_with_checks() {
    let (code, r) = report(&["ehrhart", &fan("square"), "--nu-check", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["coefficients"], serde_json::json!([4, 4, 1]));
    assert_eq!(r["checks"].as_array().unwrap().len(), 5);
    let (_, r) = report(&["ehrhart", &fan("p2")]);
    assert_eq!(r["results"]["coefficients"], serde_json::json!(["9/2", "9/2", 1]));
    let (_, r) = report(&["ehrhart", &fan("wp112"), "--xi", "sum"]);
    assert_eq!(r["results"]["coefficients"], serde_json::json!([4, 4, 1]));
}

#[test]
fn ehrhart_falls_back_when_not_cartier() {
    let (code, r) = report(&["ehrhart", &fan("wp112"), "--xi", "first", "--nu-check", "3"]);
    assert_eq!(code, 0);
    assert!(r["warnings"][0].as_str().unwrap().contains("T-Cartier"));
    assert_eq!(r["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn count_volume_todd() {
    let (code, r) = report(&["count", &fan("square")]);
    assert_eq!(code, 0);
    assert_eq!((r["results"]["formula"].clone(), r["results"]["bruteforce"].clone()), (9.into(), 9.into()));
    let (_, r) = report(&["count", &fan("square"), "--face", "1"]);
    assert_eq!(r["results"]["formula"], 3);
    let (code, r) = report(&["volume", &fan("square"), "--face", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["volume"], 2);
    let (code, r) = report(&["todd", &fan("double_p1")]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["todd_genus"], 2);
    let (code, r) = report(&["volume", &fan("p2"), "--xi", "1/2,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["volume"], "25/8");
}

#[test]
fn todd_flags_incomplete_fans() {
    let (code, r) = report(&["todd", &fan("half_line")]);
    assert_eq!(code, 1);
    assert_eq!(r["passed"], false);
}

#[test]
fn morelli_residuals_vanish() {
    let (code, r) = report(&["morelli", &fan("p2"), "--k", "1", "--planes", "10"]);
    assert_eq!(code, 0);
    let planes = r["results"]["degrees"][0]["planes"].as_array().unwrap();
    assert_eq!(planes.len(), 10);
    for plane in planes {
        assert!(plane["certificate"]["line_conditions"].as_u64().unwrap() > 0);
        for row in plane["residuals"].as_array().unwrap() {
            assert!(row.as_array().unwrap().iter().all(|x| *x == 0));
        }
    }
    let (code, _) = report(&["morelli", &fan("wp112"), "--k", "2", "--planes", "5", "--xs", "2,-1,3"]);
    assert_eq!(code, 0);
    let (code, r) = report(&["morelli", &fan("square"), "--k", "1", "--cohomology"]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "morelli --cohomology");
}

#[test]
fn reports_are_reproducible() {
    let args = ["morelli", &fan("hirzebruch1"), "--planes", "3", "--seed", "5", "--table"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let other = ["morelli", &fan("hirzebruch1"), "--planes", "3", "--seed", "6", "--table"];
    assert_ne!(run(&args).stdout, run(&other).stdout);
}

#[test]
fn subdivide_check() {
    for ray in ["1,1", "2,1"] {
        let (code, r) = report(&["subdivide-check", "--edges", "1,0;0,1", "--ray", ray]);
        assert_eq!(code, 0, "{r}");
        assert_eq!(r["checks"].as_array().unwrap().len(), 5);
    }
    let (code, r) = report(&["subdivide-check", &fan("p3"), "--cone", "1", "--ray", "1,1,-1", "--directions", "2"]);
    assert_eq!(code, 0, "{r}");
    let (code, _) = report(&["subdivide-check", "--edges", "1,0;0,1"]);
    assert_eq!(code, 0);
    let out = run(&["subdivide-check", "--edges", "1,0;0,1", "--ray", "1,-1"]);
    assert_eq!(out.status.code(), Some(2));
}
