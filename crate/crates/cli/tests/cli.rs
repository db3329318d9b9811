//! End-to-end tests against the built binary: subcommand values, the
//! machine-output schema, and the exit-status contract.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltamult"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (Value, Output) {
    let mut full = args.to_vec();
    full.push("--format");
    full.push("json");
    let output = run(&full);
    let value: Value =
        serde_json::from_slice(&output.stdout).expect("machine output is valid JSON");
    (value, output)
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path.display().to_string()
}

fn assert_schema(value: &Value) {
    for key in ["subcommand", "inputs", "results", "timings", "status"] {
        assert!(
            value.get(key).is_some(),
            "missing key `{}` in {}",
            key,
            value
        );
    }
}

#[test]
fn torus_mult_all_methods_agree() {
    let (value, output) = run_json(&["torus-mult", "--p", "2", "--q", "3", "--method", "all"]);
    assert!(output.status.success());
    assert_schema(&value);
    let results = &value["results"];
    assert_eq!(results["closed_form"], "2");
    assert_eq!(results["groebner"], "2");
    assert_eq!(results["bezout"], "2");
    assert_eq!(results["agree"], true);
}

#[test]
fn torus_mult_modular_check() {
    let (value, output) = run_json(&["torus-mult", "--p", "2", "--q", "5", "--modular-check"]);
    assert!(output.status.success());
    assert_eq!(value["results"]["modular"], "3");
    assert_eq!(value["results"]["agree"], true);
}

#[test]
fn torus_mult_rejects_bad_exponents() {
    let (value, output) = run_json(&["torus-mult", "--p", "4", "--q", "6"]);
    assert!(!output.status.success());
    assert_eq!(value["status"], "error");
    assert!(value["results"]["error"]
        .as_str()
        .unwrap()
        .contains("coprime"));
}

#[test]
fn counts_table_to_genus_three() {
    let (value, output) = run_json(&["counts", "--gmax", "3"]);
    assert!(output.status.success());
    let counts: Vec<&str> = value["results"]["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(counts, ["1", "24", "324", "3200"]);
}

#[test]
fn delta_reports_invariants() {
    let (value, output) = run_json(&["delta", "--p", "3", "--q", "4"]);
    assert!(output.status.success());
    assert_eq!(value["results"]["delta"], "3");
    assert_eq!(value["results"]["conductor"], "6");
    let gaps: Vec<&str> = value["results"]["gaps"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(gaps, ["1", "2", "5"]);
}

#[test]
fn length_local_of_fat_point() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "cusp.poly",
        "vars: x y\norder: grevlex\nx^2\ny\n",
    );
    let (value, output) = run_json(&["length", "--input", &path, "--local"]);
    assert!(output.status.success());
    assert_eq!(value["results"]["length"], "2");
}

#[test]
fn length_global_dimension_and_weighted_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(
        dir.path(),
        "trefoil.poly",
        "vars: x0 y0 y1\norder: weighted 2 3 2\n4*y1 - 6*x0\n6*y0\n-2*x0*y1\n",
    );
    let (value, output) = run_json(&["length", "--input", &path, "--modular-check"]);
    assert!(output.status.success());
    assert_eq!(value["results"]["dimension"], "2");
    assert_eq!(value["results"]["zero_dimensional"], true);
    assert_eq!(value["results"]["modular"], "2");
    assert_eq!(value["results"]["modular_agrees"], true);
}

#[test]
fn length_reports_infinite_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "curve.poly", "vars: x y\norder: grevlex\nx*y\n");
    let (value, output) = run_json(&["length", "--input", &path]);
    assert!(output.status.success());
    assert_eq!(value["results"]["dimension"], "infinite");
    assert_eq!(value["results"]["zero_dimensional"], false);

    // ... but the localization of a curve is not finite, and that is an error
    let (value, output) = run_json(&["length", "--input", &path, "--local"]);
    assert!(!output.status.success());
    assert!(value["results"]["error"]
        .as_str()
        .unwrap()
        .contains("not isolated at origin"));
}

#[test]
fn length_requires_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "empty.poly", "vars: x\norder: grevlex\n");
    let (value, output) = run_json(&["length", "--input", &path]);
    assert!(!output.status.success());
    assert!(value["results"]["error"]
        .as_str()
        .unwrap()
        .contains("no polynomials"));
}

#[test]
fn length_syntax_error_carries_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "bad.poly", "vars: x\norder: grevlex\nx^\n");
    let (value, output) = run_json(&["length", "--input", &path]);
    assert!(!output.status.success());
    let message = value["results"]["error"].as_str().unwrap();
    assert!(message.contains("line 3"), "message: {}", message);
}

const CUSPIDAL_DOC: &str = "\
degree: 3
param_x: t^2*s
param_y: t^3
param_z: s^3
implicit: z*y^2 - x^3
";

#[test]
fn stable_map_cuspidal_cubic_length() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "cuspidal.sm", CUSPIDAL_DOC);
    let (value, output) = run_json(&["stable-map", "--input", &path]);
    assert!(output.status.success());
    assert_schema(&value);
    assert_eq!(value["results"]["length"], "2");
    assert_eq!(value["results"]["auto_marked_data"], true);
    assert_eq!(value["inputs"]["seed"], 1);

    // a different seed picks different marked data and the same length
    let (second, output) = run_json(&["stable-map", "--input", &path, "--seed", "7"]);
    assert!(output.status.success());
    assert_eq!(second["results"]["length"], "2");
    assert_ne!(
        second["results"]["marked_points"],
        value["results"]["marked_points"]
    );
}

#[test]
fn stable_map_honors_explicit_marked_data() {
    let doc = format!(
        "{}marked_points: 1:1, 1:-1, 1:2\nmarked_lines: x - y, x + y, 8*x - 4*y\n",
        CUSPIDAL_DOC
    );
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "explicit.sm", &doc);
    let (value, output) = run_json(&["stable-map", "--input", &path]);
    assert!(output.status.success(), "{}", value);
    assert_eq!(value["results"]["auto_marked_data"], false);
    assert_eq!(value["results"]["length"], "2");
}

#[test]
fn stable_map_rejects_half_given_marked_data() {
    let doc = format!("{}marked_points: 1:1, 1:-1, 1:2\n", CUSPIDAL_DOC);
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "half.sm", &doc);
    let (value, output) = run_json(&["stable-map", "--input", &path]);
    assert!(!output.status.success());
    assert!(value["results"]["error"]
        .as_str()
        .unwrap()
        .contains("together"));
}

#[test]
fn validate_passes_and_fails() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_file(dir.path(), "good.sm", CUSPIDAL_DOC);
    let (value, output) = run_json(&["validate", "--input", &good]);
    assert!(output.status.success());
    assert_eq!(value["results"]["valid"], true);

    // a marked point on the cusp: (s : t) = (1 : 0) maps to (0, 0, 1)
    let bad_doc = format!(
        "{}marked_points: 1:0, 1:-1, 1:2\nmarked_lines: x - y, x + y, 8*x - 4*y\n",
        CUSPIDAL_DOC
    );
    let bad = write_file(dir.path(), "bad.sm", &bad_doc);
    let (value, output) = run_json(&["validate", "--input", &bad]);
    assert!(!output.status.success());
    assert_eq!(value["results"]["valid"], false);
    let checks = value["results"]["validation"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "marked-points-smooth" && c["passed"] == false));
}

#[test]
fn unknown_subcommand_fails() {
    let output = run(&["frobnicate"]);
    assert!(!output.status.success());
}

#[test]
fn missing_file_fails_cleanly() {
    let (value, output) = run_json(&["length", "--input", "/nonexistent/x.poly"]);
    assert!(!output.status.success());
    assert!(value["results"]["error"]
        .as_str()
        .unwrap()
        .contains("cannot read"));
}
