//! End-to-end tests of the `stieltjes` binary.

use std::process::{Command, Output};

use serde_json::Value;
use stieltjes_core::orthopoly::{family_coeffs, Family};
use stieltjes_core::quadrature::gauss_rule;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stieltjes")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn gauss_legendre_two_points() {
    let out = run(&["gauss", "--family", "legendre", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "gauss");
    let nodes: Vec<f64> = serde_json::from_value(v["results"]["nodes"].clone()).unwrap();
    let weights: Vec<f64> = serde_json::from_value(v["results"]["weights"].clone()).unwrap();
    let r = 1.0 / 3f64.sqrt();
    assert!(close(nodes[0], -r, 1e-15) && close(nodes[1], r, 1e-15));
    assert!(close(weights[0], 1.0, 1e-15) && close(weights[1], 1.0, 1e-15));
    assert_eq!(v["results"]["exactness"], 3);
}

#[test]
fn json_round_trip_is_bit_exact() {
    let out = run(&["gauss", "--family", "hermite", "--n", "17"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let nodes: Vec<f64> = serde_json::from_value(v["results"]["nodes"].clone()).unwrap();
    let weights: Vec<f64> = serde_json::from_value(v["results"]["weights"].clone()).unwrap();
    let rule = gauss_rule(&family_coeffs(Family::Hermite, 17).unwrap(), 17).unwrap();
    for (a, b) in nodes.iter().zip(&rule.nodes).chain(weights.iter().zip(&rule.weights)) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
    // a second serialize/parse cycle changes nothing
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn verify_markov_stieltjes_passes() {
    let out = run(&["verify", "markov-stieltjes", "--family", "legendre", "--n", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 30);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn zero_tolerance_fixture_fails_with_exit_one() {
    let out = run(&["verify", "sw-moments", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["passed"] == false));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["gauss", "--family", "legendre"]).status.code(), Some(2));
    assert_eq!(run(&["gauss", "--family", "bessel", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["gauss", "--family", "legendre", "--n", "3", "--frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["elliptic", "fn", "--k", "0.5"]).status.code(), Some(2));
    let out = run(&["verify", "nested-sums", "--jobs", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn selberg_trivial_case() {
    let v = json(&run(&["selberg", "--n", "1", "--x", "1", "--y", "1", "--z", "7"]));
    assert!(close(v["results"]["value"].as_f64().unwrap(), 1.0, 1e-15));
}

#[test]
fn jobs_do_not_change_output() {
    let one = run(&["verify", "gap-bounds", "--family", "hermite", "--n", "25"]);
    let four = run(&["verify", "gap-bounds", "--family", "hermite", "--n", "25", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn every_suite_passes_at_default_tolerance() {
    for suite in [
        "markov-stieltjes",
        "nested-sums",
        "gap-bounds",
        "posse",
        "contraction",
        "pade",
        "interlacing",
        "sw-moments",
        "elliptic-cf",
        "expansion-bound",
    ] {
        let out = run(&["verify", suite, "--jobs", "2"]);
        assert_eq!(out.status.code(), Some(0), "suite {suite}: {}", String::from_utf8_lossy(&out.stdout));
        assert!(!json(&out)["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn csv_output_lists_nodes_and_weights() {
    let out = run(&["gauss", "--family", "chebyshev-t", "--n", "4", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "node,weight");
    assert_eq!(lines.len(), 5);
    let w: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!(close(w, std::f64::consts::PI / 4.0, 1e-14));
}

#[test]
fn moment_files() {
    let out = run(&["moments", "check", "--file", &fixture("factorial.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checks"].as_array().unwrap().len(), 2);

    let out = run(&["moments", "check", "--file", &fixture("hermite.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["results"]["shifted"]["verdict"]["failed_at"], 1);

    let out = run(&["moments", "check", "--file", &fixture("hermite.json"), "--kind", "hamburger"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["moments", "check", "--file", &fixture("harmonic.json"), "--precision", "extended"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["hausdorff"]["consistent"], true);

    assert_eq!(run(&["moments", "check", "--file", "/nonexistent.json"]).status.code(), Some(1));
}

#[test]
fn seed_variable_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_stieltjes"))
        .args(["selberg", "--n", "2", "--x", "1", "--y", "1", "--z", "1"])
        .env("STIELTJES_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn electrostatic_systems() {
    for args in [
        vec!["electro", "--n", "8", "--p", "0.25", "--q", "2"],
        vec!["electro", "--n", "6", "--p", "1", "--constraint", "centroid:3"],
        vec!["electro", "--n", "7", "--constraint", "inertia:0.5"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&out)["checks"].as_array().unwrap().len(), 2);
    }
}
