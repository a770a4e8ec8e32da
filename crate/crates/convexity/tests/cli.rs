//! Black-box tests of the binary: exit codes, report content, artifact
//! files, and byte-for-byte determinism of the JSON output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str], input: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_convexity"));
    cmd.arg(args[0]);
    if let Some(name) = input {
        cmd.arg("--input").arg(data(name));
    }
    cmd.args(&args[1..]);
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated normally")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_passes_on_three_collinear_points() {
    let out = run(&["verify"], Some("three_collinear.json"));
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["passed"], serde_json::json!(true));
    assert_eq!(
        report["sphere"]["f_vector"],
        serde_json::json!(["1", "18", "48", "32"])
    );
    assert_eq!(
        report["sphere"]["h_vector"],
        serde_json::json!(["1", "15", "15", "1"])
    );
    assert_eq!(
        report["enriched"]["counts"][0]["enumerated"],
        serde_json::json!("4")
    );
}

#[test]
fn every_subcommand_succeeds_on_valid_inputs() {
    for input in [
        "three_collinear.json",
        "fence_upper.json",
        "chain_family.json",
    ] {
        for sub in ["lattice", "complex", "sphere", "qsym", "enriched"] {
            let out = run(&[sub], Some(input));
            assert_eq!(code(&out), 0, "{sub} on {input}: {:?}", out);
            assert_eq!(stdout_json(&out)["passed"], serde_json::json!(true));
        }
    }
}

#[test]
fn malformed_json_is_an_input_error() {
    let out = run(&["lattice"], Some("malformed.json"));
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("parse error"), "stderr: {stderr}");
    assert!(stderr.contains("line"), "stderr: {stderr}");
}

#[test]
fn invalid_geometry_is_refused_with_a_witness() {
    let out = run(&["verify"], Some("not_a_geometry.json"));
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("invalid geometry"), "stderr: {stderr}");
    assert!(stderr.contains("anti-exchange"), "stderr: {stderr}");
}

#[test]
fn missing_file_is_an_input_error() {
    let out = run(&["lattice"], Some("no_such_file.json"));
    assert_eq!(code(&out), 2);
}

#[test]
fn facet_cap_is_a_resource_error() {
    let out = run(
        &["sphere", "--max-facets", "5"],
        Some("three_collinear.json"),
    );
    assert_eq!(code(&out), 3);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("resource limit"), "stderr: {stderr}");
}

#[test]
fn bad_flag_combinations_are_input_errors() {
    let out = run(&["lattice", "--emit", "dot"], Some("three_collinear.json"));
    assert_eq!(code(&out), 2, "--emit without --out");
    let out = run(
        &["lattice", "--emit", "svg", "--out", "/tmp"],
        Some("three_collinear.json"),
    );
    assert_eq!(code(&out), 2, "unknown --emit format");
    let out = run(&["enriched", "--m-max", "0"], Some("three_collinear.json"));
    assert_eq!(code(&out), 2, "--m-max 0");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = run(&["sphere"], Some("square_plus_center.json"));
    let b = run(&["sphere"], Some("square_plus_center.json"));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["enriched"], Some("fence_upper.json"));
    let b = run(&["enriched"], Some("fence_upper.json"));
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn artifacts_land_in_the_output_directory() {
    let dir = tempfile::tempdir().expect("temp dir");
    let out = Command::new(env!("CARGO_BIN_EXE_convexity"))
        .arg("sphere")
        .arg("--input")
        .arg(data("three_collinear.json"))
        .arg("--out")
        .arg(dir.path())
        .args(["--emit", "json,dot,off"])
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0);
    for name in ["sphere.json", "qposet.json", "qposet.dot", "sphere.off"] {
        let path = dir.path().join(name);
        assert!(path.is_file(), "{name} missing");
    }
    let off = std::fs::read_to_string(dir.path().join("sphere.off")).unwrap();
    assert!(off.starts_with("OFF\n18 32 0\n"), "off header: {off:.40}");
    let dot = std::fs::read_to_string(dir.path().join("qposet.dot")).unwrap();
    assert!(dot.starts_with("digraph poset {"));
}

#[test]
fn lattice_report_matches_for_equivalent_representations() {
    // the same closed-set family entered as 1-d points and as an explicit
    // family: everything except the kind tag must agree
    let a = stdout_json(&run(&["lattice"], Some("three_collinear.json")));
    let b = stdout_json(&run(&["lattice"], Some("chain_family.json")));
    assert_eq!(a["geometry"]["kind"], serde_json::json!("points1d"));
    assert_eq!(b["geometry"]["kind"], serde_json::json!("family"));
    assert_eq!(a["closed_sets"], b["closed_sets"]);
    assert_eq!(a["covers"], b["covers"]);
    assert_eq!(a["zeta_polynomial"], b["zeta_polynomial"]);
}
