use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logspencer")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", stderr(out));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

const SURFACE: &str = "(x*z + y)*(x^4 + y^5 + x*y^4)";

#[test]
fn surface_is_certified_not_spencer() {
    let out = run(&["syzygy-check", &path("non_spencer.json"), &path("non_spencer_q.json")]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).trim_end().ends_with("H⁻¹ ≠ 0 certified: D is not Spencer at 0"));

    let v = json(&run(&["--json", "syzygy-check", &path("non_spencer.json"), &path("non_spencer_q.json")]));
    assert_eq!(v["kernel"], true);
    assert_eq!(v["certifying_column"], 1);
    assert_eq!(v["columns"][2]["colon"], serde_json::json!(["x", "y"]));
}

#[test]
fn cross_check_does_not_find_the_surface_operators() {
    let v = json(&run(&[
        "--json",
        "syzygy-check",
        &path("non_spencer.json"),
        &path("non_spencer_q.json"),
        "--cross-check",
        "1",
    ]));
    assert_eq!(v["bounded_image_contains_q"], false);
}

#[test]
fn zero_operators_have_no_obstruction() {
    let out = run(&["syzygy-check", &path("non_spencer.json"), &path("zero_q.json")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("kernel member; no obstruction"));
}

#[test]
fn normal_crossings_analysis() {
    let v = json(&run(&["--json", "analyze", "x,y,z", "x*y*z", "--koszul"]));
    assert_eq!(v["freeness"]["status"], "certified");
    assert_eq!(v["alphas"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(v["koszul"], true);
    assert!(v.get("timings").is_none());
}

#[test]
fn surface_analysis_with_frame_file() {
    let v = json(&run(&[
        "--json",
        "analyze",
        "x,y,z",
        SURFACE,
        "--frame",
        &path("non_spencer.json"),
        "--koszul",
        "--operators",
        &path("non_spencer_q.json"),
    ]));
    assert_eq!(v["freeness"]["status"], "certified");
    assert_eq!(v["freeness"]["cofactor"], "1");
    assert_eq!(v["koszul"], false);
    assert_eq!(v["spencer"]["verdict"], "H⁻¹ ≠ 0 certified: D is not Spencer at 0");
}

#[test]
fn input_errors_exit_with_two() {
    let out = run(&["analyze", "x,y", "x^2*y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not reduced"));

    // three operators expected, the cusp frame has two rows
    let out = run(&["syzygy-check", &path("cusp.json"), &path("zero_q.json")]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"variables": ["x", "y"], "divisor": "x*y", "anchor": [["1", "0"], ["0", "y"]], "sub_basis": []}"#)
        .unwrap();
    let out = run(&["spencer", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["spencer", &path("does_not_exist.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn presentation_of_the_surface() {
    let out = run(&["presentation", &path("non_spencer.json"), "--m", "1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().next().unwrap().starts_with("δ1 + "));

    let out = run(&["presentation", &path("xyz.json"), "--m", "-2"]);
    assert_eq!(stdout(&out).lines().collect::<Vec<_>>(), ["δ1 - 2", "δ2 - 2", "δ3 - 2"]);
}

#[test]
fn spencer_export_matches_json_output() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cx.json");
    let out = run(&["--json", "spencer", &path("cusp.json"), "--twist", "-1", "--export", file.to_str().unwrap()]);
    let printed = json(&out);
    let exported: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(printed, exported);
    assert_eq!(exported["compositions_vanish"], true);
    assert_eq!(exported["twist"], -1);
    assert_eq!(exported["maps"].as_array().unwrap().len(), 2);
    assert_eq!(exported["maps"][1]["rows"].as_array().unwrap().len(), 1);
}

#[test]
fn spencer_text_for_normal_crossings() {
    let out = run(&["spencer", &path("xyz.json")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("d^-3:"));
    assert!(text.trim_end().ends_with("compositions vanish: true"));
}

#[test]
fn appendix_check_small() {
    let out = run(&["appendix-check", &path("cusp.json"), "--samples", "10", "--seed", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).trim_end().ends_with("all identities pass"));
    let v = json(&run(&["--json", "appendix-check", &path("xyz.json"), "--samples", "5"]));
    assert_eq!(v["passed"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "analyze", "x,y", "x^2 - y^3", "--koszul"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["appendix-check", &path("cusp.json"), "--samples", "8", "--seed", "11"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
}
