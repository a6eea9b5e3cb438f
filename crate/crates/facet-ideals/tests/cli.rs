//! End-to-end tests of the command-line binary: exit codes, JSON output,
//! and the generate/analyze round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_facet-ideals"))
}

fn write_fixture(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!(
        "facet-ideals-test-{name}-{}.cplx",
        std::process::id()
    ));
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn analyze_reports_and_exits_zero() {
    let path = write_fixture("neq", "a b c\nb c d\nc e f\nc f g\n");
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("pure: true"));
    assert!(text.contains("connected_codim1: false"));
    std::fs::remove_file(path).ok();
}

#[test]
fn betti_all_is_the_regression_gate_on_forests() {
    let path = write_fixture("path3", "a b\nb c\nc d\n");
    let out = run(&["betti", path.to_str().unwrap(), "--method", "all"]);
    assert_eq!(out.status.code(), Some(0), "cross-checks must agree");
    let out = run(&[
        "betti",
        path.to_str().unwrap(),
        "--method",
        "all",
        "--field",
        "gf:2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_file(path).ok();
}

#[test]
fn precondition_violations_exit_two() {
    let path = write_fixture("c4", "a b\nb c\nc d\nd a\n");
    let out = run(&["betti", path.to_str().unwrap(), "--method", "recursive"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a forest"));
    std::fs::remove_file(path).ok();
}

#[test]
fn parse_errors_exit_two() {
    let path = write_fixture("nested", "a b\na\n");
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // Normalizing drops the nested face instead.
    let out = run(&["analyze", path.to_str().unwrap(), "--normalize"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_file(path).ok();
}

#[test]
fn failed_property_checks_exit_one() {
    let path = write_fixture("c4check", "a b\nb c\nc d\nd a\n");
    let out = run(&[
        "check",
        path.to_str().unwrap(),
        "--property",
        "monomial-basis",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("holds: false"));
    std::fs::remove_file(path).ok();
}

#[test]
fn json_output_is_valid() {
    let path = write_fixture("json", "a b\nb c\n");
    let out = run(&["classify", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(parsed["schema_version"], 1);
    assert_eq!(parsed["result"]["classifications_agree"], true);
    std::fs::remove_file(path).ok();
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let a = run(&[
        "gen",
        "--kind",
        "linear-tree",
        "--facets",
        "5",
        "--dim",
        "2",
        "--seed",
        "11",
    ]);
    let b = run(&[
        "gen",
        "--kind",
        "linear-tree",
        "--facets",
        "5",
        "--dim",
        "2",
        "--seed",
        "11",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "same seed, same bytes");

    let path = write_fixture("gen", &String::from_utf8(a.stdout).unwrap());
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("intersection_property: true"));
    std::fs::remove_file(path).ok();
}

#[test]
fn reg_and_pd_report_against_the_oracle() {
    let path = write_fixture("c5", "a b\nb c\nc d\nd e\ne a\n");
    let out = run(&["reg", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("oracle_regularity: 2"));
    assert!(text.contains("disconnected_edges: 1"));
    assert!(text.contains("forest: false"));
    std::fs::remove_file(path).ok();

    let path = write_fixture("star", "x a\nx b\nx c\n");
    let out = run(&["pd", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bouquet_pd: 3"));
    assert!(text.contains("theorem_agrees: true"));
    std::fs::remove_file(path).ok();
}
