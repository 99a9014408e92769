use std::fs;
use std::process::{Command, Output};

use wrtcone::cli::presets::PRESETS;
use wrtcone::cli::{EXIT_FAIL, EXIT_INPUT, EXIT_OK, EXIT_UNKNOWN};

fn wrtcone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wrtcone")).args(args).output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn preset_exit_codes() {
    let expected = [
        ("ex1-frechet-omega1", EXIT_OK),
        ("ex1-frechet-omega2", EXIT_OK),
        ("ex1-frechet-c1-omega1", EXIT_OK),
        ("ex1-frechet-c2-omega2", EXIT_OK),
        ("ex1-qualifications-i", EXIT_OK),
        ("ex1-qualifications-ii", EXIT_FAIL),
        ("ex2-intersection-holds", EXIT_OK),
        ("ex2-intersection-failure", EXIT_FAIL),
        ("final-ex1-mpec", EXIT_OK),
        ("final-ex2-mpec", EXIT_UNKNOWN),
        ("final-aubin-g", EXIT_OK),
        ("final-aubin-g-classical", EXIT_FAIL),
        ("final-subdiff", EXIT_OK),
    ];
    assert_eq!(expected.len(), PRESETS.len());
    for (id, code) in expected {
        assert_eq!(wrtcone(&["paper-example", id]).status.code(), Some(code), "{id}");
    }
}

#[test]
fn intersection_failure_reports_witness() {
    let out = wrtcone(&["paper-example", "ex2-intersection-failure"]);
    let r = json(&out);
    let q = &r["queries"][0]["result"];
    assert_eq!(q["witness"], serde_json::json!(["1", "0", "-2"]));
    assert_eq!(
        q["qualifications"]["normal_densed"]["certificate"]["sum"]["total"],
        serde_json::json!(["1", "0", "-2"])
    );
}

#[test]
fn subcommand_selects_queries_by_op() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("final2.json");
    let text = PRESETS.iter().find(|p| p.id == "final-ex2-mpec").unwrap().text;
    fs::write(&path, text).unwrap();
    let p = path.to_str().unwrap();
    let out = wrtcone(&["mpec-check", p]);
    assert_eq!(out.status.code(), Some(EXIT_UNKNOWN));
    let r = json(&out);
    assert_eq!(r["queries"].as_array().unwrap().len(), 1);
    assert_eq!(r["queries"][0]["result"]["q2"]["value"], "fails");
    let out = wrtcone(&["subdiff", p]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(json(&out)["queries"][0]["result"]["value"]["parts"][0]["points"], serde_json::json!([["1"]]));
    assert_eq!(wrtcone(&["check-aubin", p]).status.code(), Some(EXIT_INPUT));
}

#[test]
fn strict_mode_withholds_unguarded_inclusions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ex2.json");
    let text = PRESETS.iter().find(|p| p.id == "ex2-intersection-failure").unwrap().text;
    fs::write(&path, text).unwrap();
    let out = wrtcone(&["--quals", "strict", "rule", "intersection", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_UNKNOWN));
    assert_eq!(json(&out)["queries"][0]["result"]["inclusion_asserted"], false);
}

#[test]
fn malformed_files_exit_3_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("syntax.json", "{\"version\": 1, \"objects\": {", "line"),
        ("unknown.json", r#"{"version": 1, "objects": {}, "queries": [], "colour": 1}"#, "unknown field `colour`"),
        (
            "badrat.json",
            r#"{"version": 1, "objects": {"c": {"kind": "convex", "dim": 1, "ineqs": [{"a": ["1/0"], "b": 0}]}},
            "queries": [{"op": "normal-cone", "kind": "frechet", "omega": "c", "point": [0]}]}"#,
            "object `c`",
        ),
        (
            "ref.json",
            r#"{"version": 1, "objects": {"c": {"kind": "whole", "dim": 1}},
            "queries": [{"op": "normal-cone", "kind": "frechet", "omega": "d", "point": [0]}]}"#,
            "unknown object `d`",
        ),
        (
            "dim.json",
            r#"{"version": 1, "objects": {"c": {"kind": "whole", "dim": 2}},
            "queries": [{"op": "normal-cone", "kind": "frechet", "omega": "c", "point": [0]}]}"#,
            "dimension mismatch",
        ),
    ];
    for (name, text, needle) in cases {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        let out = wrtcone(&["run", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(EXIT_INPUT), "{name}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{name}: {err}");
    }
}

#[test]
fn infeasible_candidate_is_an_input_error() {
    let text = r#"{"version": 1, "objects": {
        "f": {"kind": "max-affine", "dim": 1, "terms": [{"a": [1], "b": 0}]},
        "G": {"kind": "multimap", "in_dim": 1, "out_dim": 1, "pieces": [{"ineqs": [{"a": [-1, 0], "b": 0}, {"a": [0, -1], "b": 0}]}]},
        "R": {"kind": "whole", "dim": 1}},
        "queries": [{"op": "mpec-check", "function": "f", "map": "G", "wrt1": "R", "wrt2": "R", "point": ["-1/2"]}]}"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    fs::write(&path, text).unwrap();
    let out = wrtcone(&["mpec-check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0 ∈ G(x̄)"));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let to_file = wrtcone(&["paper-example", "final-subdiff", "-o", path.to_str().unwrap()]);
    assert_eq!(to_file.status.code(), Some(EXIT_OK));
    assert!(to_file.stdout.is_empty());
    let stdout = wrtcone(&["paper-example", "final-subdiff"]);
    assert_eq!(fs::read(&path).unwrap(), stdout.stdout);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn decimal_flag_adds_display_column() {
    let text = r#"{"version": 1, "objects": {"c": {"kind": "convex", "dim": 1, "ineqs": [{"a": [3], "b": 1}]}},
        "queries": [{"op": "normal-cone", "kind": "frechet", "omega": "c", "point": ["1/3"]}]}"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    fs::write(&path, text).unwrap();
    let exact = json(&wrtcone(&["normal-cone", path.to_str().unwrap()]));
    assert_eq!(exact["queries"][0]["result"]["point"], serde_json::json!(["1/3"]));
    let dec = json(&wrtcone(&["--decimal", "normal-cone", path.to_str().unwrap()]));
    assert_eq!(dec["queries"][0]["result"]["point"], serde_json::json!(["1/3 ~ 0.333333"]));
}

#[test]
fn list_names_every_preset() {
    let out = wrtcone(&["paper-example", "--list"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for p in PRESETS {
        assert!(text.contains(p.id));
    }
}
