//! End-to-end tests of the `srtor` binary: output contents, formats,
//! determinism, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn srtor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srtor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn betti_shows_projective_plane_torsion() {
    let out = srtor(&["betti", "rp2-6", "--coeffs", "Z"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let torsion_row = text
        .lines()
        .find(|l| l.contains("{1,2,3,4,5,6}") && l.trim_start().starts_with('3'))
        .unwrap_or_else(|| panic!("no (3, [6]) row in:\n{text}"));
    assert!(torsion_row.contains("Z/2"), "row: {torsion_row}");
    let rank: usize = torsion_row
        .split_whitespace()
        .nth(2)
        .and_then(|r| r.parse().ok())
        .expect("rank column");
    assert_eq!(rank, 0, "row: {torsion_row}");
    // Z is not a field, so no polynomial line
    assert!(!text.contains("poincare"));
}

#[test]
fn betti_hochster_route_prints_table_and_polynomial() {
    let out = srtor(&["betti", "cycle-4", "--route", "hochster", "--coeffs", "Q"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| l.contains('{') && !l.contains('J'))
        .collect();
    assert_eq!(rows.len(), 4, "table:\n{text}");
    assert!(text.contains("{1,3}"));
    assert!(text.contains("{2,4}"));
    assert!(text.contains("{1,2,3,4}"));
    assert!(text.contains("poincare: 1 + 2t^3 + t^6"), "table:\n{text}");
}

#[test]
fn betti_routes_agree_on_output() {
    let complement = srtor(&["betti", "cycle-5", "--coeffs", "Q"]);
    let hochster = srtor(&["betti", "cycle-5", "--route", "hochster", "--coeffs", "Q"]);
    assert!(complement.status.success() && hochster.status.success());
    assert_eq!(stdout(&complement), stdout(&hochster));
}

#[test]
fn machine_format_is_valid_json() {
    let out = srtor(&[
        "betti", "cycle-4", "--coeffs", "Fp:2", "--format", "machine",
    ]);
    assert!(out.status.success());
    let record: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(record["m"], 4);
    assert_eq!(record["coeffs"], "Fp:2");
    let entries = record["entries"].as_array().expect("entries array");
    assert_eq!(entries.len(), 4);
    assert!(entries
        .iter()
        .any(|e| e["i"] == 2 && e["j"] == serde_json::json!([1, 2, 3, 4]) && e["rank"] == 1));
    let poincare = record["poincare"].as_array().expect("poincare array");
    assert_eq!(poincare.len(), 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["betti", "rp2-6", "--coeffs", "Z"],
        vec!["verify", "cycle-4"],
        vec![
            "betti",
            "octahedron",
            "--coeffs",
            "Q",
            "--format",
            "machine",
        ],
    ] {
        let first = srtor(&args);
        let second = srtor(&args);
        assert_eq!(stdout(&first), stdout(&second), "args: {args:?}");
    }
}

#[test]
fn verify_passes_on_corpus_entry() {
    let out = srtor(&["verify", "cycle-4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("complement-vs-hochster: ok"), "{text}");
    assert!(text.contains("nerve-shift: ok"), "{text}");
    assert!(text.contains("complement-choice: ok"), "{text}");
    assert!(text.contains("verdict: pass"), "{text}");
}

#[test]
fn nerve_prints_shifted_degrees() {
    let out = srtor(&["nerve", "cycle-4", "--coeffs", "Z"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("H~_0 = Z"), "{text}");
    assert!(text.contains("top bigrading degree 2"), "{text}");
}

#[test]
fn corpus_list_and_show() {
    let list = srtor(&["corpus", "list"]);
    assert!(list.status.success());
    let listed = stdout(&list);
    let names: Vec<&str> = listed.lines().map(str::trim).collect();
    assert!(names.contains(&"cycle-4") && names.contains(&"rp2-6"));
    for name in names {
        let shown = srtor(&["corpus", "show", name]);
        assert!(shown.status.success(), "{name}");
        let doc: serde_json::Value =
            serde_json::from_str(&stdout(&shown)).expect("corpus entries are JSON");
        assert_eq!(doc["name"], name);
    }
}

#[test]
fn reads_documents_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_srtor"))
        .args(["betti", "-", "--coeffs", "Q"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"m":2,"facets":[[1],[2]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{1,2}"), "{text}");
    assert!(text.contains("poincare: 1 + t^3"), "{text}");
}

#[test]
fn unknown_input_exits_2() {
    let out = srtor(&["betti", "no-such-complex"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("corpus list"), "{err}");
}

#[test]
fn malformed_document_exits_2() {
    let out = srtor(&["corpus", "show", "no-such-complex"]);
    assert_eq!(out.status.code(), Some(2));

    let mut child = Command::new(env!("CARGO_BIN_EXE_srtor"))
        .args(["betti", "-"])
        .stdin(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"{ not json")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generator_cap_exits_3() {
    let out = srtor(&[
        "betti",
        "cycle-5",
        "--complement",
        "maximal",
        "--max-gens",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("21") && err.contains("10"), "{err}");
}

#[test]
fn document_round_trip_is_an_identity() {
    use srtor::doc::ComplexDocument;
    for name in srtor::corpus::names() {
        let doc = srtor::corpus::document(name).unwrap().unwrap();
        let canon = doc.canonicalize().unwrap();
        let reparsed = ComplexDocument::parse(&canon.to_json()).unwrap();
        assert_eq!(canon, reparsed, "{name}");
        assert_eq!(canon, reparsed.canonicalize().unwrap(), "{name}");
    }
}
