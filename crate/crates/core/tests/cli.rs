use std::process::{Command, Output};

use ect_core::{parse_dimacs, Coloring, Graph, PlanarityVerdict};
use serde_json::Value;

fn ect_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ect-lab"))
        .args(args)
        .output()
        .expect("spawn ect-lab")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn planar_k5_reports_minor() {
    let o = ect_lab(&["planar", "--named", "K5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: PlanarityVerdict = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v.planar);
    v.validate(&Graph::complete(5).unwrap()).unwrap();
}

#[test]
fn chromatic_c5() {
    let o = ect_lab(&["chromatic", "--named", "C5"]);
    assert_eq!(o.status.code(), Some(0));
    let c: Coloring = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(c.k(), 3);
}

#[test]
fn file_inputs_and_coloring_override() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("c4.col");
    std::fs::write(&col, "c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap();
    let js = dir.path().join("c4.json");
    std::fs::write(&js, r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]}"#).unwrap();
    let coloring = dir.path().join("three.json");
    std::fs::write(&coloring, r#"{"k":3,"colors":[0,1,2,1]}"#).unwrap();

    for input in [&col, &js] {
        let o = ect_lab(&["ect", "--in", input.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let q = json(&o);
        assert_eq!(q["graph"]["n"], 2);
        assert_eq!(q["classes"], serde_json::json!([[0, 2], [1, 3]]));
    }
    let o = ect_lab(&[
        "ect",
        "--in",
        col.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let q = json(&o);
    assert_eq!(
        q["graph"],
        serde_json::json!({"n": 3, "edges": [[0, 1], [1, 2]]})
    );

    // improper coloring is an input error
    std::fs::write(&coloring, r#"{"k":2,"colors":[0,0,1,1]}"#).unwrap();
    let o = ect_lab(&[
        "ect",
        "--in",
        col.to_str().unwrap(),
        "--coloring",
        coloring.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not proper"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "p edge 2 1\ne 1 3\n").unwrap();
    let o = ect_lab(&["planar", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("edge index out of range"));
    let o = ect_lab(&[
        "planar",
        "--in",
        dir.path().join("missing").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["planar"],
        &["verify"],
        &["verify", "theorem9"],
        &["minor", "--named", "K5", "--budget", "x"],
    ] {
        let o = ect_lab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn gen_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.col");
    let o = ect_lab(&[
        "gen",
        "--n",
        "12",
        "--seed",
        "9",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_dimacs(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (12, 30));
    let o = ect_lab(&[
        "gen",
        "--n",
        "12",
        "--seed",
        "9",
        "--mode",
        "subsample",
        "--p",
        "0.5",
    ]);
    let sparse = parse_dimacs(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert!(sparse.edge_count() < 30);
}

#[test]
fn verify_report_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("r.json");
    let o = ect_lab(&[
        "verify",
        "theorem2",
        "--count",
        "10",
        "--n-max",
        "6",
        "--seed",
        "1",
        "--report",
        rep.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("10 passed, 0 failed"));
    let text = std::fs::read_to_string(&rep).unwrap();
    assert!(text.trim_start().starts_with("{\n  \"experiment\""));
    let r: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(r["instances"], 10);
    assert!(r["artifact_version"]
        .as_str()
        .unwrap()
        .starts_with("ect-core"));
}

#[test]
fn theorem1_single_graph() {
    let o = ect_lab(&["verify", "theorem1", "--named", "C5"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(
        r["per_instance"][0]["per_coloring"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
    let o = ect_lab(&["verify", "theorem1", "--named", "K5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_mode() {
    let o = ect_lab(&["verify", "theorem2", "--catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let c5 = r["per_instance"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["source"]["name"] == "C5")
        .unwrap();
    assert_eq!(c5["chi"], 3);
    assert_eq!(c5["colorings_checked"], 5);
    assert_eq!(c5["quotient_complete"], true);
}
