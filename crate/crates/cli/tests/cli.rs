use std::process::{Command, Output};

use dot_parser::{ast, canonical};
use serde_json::Value;

fn tg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = tg(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).expect("valid json")
}

#[test]
fn act_on_table_row() {
    assert_eq!(stdout(&["act", "x0", ".11"]), ".111\n");
    assert_eq!(stdout(&["act", "--frac", "x0", "3/4"]), "7/8\n");
    assert_eq!(stdout(&["act", "--raw", "x0", "1"]), "11\n");
}

#[test]
fn normal_form_of_w0() {
    assert_eq!(stdout(&["nf", "w0"]), "x0^2 x1 x2^-1\n");
    let nf = stdout(&["nf", "x0^2 x1 x2^-1"]);
    assert_eq!(nf, "x0^2 x1 x2^-1\n");
}

#[test]
fn member_report_of_x1_squared() {
    let v = json(&["member", "--all", "--json", "x1^2"]);
    assert_eq!(v["element"], "x1^2");
    assert_eq!(v["member"]["E"], false);
    assert_eq!(v["member"]["K22"], true);
    assert_eq!(v["pi"], serde_json::json!([0, -2]));
    let keys: Vec<&str> = v["member"]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys.len(), 7);
    for k in ["F3col", "E", "Eeven", "H", "K22", "oriented", "smallstrip"] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(stdout(&["member", "--sub", "Eeven", "x0^2"]), "true\n");
}

#[test]
fn every_subcommand_takes_json() {
    for args in [
        &["nf", "--json", "x0"][..],
        &["pi", "--json", "w0"],
        &["classify", "--json", ".11"],
        &["act", "--json", "x0", ".11"],
        &["orbit", "--json", "--depth", "2", ".1"],
        &["render", "--json", "x0"],
        &["components", "--json", "phiR(w1)", ".1"],
    ] {
        let v = json(args);
        assert!(v.is_object(), "{args:?}");
    }
    assert_eq!(
        json(&["pi", "--json", "w0"])["pi"],
        serde_json::json!([2, -2])
    );
    assert_eq!(json(&["classify", "--json", ".1"])["omega_tilde"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(tg(&["nf", "x0 *"]).status.code(), Some(2));
    assert_eq!(tg(&["nf", "z3"]).status.code(), Some(2));
    assert_eq!(tg(&["act", "x0", ".12"]).status.code(), Some(2));
    assert_eq!(tg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(tg(&["components", "x0", ".1"]).status.code(), Some(1));
    assert_eq!(tg(&["classify", "1"]).status.code(), Some(1));
    assert_eq!(tg(&["member", "--sub", "G", "x0"]).status.code(), Some(2));
}

#[test]
fn dot_parses_back() {
    for expr in ["x0", "id", "w0", "x1^2", "phiR(w3)"] {
        let src = stdout(&["render", "--format", "dot", expr]);
        let g = ast::Graph::try_from(src.as_str()).unwrap_or_else(|e| panic!("{expr}: {e}"));
        let g = canonical::Graph::from(g);
        assert!(g.is_digraph);
        assert!(g.nodes.set.contains_key("l0"));
        assert!(g.nodes.set.contains_key("fouter"));
    }
}

#[test]
fn dot_faces_of_x0() {
    let src = stdout(&["render", "--format", "dot", "x0"]);
    let g = canonical::Graph::from(ast::Graph::try_from(src.as_str()).unwrap());
    // two carets in each tree
    assert_eq!(g.edges.set.len(), 8);
    assert!(src.contains("cluster_face1 {\n    label=\"2\""));
    assert!(src.contains("cluster_face2 {\n    label=\"1\""));
    assert!(src.contains("cluster_outer {\n    label=\"0\""));
}

#[test]
fn deterministic_verify_json() {
    let args = [
        "verify",
        "--suite",
        "stab",
        "--max-leaves",
        "4",
        "--max-depth",
        "6",
        "--json",
    ];
    let (a, b) = (tg(&args), tg(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "stab");
    assert_eq!(v["params"]["max_leaves"], 4);
    for c in v["claims"].as_array().unwrap() {
        assert!(c["id"].is_string() && c["paper_ref"].is_string());
        assert!(
            ["pass", "fail", "witness", "inconclusive"].contains(&c["status"].as_str().unwrap())
        );
    }
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("tg-report-{}.json", std::process::id()));
    let out = tg(&[
        "verify",
        "--suite",
        "stab",
        "--max-leaves",
        "3",
        "--max-depth",
        "5",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["params"]["max_depth"], 5);
    std::fs::remove_file(path).unwrap();
    assert_eq!(tg(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn orbit_of_half_under_f() {
    let pts = stdout(&["orbit", "--gens", "F", "--depth", "1", ".1"]);
    assert!(pts.lines().any(|l| l == ".1"));
}
