use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};
use svcfc_cli::run;

const K2_NO: &str = "2 1\n0 1\nX: 0 1\nk: 1\n";
const STAR5: &str = "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\nX: 0\nk: 1\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

fn call(args: &[&str], stdin: &str) -> (i32, Value) {
    let argv = std::iter::once("svcfc").chain(args.iter().copied());
    let (code, out) = run(argv, &mut stdin.as_bytes());
    let doc = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{out:?} is not JSON: {e}"));
    (code, doc)
}

#[test]
fn decide_on_the_fixed_no_instance() {
    assert_eq!(call(&["decide"], K2_NO), (1, json!({ "answer": false })));
    let (code, doc) = call(&["decide", "--k", "2"], K2_NO);
    assert_eq!(code, 0);
    assert_eq!(doc, json!({ "answer": true, "witness": [1, 2] }));
}

#[test]
fn kernelize_star() {
    let (code, doc) = call(&["kernelize"], STAR5);
    assert_eq!(code, 0);
    assert_eq!(doc["n_before"], 6);
    assert_eq!(doc["n_after"], 3);
    assert_eq!(doc["bound"], 5);
    assert_eq!(doc["k_out"], 1);
    assert_eq!(doc["x_out"], json!([0]));
    assert_eq!(doc["shortcut"], false);
    assert_eq!(doc["deletions"].as_array().unwrap().len(), 3);
    assert_eq!(doc["deletions"][0], json!({ "S": [0], "s": 1, "vertices": [5] }));
}

#[test]
fn kernelize_without_annotation_computes_a_cover() {
    let star_no_x = "6 5\n0 1\n0 2\n0 3\n0 4\n0 5\n";
    let (code, doc) = call(&["kernelize", "-k", "2"], star_no_x);
    assert_eq!(code, 0);
    assert_eq!(doc["x_out"], json!([0, 1]));
    let (code, doc) = call(&["kernelize", "-k", "2", "--exact-tc"], star_no_x);
    assert_eq!(code, 0);
    assert_eq!(doc["x_out"], json!([0]));
    // t = 1, k = 2: budget (1+1)·C(2,1) = 4 leaves.
    assert_eq!(doc["n_after"], 5);
}

#[test]
fn kernelize_shortcut() {
    let (code, doc) = call(&["kernelize", "--k", "3"], K4);
    assert_eq!(code, 0);
    assert_eq!(doc["shortcut"], true);
    assert_eq!(doc["edges"], json!([[0, 1]]));
    assert_eq!(doc["x_out"], json!([0, 1]));
    assert_eq!(doc["k_out"], 1);
}

#[test]
fn chi_and_svcfc() {
    assert_eq!(call(&["chi"], K4).1["chi"], 4);
    let (code, doc) = call(&["chi"], &format!("{P4}X: 0 2\n"));
    assert_eq!(code, 0);
    assert_eq!(doc["chi"], 2);
    let (code, doc) = call(&["svcfc"], P4);
    assert_eq!(code, 0);
    assert_eq!(doc["svcfc"], 3);
}

#[test]
fn color_then_verify() {
    let (code, doc) = call(&["color", "--exact-tc"], P4);
    assert_eq!(code, 0);
    assert_eq!(doc["strong"], true);
    let colors: Vec<String> = doc["coloring"].as_array().unwrap().iter().map(|c| c.to_string()).collect();
    let (code, verdict) = call(&["verify", "--coloring", &colors.join(",")], P4);
    assert_eq!(code, 0);
    assert_eq!(verdict["is_strong"], true);

    let (code, verdict) = call(&["verify", "--coloring", "1,2,1,2"], P4);
    assert_eq!(code, 0);
    assert_eq!(verdict["is_strong"], false);
    assert_eq!(verdict["violating_pair"], json!([0, 3]));
}

#[test]
fn color_reports_failed_precondition() {
    let p5 = "5 4\n0 1\n1 2\n2 3\n3 4\nX: 0 1 3\n";
    let (code, doc) = call(&["color", "--y", "0"], p5);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "structural");
}

#[test]
fn twincover_lists_cliques() {
    let (code, doc) = call(&["twincover", "--exact-tc"], P4);
    assert_eq!(code, 0);
    assert_eq!(doc["cover"], json!([0, 2]));
    assert_eq!(doc["exact"], true);
    assert_eq!(doc["cliques"].as_array().unwrap().len(), 2);
}

#[test]
fn graph6_input() {
    let (code, doc) = call(&["chi", "--format", "graph6"], "C~\n");
    assert_eq!((code, doc["chi"].clone()), (0, json!(4)));
}

#[test]
fn gen_round_trips_through_kernelize() {
    let spec = r#"{"t": 1, "clique_type_counts": [{"S": [0], "s": 1, "count": 5}]}"#;
    let (code, doc) = call(&["gen"], spec);
    assert_eq!(code, 0);
    assert_eq!((doc["n"].clone(), doc["m"].clone()), (json!(6), json!(5)));
    let instance = doc["instance"].as_str().unwrap();
    let (code, kernel) = call(&["kernelize", "--k", "1"], instance);
    assert_eq!(code, 0);
    assert_eq!(kernel["n_after"], 3);

    let seeded = r#"{"t": 3, "clique_type_counts": [{"S": [0, 2], "s": 2, "count": 3}], "core_edge_probability": 0.5, "shuffle": true}"#;
    assert_eq!(call(&["gen", "--seed", "9"], seeded), call(&["gen", "--seed", "9"], seeded));
}

#[test]
fn errors_become_json() {
    let cases: &[(&[&str], &str, i32, &str)] = &[
        (&["decide"], P4, 2, "input"),
        (&["decide", "--k", "2"], "4 2\n0 1\n2 3\n", 2, "validity"),
        (&["chi"], "3 1\n0 5\n", 2, "parse"),
        (&["kernelize", "--k", "1"], "3 2\n0 1\n1 2\nX: 0\n", 2, "validity"),
        (&["decide", "--frobnicate"], P4, 2, "usage"),
        (&["svcfc", "--budget", "1"], P4, 3, "budget"),
        (&["gen"], "{", 2, "input"),
    ];
    for &(args, stdin, code, kind) in cases {
        let (got, doc) = call(args, stdin);
        assert_eq!(got, code, "{args:?}");
        assert_eq!(doc["error"]["kind"], kind, "{args:?}");
    }
}

#[test]
fn reads_files_and_is_deterministic() {
    let path = std::env::temp_dir().join(format!("svcfc-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, STAR5).unwrap();
    let p = path.to_str().unwrap();
    let first = run(["svcfc", "kernelize", p], &mut std::io::empty());
    let second = run(["svcfc", "kernelize", p], &mut std::io::empty());
    std::fs::remove_file(&path).unwrap();
    assert_eq!(first.0, 0);
    assert_eq!(first, second);
    let (code, doc) = call(&["chi", "/nonexistent/instance.txt"], "");
    assert_eq!((code, doc["error"]["kind"].clone()), (2, json!("input")));
}

#[test]
fn binary_exit_codes() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_svcfc"))
        .arg("decide")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(K2_NO.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"answer":false}"#);
}
