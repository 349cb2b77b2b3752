use std::path::PathBuf;
use std::process::{Command, Output};

use matchcut::graph::{contains_induced, PatternGraph};
use matchcut::redblue::is_matching_cut;
use matchcut::{Edge, LabelledGraph};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> (i32, Value, Output) {
    let out = Command::new(env!("CARGO_BIN_EXE_matchcut"))
        .args(args)
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, out)
}

fn path_str(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

fn cut_edges(lg: &LabelledGraph, cut: &Value) -> Vec<Edge> {
    cut.as_array()
        .unwrap()
        .iter()
        .map(|pair| {
            let a = pair[0].as_u64().unwrap();
            let b = pair[1].as_u64().unwrap();
            lg.edge_by_labels(a, b).expect("certificate edge exists")
        })
        .collect()
}

#[test]
fn solve_fig1_gives_a_verified_cut() {
    let f = fixture("fig1.edges");
    let (code, report, out) = run(&["solve", path_str(&f)]);
    assert_eq!(code, 0);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["outcome"], "yes");
    assert_eq!(report["input"]["n"], 14);
    assert_eq!(report["input"]["m"], 21);
    assert!(report.get("timing_ms").is_none());
    let lg = LabelledGraph::parse(&std::fs::read_to_string(&f).unwrap()).unwrap();
    let cut = cut_edges(&lg, &report["certificate"]["cut"]);
    assert!(!cut.is_empty());
    assert!(is_matching_cut(&lg.graph, &cut));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("yes"));
}

#[test]
fn solve_and_oracle_agree_on_fixtures() {
    for name in [
        "fig1.edges",
        "fig2_left.edges",
        "fig2_right.edges",
        "fig4_path.edges",
        "k4.edges",
    ] {
        let f = fixture(name);
        let (a, solved, _) = run(&["--quiet", "solve", path_str(&f)]);
        let (b, oracle, _) = run(&["--quiet", "oracle", path_str(&f)]);
        assert_eq!((a, b), (0, 0), "{name}");
        assert_eq!(solved["outcome"], oracle["outcome"], "{name}");
    }
}

#[test]
fn oracle_says_no_on_k4() {
    let (code, report, out) = run(&["--quiet", "oracle", path_str(&fixture("k4.edges"))]);
    assert_eq!(code, 0);
    assert_eq!(report["outcome"], "no");
    assert!(out.stderr.is_empty());
}

#[test]
fn verify_published_fig1_cut() {
    let f = fixture("fig1.edges");
    let (code, report, _) = run(&["verify", path_str(&f), "--cut", "3-7,4-8,5-10,6-9"]);
    assert_eq!(code, 0);
    assert_eq!(report["outcome"], "valid");
    let red: Vec<u64> = report["certificate"]["red"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(red, vec![1, 2, 3, 4, 5, 6]);

    let (code, report, _) = run(&["verify", path_str(&f), "--cut", "1-2"]);
    assert_eq!(code, 1);
    assert_eq!(report["outcome"], "invalid");

    let (code, report, _) = run(&["verify", path_str(&f), "--cut", "1-14"]);
    assert_eq!(code, 1);
    assert_eq!(report["outcome"], "error");
    assert!(report["error"].as_str().unwrap().contains("1-14"));
}

#[test]
fn malformed_input_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "# comment\n1 2\n2 three\n").unwrap();
    let (code, report, out) = run(&["solve", path_str(&bad)]);
    assert_eq!(code, 1);
    assert_eq!(report["outcome"], "error");
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let split = dir.path().join("split.edges");
    std::fs::write(&split, "1 2\n3 4\n").unwrap();
    let (code, report, _) = run(&["solve", path_str(&split)]);
    assert_eq!(code, 1);
    assert!(report["error"].as_str().unwrap().contains("not connected"));
}

#[test]
fn forced_inapplicable_strategy_exits_2() {
    let (code, report, _) = run(&[
        "--quiet",
        "solve",
        "--strategy",
        "radius-2",
        path_str(&fixture("fig1.edges")),
    ]);
    assert_eq!(code, 2);
    assert_eq!(report["outcome"], "inapplicable");
    assert!(report["reason"].is_string());

    let (code, report, _) = run(&[
        "--quiet",
        "oracle",
        "--oracle-bound",
        "10",
        path_str(&fixture("fig1.edges")),
    ]);
    assert_eq!(code, 2);
    assert_eq!(report["outcome"], "inapplicable");
}

#[test]
fn usage_errors_exit_1() {
    let (code, _, _) = run(&["solve"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&[
        "solve",
        "--strategy",
        "magic",
        path_str(&fixture("k4.edges")),
    ]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn k22_transform_writes_new_labels() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k22.edges");
    let (code, report, _) = run(&[
        "--quiet",
        "transform",
        "k22",
        path_str(&fixture("fig1.edges")),
        "--edge",
        "3-7",
        "--output",
        path_str(&out),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["new_vertices"], serde_json::json!([15, 16]));
    assert_eq!(
        (report["n"].as_u64(), report["m"].as_u64()),
        (Some(16), Some(24))
    );
    let written = LabelledGraph::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((written.graph.n(), written.graph.m()), (16, 24));
    assert!(written.edge_by_labels(3, 7).is_none());
    for (a, b) in [(3, 15), (3, 16), (7, 15), (7, 16)] {
        assert!(written.edge_by_labels(a, b).is_some());
    }
    assert!(written.edge_by_labels(15, 16).is_none());

    let (a, before, _) = run(&["--quiet", "oracle", path_str(&fixture("fig1.edges"))]);
    let (b, after, _) = run(&["--quiet", "oracle", path_str(&out)]);
    assert_eq!((a, b), (0, 0));
    assert_eq!(before["outcome"], after["outcome"]);
}

#[test]
fn blowup_output_is_pattern_free() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("blown.edges");
    let (code, report, _) = run(&[
        "--quiet",
        "transform",
        "blowup",
        path_str(&fixture("k4.edges")),
        "--pattern",
        "C5",
        "--output",
        path_str(&out),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["rounds"], 1);
    let g = LabelledGraph::parse(&std::fs::read_to_string(&out).unwrap())
        .unwrap()
        .graph;
    assert!(contains_induced(&g, &PatternGraph::cycle(5)).is_none());

    let (code, report, _) = run(&[
        "--quiet",
        "transform",
        "blowup",
        path_str(&fixture("k4.edges")),
        "--pattern",
        "P5",
    ]);
    assert_eq!(code, 1);
    assert!(report["error"].as_str().unwrap().contains("no cycle"));
}

#[test]
fn generate_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.edges");
    let (code, first, _) = run(&[
        "--quiet",
        "generate",
        "hfree:P6,9",
        "--seed",
        "11",
        "--output",
        path_str(&out),
    ]);
    assert_eq!(code, 0);
    let (_, second, _) = run(&["--quiet", "generate", "hfree:P6,9", "--seed", "11"]);
    assert_eq!(first, second);
    let g = LabelledGraph::parse(&std::fs::read_to_string(&out).unwrap())
        .unwrap()
        .graph;
    assert_eq!(g.n(), 9);
    assert!(contains_induced(&g, &PatternGraph::path(6)).is_none());

    let (code, report, _) = run(&["--quiet", "solve", "--strategy", "p6-free", path_str(&out)]);
    assert_eq!(code, 0);
    assert!(report["strategy"].as_str().unwrap().starts_with("p6-free"));

    let (code, _, _) = run(&["generate", "cycle:two"]);
    assert_eq!(code, 1);
}

#[test]
fn analyze_reports_structure() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = dir.path().join("c6.edges");
    let (code, _, _) = run(&["--quiet", "generate", "cycle:6", "--output", path_str(&c6)]);
    assert_eq!(code, 0);
    let (code, report, _) = run(&["--quiet", "analyze", path_str(&c6)]);
    assert_eq!(code, 0);
    assert_eq!(report["girth"], 6);
    assert_eq!(report["input"]["radius"], 3);
    assert_eq!(report["input"]["classes"]["p6_free"], true);
    assert_eq!(report["dominating_structure"]["kind"], "induced_c6");
    assert_eq!(report["dominating_set"].as_array().unwrap().len(), 2);
}

#[test]
fn reports_are_byte_identical_and_timing_is_opt_in() {
    let f = fixture("fig1.edges");
    let (_, _, a) = run(&["--quiet", "solve", path_str(&f)]);
    let (_, _, b) = run(&["--quiet", "solve", path_str(&f)]);
    assert_eq!(a.stdout, b.stdout);
    let (_, timed, _) = run(&["--quiet", "--timing", "solve", path_str(&f)]);
    assert!(timed["timing_ms"].is_number());
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_matchcut"))
        .args(["--quiet", "solve", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"0 1\n1 2\n2 3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["outcome"], "yes");
    assert_eq!(report["strategy"], "degree-one");
}
