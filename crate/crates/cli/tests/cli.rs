use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limitchain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn dot_graph_of_gl2() {
    let out = run(&["graph", "--delta", "1", "--family", "A", "--rank", "2", "--depth", "4", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    let level4 = dot.split("subgraph level_4").nth(1).unwrap().split('}').next().unwrap();
    let labels: Vec<&str> = level4.split("label=\"").skip(1).map(|s| s.split('"').next().unwrap()).collect();
    assert_eq!(labels, ["(4)", "(3,1)", "(2,2)"]);
}

#[test]
fn limit_kernel_closed_form() {
    let out = run(&["limit-kernel", "--delta", "1", "--family", "C", "--theta", "const:0.5", "--depth", "2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let p = |to: serde_json::Value| {
        doc["edges"].as_array().unwrap().iter().find(|e| e["to"] == to).unwrap()["p"].as_f64().unwrap()
    };
    assert_eq!(p(serde_json::json!([])), 0.0);
    assert!((p(serde_json::json!([2])) - 1.0 / 1.5).abs() < 1e-9);
}

#[test]
fn exit_codes() {
    let not_adjacent = run(&["sweep", "--delta", "1", "--family", "C", "--from", "2,1", "--to", "2,1", "--theta", "const:0.5"]);
    assert_eq!(not_adjacent.status.code(), Some(1));
    let both = run(&["graph", "--delta", "1", "--family", "A", "--rank", "2", "--limit", "--depth", "2"]);
    assert_eq!(both.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&both.stderr).contains("Usage"));
    let neither = run(&["graph", "--delta", "1", "--family", "A", "--depth", "2"]);
    assert_eq!(neither.status.code(), Some(2));
    let bad_theta = run(&["kernel", "--delta", "1", "--family", "A", "--rank", "2", "--depth", "2", "--theta", "const:-1"]);
    assert_eq!(bad_theta.status.code(), Some(2));
    let bad_delta = run(&["graph", "--delta", "1,2", "--family", "A", "--rank", "2", "--depth", "2"]);
    assert_eq!(bad_delta.status.code(), Some(2));
    let divergent = run(&["limit-kernel", "--delta", "1", "--family", "B", "--theta", "list:0.5;tail=1", "--depth", "2"]);
    assert_eq!(divergent.status.code(), Some(2));
    let too_deep = run(&["graph", "--delta", "1", "--family", "A", "--rank", "2", "--depth", "9"]);
    assert_eq!(too_deep.status.code(), Some(1));
    let short_rank = run(&["graph", "--delta", "1,1", "--family", "C", "--rank", "1", "--depth", "2"]);
    assert_eq!(short_rank.status.code(), Some(1));
    let deep_ok = run(&["graph", "--delta", "1", "--family", "A", "--rank", "2", "--depth", "9", "--max-depth", "9"]);
    assert!(deep_ok.status.success());
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.path().join(name);
        let out = run(&[
            "kernel", "--delta", "2", "--family", "B", "--rank", "3", "--depth", "3", "--theta", "geom:0.5,0.8",
            "--output", path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
        texts.push(fs::read(&path).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let sample = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_limitchain"))
            .env("THREADS", threads)
            .args(["sample", "--delta", "1", "--family", "D", "--rank", "3", "--theta", "const:0.7", "--steps", "8", "--seed", "9", "--count", "4"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(sample("1"), sample("4"));
}

#[test]
fn sweep_csv_layout() {
    let out = run(&["sweep", "--delta", "1", "--family", "B", "--from", "1", "--to", "2", "--theta", "const:0.5", "--ranks", "2..30"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,pi_r,pi_limit,gap");
    assert_eq!(lines.len(), 30);
    let gap: f64 = lines[29].split(',').nth(3).unwrap().parse().unwrap();
    assert!(gap < 1e-6);
}

#[test]
fn golden_sample() {
    let out = run(&["sample", "--delta", "1", "--family", "A", "--limit", "--theta", "const:0.5", "--steps", "5", "--seed", "42"]);
    assert!(out.status.success());
    let golden = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/golden/trajectory_seed42.txt")).unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn check_subset() {
    let out = run(&["check", "--criterion", "1", "--criterion", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert_eq!(run(&["check", "--criterion", "12"]).status.code(), Some(2));
}
