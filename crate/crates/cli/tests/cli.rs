use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_tricolor");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .env_remove("TRICOLOR_EXHAUSTIVE_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const ALL_BLUE_K3: &str = r#"{"format":"tricolor/coloring","version":1,"n":3,"k":2,"colors":"BBB"}"#;

#[test]
fn construct_pipes_into_verify() {
    let doc = stdout(&run(&["construct", "--method", "gf16"], ""));
    let v = run(&["verify", "--expect-mono", "0,0,0"], &doc);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("VERIFIED"));

    let cyl = stdout(&run(&["construct", "--method", "cylinder"], ""));
    assert_eq!(run(&["verify", "-", "--expect-mono", "0,0,0"], &cyl).status.code(), Some(0));
}

#[test]
fn twin_pipes_into_count() {
    let doc = run(&["twin-k17", "--color", "R"], "");
    assert_eq!(doc.status.code(), Some(0));
    let count = run(&["count", "--per-color"], &stdout(&doc));
    assert_eq!(count.status.code(), Some(0));
    assert_eq!(stdout(&count).trim(), "mono (B,R,Y) = (0,5,0)");

    let listed = stdout(&run(&["count", "--list"], &stdout(&doc)));
    assert_eq!(listed.lines().filter(|l| l.ends_with(" R")).count(), 5);
    assert!(listed.lines().skip(1).all(|l| l.contains(",15,16)")));
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let blue = write(dir.path(), "blue.json", ALL_BLUE_K3);
    let short = write(dir.path(), "short.json", &ALL_BLUE_K3.replace("BBB", "BB"));
    let bad_k = write(dir.path(), "bad_k.json", &ALL_BLUE_K3.replace("BBB", "BBY"));
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["verify", &blue], 0),
        (vec!["verify", &blue, "--expect-mono", "1,0,0"], 0),
        (vec!["verify", &blue, "--expect-mono", "0,0,0"], 1),
        (vec!["verify", &short], 2),
        (vec!["verify", &bad_k], 2),
        (vec!["verify", &blue, "--expect-mono", "0,0"], 2),
        (vec!["verify", "/no/such/file.json"], 2),
        (vec!["count", &blue], 0),
        (vec!["delete-vertex", &blue, "--vertex", "3"], 2),
        (vec!["extend", &blue], 2),
        (vec!["twin-k17", "--color", "G"], 2),
        (vec!["twin-k17", "--color", "Y", "--delete", "16"], 2),
        (vec!["frobnicate"], 2),
        (vec!["exhaustive", "--n", "5", "--k", "2"], 0),
        (vec!["exhaustive", "--n", "8", "--k", "2"], 3),
        (vec!["exhaustive", "--n", "5", "--k", "4"], 2),
        (vec!["search", "--n", "65", "--k", "3"], 3),
        (vec!["search", "--n", "8", "--k", "3", "--restarts", "2", "--steps", "100"], 0),
        (vec!["export", &blue, "--format", "dot"], 0),
        (vec!["export", &blue, "--format", "png"], 2),
    ];
    for (args, code) in cases {
        let out = run(&args, "");
        assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn exhaustive_budget_override() {
    let out = Command::new(BIN)
        .args(["exhaustive", "--n", "5", "--k", "2"])
        .env("TRICOLOR_EXHAUSTIVE_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn extend_assemble_complete_round() {
    let dir = tempfile::tempdir().unwrap();
    let k16 = stdout(&run(&["construct", "--method", "gf16"], ""));
    let k14 = stdout(&run(&["delete-vertex", "--vertex", "0"], &stdout(&run(&["delete-vertex", "--vertex", "0"], &k16))));
    let base = write(dir.path(), "k14.json", &k14);
    let exts = stdout(&run(&["extend", &base], ""));
    assert!(exts.contains("\"total\": 2"));
    let ext = write(dir.path(), "ext.json", &exts);
    let tpl = run(&["assemble", "--base", &base, "--ext-a", &ext, "--ext-b", &ext, "--index-b", "1"], "");
    assert_eq!(tpl.status.code(), Some(0));
    assert!(stdout(&tpl).contains("tricolor/template"));
    for color in ["B", "R", "Y"] {
        let done = run(&["--json", "complete", "--color", color], &stdout(&tpl));
        assert_eq!(done.status.code(), Some(0));
        let report: serde_json::Value = serde_json::from_slice(&done.stderr).unwrap();
        // the two deleted vertices of a triangle-free K16 share no same-colored neighbour
        // in the color of the edge between them, and share exactly two in each other color
        let total = report["census"]["total_mono"].as_u64().unwrap();
        assert!(total == 0 || total == 2, "{color}: {report}");
    }
    let missing = run(&["assemble", "--base", &base, "--ext-a", &ext, "--ext-b", &ext, "--index-a", "7"], "");
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn json_reports() {
    let doc = stdout(&run(&["construct", "--method", "gf16"], ""));
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["--json", "verify"], &doc))).unwrap();
    assert_eq!(v["census"]["total_mono"], 0);
    assert_eq!(v["census"]["triangles"], 560);
    let s: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["search", "--n", "6", "--k", "2", "--json", "--restarts", "3"], ""))).unwrap();
    assert_eq!(s["best_count"], 2);
    let e: serde_json::Value = serde_json::from_str(&stdout(&run(&["exhaustive", "--n", "6", "--k", "3", "--json"], ""))).unwrap();
    assert_eq!(e["minimum"], 0);
}

#[test]
fn export_counts_chords() {
    let dot = stdout(&run(&["export", "--format", "dot"], ALL_BLUE_K3));
    let edges: Vec<&str> = dot.lines().filter(|l| l.contains("--")).collect();
    assert_eq!(edges.len(), 3);
    assert!(edges.iter().all(|l| l.contains("color=blue")));

    let twin = stdout(&run(&["twin-k17", "--color", "B"], ""));
    let svg = stdout(&run(&["export", "--format", "svg", "--highlight"], &twin));
    assert_eq!(svg.matches("<line class=\"chord").count(), 136);
    assert_eq!(svg.matches("class=\"mono-triangle\"").count(), 5);
    // 5 triangles sharing the new edge: 5 * 2 spokes + the edge itself
    assert_eq!(svg.matches("class=\"chord mono\"").count(), 11);
    let plain = stdout(&run(&["export", "--format", "svg"], &twin));
    assert_eq!(plain.matches("mono").count(), 0);
    assert_eq!(svg, stdout(&run(&["export", "--format", "svg", "--highlight"], &twin)));
}

#[test]
fn search_writes_best_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("best.json");
    let o = run(
        &["search", "--n", "16", "--k", "3", "--seed", "3", "--restarts", "50", "--out", out.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let doc = std::fs::read_to_string(&out).unwrap();
    assert!(doc.contains("\"method\": \"search\""));
    assert_eq!(run(&["verify", "--expect-mono", "0,0,0"], &doc).status.code(), Some(0));
}
