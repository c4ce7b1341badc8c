use std::io::Write;
use std::process::{Command, Output, Stdio};

fn egt(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_egt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn egt");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn solve_reads_stdin() {
    let o = egt(&["solve"], "C~\n");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["graph6"], "C~");
    assert_eq!(v["alpha1"], 2);
    assert_eq!(v["tau"], 2);
    assert_eq!(v["checks"]["egt"]["tight"], true);
}

#[test]
fn solve_with_empty_input_prints_nothing() {
    let o = egt(&["solve"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_record_is_reported_with_its_line() {
    let o = egt(&["solve"], "C~\nxx!\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn verify_small_sweep_succeeds() {
    let o = egt(&["verify", "--n", "1..5"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("graphs processed: 52"), "{out}");
    assert!(out.contains("counterexamples: 0"));
}

#[test]
fn matching_bound_has_no_tight_graph_on_three_vertices() {
    let o = egt(&["verify", "--n", "3", "--check", "thm-match"], "");
    assert_eq!(o.status.code(), Some(0));
    let row = stdout(&o).lines().find(|l| l.starts_with("thm-match")).unwrap().to_string();
    assert_eq!(row.split_whitespace().collect::<Vec<_>>(), ["thm-match", "4", "0", "0"]);
}

#[test]
fn verify_rejects_sweeps_past_eight_vertices() {
    let o = egt(&["verify", "--n", "9"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_jsonl_is_independent_of_jobs() {
    let a = egt(&["verify", "--n", "1..6", "--format", "jsonl", "--jobs", "1"], "");
    let b = egt(&["verify", "--n", "1..6", "--format", "jsonl", "--jobs", "3"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a).lines().count(), 208);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_csv_has_header() {
    let o = egt(&["verify", "--n", "3", "--format", "csv"], "");
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("graph6,n,m,alpha1,tau,tau_b,b,"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn enumerate_writes_graph6_lines() {
    let o = egt(&["enumerate", "--n", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 11);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n5.g6");
    let o = egt(&["enumerate", "--n", "5", "--out", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 34);
}

#[test]
fn construct_families() {
    let o = egt(&["construct", "--family", "join", "--params", "1,1"], "");
    assert_eq!(stdout(&o), "C~\nA 2: 0 5\n");
    let o = egt(&["construct", "--family", "complete", "--params", "6"], "");
    assert_eq!(stdout(&o), "E~~w\n");
    let o = egt(&["construct", "--family", "biclique", "--params", "3", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let g6 = stdout(&o).trim().to_string();
    let s = egt(&["solve", "--graph", &g6], "");
    let v: serde_json::Value = serde_json::from_str(stdout(&s).trim()).unwrap();
    assert_eq!((v["m"].as_u64(), v["alpha1"].as_u64(), v["tau"].as_u64()), (Some(9), Some(9), Some(0)));
}
