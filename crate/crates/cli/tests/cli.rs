use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_influence"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_input(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the game may end before reading everything
    let _ = child.stdin.take().unwrap().write_all(input.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn solve_figure1_json() {
    let o = run(&["solve", fixture("figure1.inf").to_str().unwrap(), "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(
        keys,
        ["bestMoveL", "bestMoveR", "elapsedMs", "incentive", "ls", "memoEntries", "n", "rs", "sL1", "sL2", "sR1", "sR2"]
    );
    assert_eq!(v["ls"], 2);
    assert_eq!(v["rs"], -6);
    assert_eq!((v["sL1"].clone(), v["sL2"].clone(), v["sR1"].clone(), v["sR2"].clone()), (4.into(), 0.into(), 6.into(), 2.into()));
    assert_eq!(v["incentive"], 8);
}

#[test]
fn solve_modes_agree() {
    let path = fixture("figure1.inf");
    let p = path.to_str().unwrap();
    let base = stdout(&run(&["solve", p]));
    for extra in [&["--mode", "raw"][..], &["--pruning", "off"], &["--audit"], &["--parallel"]] {
        let mut args = vec!["solve", p];
        args.extend_from_slice(extra);
        let o = run(&args);
        assert!(o.status.success(), "{extra:?}: {}", stderr(&o));
        let strip = |s: &str| s.lines().filter(|l| !l.contains("ms") && !l.contains("memo")).collect::<Vec<_>>().join("\n");
        assert_eq!(strip(&stdout(&o)), strip(&base), "{extra:?}");
    }
}

#[test]
fn solve_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "empty.inf", "influence v1\n");
    let o = run(&["solve", p.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in ["n", "sL1", "sL2", "sR1", "sR2", "ls", "rs"] {
        assert_eq!(v[k], 0, "{k}");
    }
}

#[test]
fn self_loop_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "loop.inf", "influence v1\nv 0 L\na 0 0\n");
    let o = run(&["solve", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("self-loop at line 3"), "{}", stderr(&o));
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = run(&["solve", "/nonexistent/graph.inf"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_families() {
    let dir = tempfile::tempdir().unwrap();
    let seg = dir.path().join("s5.inf");
    let o = run(&["gen", "--out", seg.to_str().unwrap(), "segment", "--n", "5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let solved = stdout(&run(&["solve", seg.to_str().unwrap(), "--json"]));
    let v: serde_json::Value = serde_json::from_str(&solved).unwrap();
    assert_eq!((v["ls"].clone(), v["rs"].clone()), (1.into(), (-5).into()));

    let o = run(&["gen", "cycle", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("odd cycle"));

    let o = run(&["gen", "cycle", "--n", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("v ")).count(), 6);

    let o = run(&["gen", "tree", "--n", "2", "--c", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("v ")).count(), 40);
    assert!(stderr(&o).contains("40 vertices"));
}

#[test]
fn table_csv() {
    let o = run(&["table", "--max-n", "8", "--csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,ls,rs");
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[5], "5,1,-5");
    assert_eq!(lines[8], "8,2,-2");
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin()
        .args(["verify", "--suite", "figure1"])
        .env("INFLUENCE_RESULTS_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let json = std::fs::read_to_string(dir.path().join("figure1.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["suite"], "figure1");
    assert!(dir.path().join("figure1.csv").exists());
}

#[test]
fn verify_reports_failures() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify", "--suite", "cycles", "--max-n", "12", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let o = run(&["verify", "--suite", "nope", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn play_figure1_as_right() {
    let o = run_with_input(&["play", fixture("figure1.inf").to_str().unwrap(), "--human", "R"], "3\n1\n");
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("engine (L) plays 0"), "{out}");
    assert!(out.trim_end().ends_with("final score L 4 - R 2: Left wins"), "{out}");
}

#[test]
fn play_rejects_bad_input() {
    let o = run_with_input(&["play", fixture("figure1.inf").to_str().unwrap(), "--human", "R"], "0\nx\n3\n1\n");
    assert!(o.status.success());
    assert!(stdout(&o).contains("final score L 4 - R 2"));
}

#[test]
fn play_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "empty.inf", "influence v1\n");
    let o = run_with_input(&["play", p.to_str().unwrap(), "--human", "L"], "");
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("game over"));
}

#[test]
fn engine_wins_s4_moving_first() {
    let dir = tempfile::tempdir().unwrap();
    let seg = dir.path().join("s4.inf");
    assert!(run(&["gen", "--out", seg.to_str().unwrap(), "segment", "--n", "4"]).status.success());
    // the human answers with the first vertex it is offered
    let input = "2\n4\n1\n3\n".repeat(2);
    let o = run_with_input(&["play", seg.to_str().unwrap(), "--human", "R", "--first", "L"], &input);
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    let nums: Vec<i32> = last
        .trim_start_matches("final score L ")
        .split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap())
        .collect();
    assert!(nums[0] > nums[1], "{out}");
}

#[test]
fn export_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.dot");
    let o = run(&["export-dot", fixture("figure1.inf").to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let dot = std::fs::read_to_string(out).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 6);
}
