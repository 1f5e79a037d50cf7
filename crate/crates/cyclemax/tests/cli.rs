//! End-to-end checks of the command-line binary: output values, exit codes,
//! format fidelity, and thread-count determinism.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclemax"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = bin().args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn run_stdin(args: &[&str], input: &str) -> (String, i32) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn count_doubled_pentagon_from_stdin() {
    let (graph, _, code) = run(&["blowup", "--base", "2", "--sizes", "2,2,2,2,2"]);
    assert_eq!(code, 0);
    let (out, code) = run_stdin(&["count", "-"], &graph);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "593");
}

#[test]
fn count_graph6_and_empty_input() {
    // graph6 for K_{2,3}.
    let (out, code) = run_stdin(&["count", "-"], "D]o\n");
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "3");
    let (out, code) = run_stdin(&["count", "-"], "");
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "0");
}

#[test]
fn count_by_length_breakdown() {
    let (graph, _, _) = run(&["gamma", "--i", "3"]);
    let (plain, code) = run_stdin(&["count", "-"], &graph);
    assert_eq!(code, 0);
    let (out, code) = run_stdin(&["count", "-", "--by-length"], &graph);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("4: ")));
    assert_eq!(
        out.lines().last().unwrap(),
        format!("total: {}", plain.trim())
    );
}

#[test]
fn bound_values_and_notes() {
    let (out, err, code) = run(&["bound", "edge", "--n", "5", "--m", "6", "--g", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "18");
    assert!(err.contains("successor-product"));
    let (out, _, code) = run(&["bound", "perm", "--gamma", "3", "--t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "130");
    let (out, _, code) = run(&["bound", "turan-exact", "--n", "20"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1623855701385");
}

#[test]
fn domain_errors_exit_2() {
    let (_, err, code) = run(&["bound", "edge", "--n", "3", "--m", "2"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (_, _, code) = run(&["bound", "turan-exact", "--n", "1"]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&["search", "verify", "--max-n", "20"]);
    assert_eq!(code, 2);
    // Unknown subcommand is a usage error.
    let (_, _, code) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn tables_regenerate_exactly() {
    let (out, err, code) = run(&["tables"]);
    assert_eq!(code, 0, "stderr: {err}");
    assert!(out.contains("K_{28,28}"));
    assert!(err.contains("all 46 rows regenerate exactly"));
    let (csv, _, code) = run(&["tables", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(csv.lines().next().unwrap() == "label,n,value");
    assert_eq!(csv.lines().count(), 47);
}

#[test]
fn degree_screen_summary_line() {
    let (out, _, code) = run(&["search", "regular-degree"]);
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().last().unwrap(),
        "428 candidates, 428 eliminated, 0 survivors"
    );
}

#[test]
fn search_json_round_trips_byte_identical() {
    let (out, _, code) = run(&["search", "regular-degree", "--format", "json"]);
    assert_eq!(code, 0);
    let mut records = 0;
    for line in out.lines() {
        if !line.starts_with('{') {
            continue;
        }
        let parsed: cyclemax::search::CandidateRecord = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), line);
        records += 1;
    }
    assert_eq!(records, 428);
}

#[test]
fn verify_reports_uniqueness() {
    let (out, _, code) = run(&["search", "verify", "--max-n", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("n=5: examined=388 max=3 turan=3 maximizers=10 max = turan, unique = yes"));
}

#[test]
fn thread_count_does_not_change_output() {
    let (a, _, code_a) = run(&["search", "regular-gamma", "--format", "json", "--threads", "1"]);
    let (b, _, code_b) = run(&["search", "regular-gamma", "--format", "json"]);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(a, b);
}

#[test]
fn csv_and_json_carry_identical_data() {
    let (json, _, _) = run(&["search", "regular-degree", "--format", "json"]);
    let (csv, _, _) = run(&["search", "regular-degree", "--format", "csv"]);
    let json_pairs: Vec<(String, String)> = json
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| {
            let r: cyclemax::search::CandidateRecord = serde_json::from_str(l).unwrap();
            (format!("{}:{}", r.n, r.delta.unwrap()), r.verdict)
        })
        .collect();
    let csv_pairs: Vec<(String, String)> = csv
        .lines()
        .skip(1)
        .filter(|l| l.starts_with("regular-pair"))
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            (format!("{}:{}", cols[1], cols[4]), cols[8].to_string())
        })
        .collect();
    assert_eq!(json_pairs, csv_pairs);
}
