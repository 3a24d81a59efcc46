//! End-to-end tests of the command-line interface.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_tree-augment");

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the child may exit before reading stdin (argument errors), so a
    // broken pipe here is fine
    let _ = child.stdin.as_mut().unwrap().write_all(input.as_bytes());
    child.wait_with_output().unwrap()
}

const PATH4: &str = "4 3\n1 2\n2 3\n3 4\n";
const STAR5: &str = "5 4\n1 2\n1 3\n1 4\n1 5\n";

#[test]
fn path_run_succeeds() {
    let out = run_stdin(&["--stdin", "--r", "2", "--verify"], PATH4);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("augmentation edges (1)"));
    assert!(text.contains("1 4 # cycle-closure"));
    assert!(text.contains("achieved_kappa=2"));
}

#[test]
fn nonpath_run_with_oracle() {
    let out = run_stdin(&["--stdin", "--r", "3", "--verify", "--oracle"], STAR5);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict=proven-optimal"));
}

#[test]
fn invalid_target_exits_2() {
    let out = run_stdin(&["--stdin", "--r", "5"], STAR5);
    assert_eq!(out.status.code(), Some(2));
    // r = 2 on a non-path is out of scope for the algorithm
    let out = run_stdin(&["--stdin", "--r", "2"], STAR5);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_tree_input_exits_2() {
    let cycle = "3 3\n1 2\n2 3\n1 3\n";
    let out = run_stdin(&["--stdin", "--r", "2"], cycle);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conflicting_sources_exit_2() {
    let out = run_stdin(&["--stdin", "--random-tree", "6", "--r", "3"], PATH4);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn random_tree_runs_verified() {
    let out = Command::new(BIN)
        .args(["--random-tree", "12", "--seed", "3", "--r", "4", "--verify"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("achieved_kappa=4"));
}

#[test]
fn json_output_is_deterministic_and_well_formed() {
    let dir = std::env::temp_dir().join("tree-augment-cli-json");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("run.json");
    let mut docs = Vec::new();
    for _ in 0..2 {
        let out = run_stdin(
            &[
                "--stdin",
                "--r",
                "3",
                "--verify",
                "--json",
                file.to_str().unwrap(),
            ],
            STAR5,
        );
        assert_eq!(out.status.code(), Some(0));
        docs.push(std::fs::read(&file).unwrap());
    }
    assert_eq!(docs[0], docs[1]);
    let doc: serde_json::Value = serde_json::from_slice(&docs[0]).unwrap();
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["r"], 3);
    assert_eq!(doc["achieved_kappa"], 3);
    assert_eq!(doc["eca"].as_array().unwrap().len(), 4);
    assert_eq!(
        doc["eca"].as_array().unwrap().len(),
        doc["round_tags"].as_array().unwrap().len()
    );
    assert!(doc.get("witness").is_none());
}

#[test]
fn dot_files_are_written() {
    let dir = std::env::temp_dir().join("tree-augment-cli-dot");
    let _ = std::fs::remove_dir_all(&dir);
    let out = run_stdin(
        &["--stdin", "--r", "3", "--dot", dir.to_str().unwrap()],
        STAR5,
    );
    assert_eq!(out.status.code(), Some(0));
    let input = std::fs::read_to_string(dir.join("input.dot")).unwrap();
    let output = std::fs::read_to_string(dir.join("output.dot")).unwrap();
    assert!(input.starts_with("graph g {"));
    assert!(output.contains("[style=dashed]"));
    assert!(dir.join("block-tree-round-2.dot").exists());
}

#[test]
fn trace_prints_rounds() {
    let out = run_stdin(&["--stdin", "--r", "3", "--trace"], STAR5);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# leaf chain:"));
    assert!(text.contains("# round 2:"));
}
