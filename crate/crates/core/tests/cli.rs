//! The binary's subcommands, flags and exit codes.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn spec(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma-noether")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn partition_json() {
    let p = spec("partition_z12.json");
    let out = run(&["partition", "--spec", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["task"], "partition");
    assert_eq!(v["results"]["K"], serde_json::json!(["(2)"]));
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn census_text_and_timing() {
    let p = spec("census_z30.json");
    let out = run(&["census", "--spec", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("gabriel_filters: 8"));
    let out = run(&["census", "--spec", p.to_str().unwrap(), "--format", "json", "--timing"]);
    assert!(json(&out)["timing_ms"].is_u64());
}

#[test]
fn monomial_expect_pass() {
    let refuted = spec("monomial_cohen.json");
    let certified = spec("monomial_certified.json");
    assert_eq!(run(&["monomial", "--spec", refuted.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["monomial", "--spec", refuted.to_str().unwrap(), "--expect-pass"]).status.code(), Some(1));
    assert_eq!(run(&["monomial", "--spec", certified.to_str().unwrap(), "--expect-pass"]).status.code(), Some(0));
    // a budget of 0 cannot cover the exponent 1
    let out = run(&["monomial", "--spec", certified.to_str().unwrap(), "--budget", "0", "--format", "json"]);
    assert_eq!(json(&out)["results"]["decision"]["verdict"], "exhausted");
}

#[test]
fn cap_flag() {
    let p = spec("suite_z12.json");
    let out = run(&["suite", "--spec", p.to_str().unwrap(), "--cap", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let p = spec("census_z30.json");
    assert_eq!(run(&["census", "--spec", p.to_str().unwrap(), "--cap", "30"]).status.code(), Some(0));
}

#[test]
fn errors_exit_two() {
    let out = run(&["census"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["census", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(out.status.code(), Some(2));
    // the subcommand disagrees with the document's task
    let p = spec("partition_z12.json");
    assert_eq!(run(&["census", "--spec", p.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn spec_from_stdin_with_parse_error() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sigma-noether"))
        .args(["census", "--spec", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"{\"ring\": {\"zmod\": 6},}").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn inspect_alias() {
    let p = spec("inspect_truncated.json");
    let out = run(&["inspect", "--spec", p.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["size"], 8);
}
