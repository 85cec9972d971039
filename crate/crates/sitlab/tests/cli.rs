//! Black-box checks of the command-line interface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sitlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn sitlab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn decompose_compose_round_trip_via_stdin() {
    let sigma = "6 7 9 10 11 13 8 12 3 1 5 4 2";
    let dec = run(&["decompose", sigma, "--format", "json"]);
    assert!(dec.status.success());

    let mut child = bin()
        .args(["compose", "-", "--format", "text"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(&dec.stdout)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), sigma);
}

#[test]
fn exit_codes_distinguish_usage_and_domain_errors() {
    assert_eq!(run(&["count", "--k", "5", "--n-max", "6"]).status.code(), Some(0));
    // domain error: not a permutation
    assert_eq!(run(&["decompose", "1 1 2"]).status.code(), Some(1));
    // usage errors: unknown subcommand, malformed flag value
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--k", "banana", "--n-max", "6"]).status.code(), Some(2));
}

#[test]
fn count_matches_known_separable_numbers() {
    let out = run(&["count", "--k", "schroeder", "--n-max", "7", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,count");
    let last = text.lines().last().unwrap();
    assert_eq!(last, "7,1806");
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = std::env::temp_dir().join("sitlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("count.conf");
    std::fs::write(&cfg, "k = 4\nn-max = 5\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let from_cfg = run(&["count", "--config", cfg, "--format", "csv"]);
    assert!(from_cfg.status.success());
    assert_eq!(stdout(&from_cfg).lines().last().unwrap(), "5,114");

    let overridden = run(&["count", "--config", cfg, "--n-max", "6", "--format", "csv"]);
    assert!(overridden.status.success());
    assert_eq!(stdout(&overridden).lines().last().unwrap(), "6,590");
}

#[test]
fn sample_emits_seed_and_valid_trees() {
    let out = run(&[
        "sample", "--k", "4", "--size", "30", "--eps", "0.2", "--count", "3", "--seed", "11",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["seed"], serde_json::json!(11));
    assert_eq!(doc["trees"].as_array().unwrap().len(), 3);
}
