use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_spectra");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("SPECTRA_DATA_DIR").output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{}: {}", e, String::from_utf8_lossy(&o.stdout)))
}

fn with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child =
        Command::new(BIN).args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn certify_heawood() {
    let o = run(&["certify", "heawood"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["spec_version"], "1.0");
    assert_eq!(v["command"], "certify");
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(4), Some(4)));
    assert_eq!(v["lower_rule"], "sign-exhaust");
}

#[test]
fn output_is_repeatable() {
    for args in [&["certify", "heawood", "--threads", "1"][..], &["certify", "heawood", "--threads", "7"], &["table1"]] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{:?}", args);
    }
    assert_eq!(run(&["certify", "heawood", "--threads", "1"]).stdout, run(&["certify", "heawood", "--threads", "7"]).stdout);
}

#[test]
fn timings_only_on_request() {
    let plain = json(&run(&["obstruct", "--graph", "heawood", "--j", "3", "--mode", "exhaust"]));
    assert!(plain["exhaust"]["certificate"]["stats"]["elapsed_ms"].is_null());
    let timed = json(&run(&["--timings", "obstruct", "--graph", "heawood", "--j", "3", "--mode", "exhaust"]));
    assert!(timed["exhaust"]["certificate"]["stats"]["elapsed_ms"].is_u64());
}

#[test]
fn gen_pipes_into_certify() {
    let g = run(&["gen", "johnson", "--n", "6", "--d", "3", "--emit", "signed"]);
    assert_eq!(g.status.code(), Some(0));
    let o = with_stdin(&["certify"], &g.stdout);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(2), Some(2)));

    let g6 = run(&["gen", "hamming", "--d", "2", "--n", "3", "--emit", "graph6"]);
    let o = with_stdin(&["certify", "-"], &g6.stdout);
    let v = json(&o);
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(3), Some(3)));
}

#[test]
fn usage_and_format_errors_exit_2() {
    assert_eq!(run(&["certify", "nosuch:1:2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["certify", "heawood", "--format", "yaml"]).status.code(), Some(2));
    let o = with_stdin(&["certify"], b"Dh c\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 2"));
}

#[test]
fn failed_check_exits_1() {
    let src = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let dir = std::env::temp_dir().join(format!("spectra-cli-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    for e in std::fs::read_dir(&src).unwrap() {
        let p = e.unwrap().path();
        std::fs::copy(&p, dir.join(p.file_name().unwrap())).unwrap();
    }
    let f = dir.join("wells.g6");
    let mut bytes = std::fs::read(&f).unwrap();
    bytes[5] ^= 2;
    std::fs::write(&f, bytes).unwrap();
    let d = dir.to_str().unwrap();

    let o = run(&["--data-dir", d, "bundle"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let bad: Vec<_> = v["entries"].as_array().unwrap().iter().filter(|e| e["ok"] == false).map(|e| e["name"].clone()).collect();
    assert_eq!(bad, ["wells"]);

    // the environment variable is honored too
    let o = Command::new(BIN).arg("bundle").env("SPECTRA_DATA_DIR", d).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["bundle"]).status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_format() {
    let o = run(&["--format", "text", "certify", "cycle:7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.starts_with("spec_version: 1.0\ncommand: certify\n"));
    assert!(s.contains("lower: 4\n"));
    let t = String::from_utf8(run(&["--format", "text", "table1"]).stdout).unwrap();
    assert_eq!(t.lines().filter(|l| l.ends_with("[matches-paper]")).count(), 12);
}

#[test]
fn other_subcommands() {
    let v = json(&run(&["codes", "table2", "--n", "4", "--d", "3"]));
    assert_eq!(v["all_verified"], true);
    assert_eq!(v["codes"]["A"]["dim"], 3);
    let v = json(&run(&["zeta", "--d", "5"]));
    assert_eq!(v["command"], "zeta");
    let o = run(&["fold", "wells"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["zf", "johnson:4:2", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["frames", "--n", "6", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["johnson", "--n", "6", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["scheme", "search", "--group", "s4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["obstruct", "--graph", "coxeter", "--j", "4", "--mode", "parity"]);
    let v = json(&o);
    assert_eq!(v["parity"]["bound"], 5);
    // K(5,2) is the Petersen graph
    let g6 = run(&["gen", "kneser", "--n", "5", "--d", "2", "--emit", "graph6"]);
    let k = spectra::graph6::load_graph6(&g6.stdout).unwrap();
    let petersen = spectra::graph6::load_graph6(b"IheA@GUAo").unwrap();
    assert!(spectra_core::graph::find_isomorphism(&k, &petersen).is_some());
}
