use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subcodes")).args(args).envs(env.iter().copied()).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str, contents: &[u8]) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("subcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn record_round_trips_through_analyze() {
    let built = run(&["construct", "bacon-shor", "2", "2", "q=3"], &[]);
    assert!(built.status.success());
    let path = scratch("bs22.json", &built.stdout);
    let analyzed = run(&["analyze", path.to_str().unwrap()], &[]);
    assert!(analyzed.status.success());
    assert_eq!(json(&analyzed), json(&built));
    assert_eq!(json(&built)["d"], 2);
}

#[test]
fn raw_gauge_file() {
    let path = scratch("five.txt", b"q=2\nn=5\nsymplectic=true\n1 0 0 1 0 0 1 1 0 0\n0 1 0 0 1 0 0 1 1 0\n1 0 1 0 0 0 0 0 1 1\n0 1 0 1 0 1 0 0 0 1\n");
    let out = run(&["construct", "raw", "--gauge", path.to_str().unwrap()], &[]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d"].as_u64()), (Some(5), Some(1), Some(3)));
}

#[test]
fn bounds_text_output() {
    let out = run(&["bounds", "--n", "12", "--k", "1", "--r", "6", "--d", "3", "--q", "2", "--format", "text"], &[]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("hamming") && l.contains("37") && l.contains("VIOLATED")), "{text}");
}

#[test]
fn puncture_modes() {
    let built = run(&["construct", "bacon-shor", "3", "3", "q=2"], &[]);
    let path = scratch("bs33.json", &built.stdout);
    let out = run(&["puncture", path.to_str().unwrap(), "--mode", "impure"], &[]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["after"]["n"], 8);
    assert_eq!(v["after"]["r"], 5);

    let h = scratch("hamming.txt", b"q=2\nn=7\n1 0 0 1 1 0 1\n0 1 0 1 0 1 1\n0 0 1 0 1 1 1\n");
    let h = h.to_str().unwrap();
    let steane = run(&["construct", "euclidean", "--x1", h, "--x2", h], &[]);
    assert!(steane.status.success());
    assert_eq!(json(&steane)["pure"], true);
    let p = scratch("steane.json", &steane.stdout);
    assert_eq!(run(&["puncture", p.to_str().unwrap(), "--mode", "auto"], &[]).status.code(), Some(3));
}

#[test]
fn simulate_agrees_with_algebra() {
    let built = run(&["construct", "bacon-shor", "2", "2", "q=3"], &[]);
    let path = scratch("sim.json", &built.stdout);
    for error in ["I", "X1", "Z2*X3", "X4:2"] {
        let out = run(&["simulate", path.to_str().unwrap(), "--error", error, "--seed", "4"], &[]);
        assert!(out.status.success(), "{error}");
        let v = json(&out);
        assert_eq!(v["agrees"], true, "{error}");
        assert_eq!(v["syndrome"], v["predicted"]);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "/nonexistent/record.json"], &[]).status.code(), Some(2));
    let bad = scratch("bad.txt", b"q=2\n1 0\n");
    assert_eq!(run(&["construct", "raw", "--gauge", bad.to_str().unwrap()], &[]).status.code(), Some(2));
    let capped = run(&["construct", "bacon-shor", "3", "3", "q=2"], &[("SUBCODES_ENUM_CAP", "100")]);
    assert_eq!(capped.status.code(), Some(4));
    let skipped = run(&["construct", "--no-distance", "bacon-shor", "3", "3", "q=2"], &[("SUBCODES_ENUM_CAP", "100")]);
    assert!(skipped.status.success());
    assert_eq!(json(&skipped)["d"], Value::Null);
}
