mod common;

use std::process::Command;

fn hyperc() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperc"));
    cmd.current_dir(common::corpus_dir());
    cmd
}

#[test]
fn output_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let status = hyperc()
        .args(["iface", "from-s", "inputs/istar_i.json", "-o"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["compatible"], true);
    assert_eq!(v["inputs"], serde_json::json!(["i"]));
}

#[test]
fn emitted_contracts_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    assert!(hyperc()
        .args(["iface", "mirror", "inputs/c_istar.json", "-o"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let twice = hyperc().args(["iface", "mirror"]).arg(&path).output().unwrap();
    let original = hyperc().args(["iface", "from-s", "inputs/istar_i.json"]).output().unwrap();
    let strip = |bytes: &[u8]| {
        let mut v: serde_json::Value = serde_json::from_slice(bytes).unwrap();
        v.as_object_mut().unwrap().remove("operation");
        v
    };
    assert_eq!(strip(&twice.stdout), strip(&original.stdout));
}

#[test]
fn state_limit_comes_from_the_environment() {
    let out = hyperc()
        .env("HYPERC_MAX_STATES", "1")
        .args(["lang", "union", "--auto-trap", "inputs/istar_partial.json", "inputs/eps_o.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("state limit"));

    let bad = hyperc()
        .env("HYPERC_MAX_STATES", "lots")
        .args(["oracle", "missext", "--cases", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn missing_files_and_usage_errors_exit_2() {
    let missing = hyperc().args(["lang", "complement", "inputs/nope.json"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("nope.json"));
    let usage = hyperc().args(["lang", "frobnicate"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn oracle_all_passes_with_another_seed() {
    let out = hyperc().args(["oracle", "all", "--seed", "7", "--cases", "40"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
}
