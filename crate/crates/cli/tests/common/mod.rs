#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: String,
    pub exit: i32,
    pub args: Vec<String>,
}

pub struct Run {
    pub name: String,
    pub exit: i32,
    /// stdout, followed by stderr when there is any.
    pub transcript: String,
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

pub fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(corpus_dir().join("commands.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.splitn(3, '|').map(str::trim).collect();
            Case {
                name: parts[0].to_string(),
                exit: parts[1].parse().unwrap(),
                args: parts[2].split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

pub fn hyperc(args: &[String]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperc"))
        .args(args)
        .current_dir(corpus_dir())
        .env_remove("HYPERC_MAX_STATES")
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

pub fn run(case: &Case) -> Run {
    let (exit, stdout, stderr) = hyperc(&case.args);
    let mut transcript = stdout;
    if !stderr.is_empty() {
        transcript.push_str("--- stderr\n");
        transcript.push_str(&stderr);
    }
    Run {
        name: case.name.clone(),
        exit,
        transcript,
    }
}

pub fn run_all() -> Vec<Run> {
    cases().iter().map(run).collect()
}
