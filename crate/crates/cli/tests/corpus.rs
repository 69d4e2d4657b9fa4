mod common;

use std::collections::BTreeSet;
use std::fs;

use clap::CommandFactory;
use hypercontracts_cli::{Cli, COMMANDS};

#[test]
fn corpus_matches_expected_outputs() {
    let bless = std::env::var_os("HYPERC_BLESS").is_some();
    let dir = common::corpus_dir().join("expected");
    fs::create_dir_all(&dir).unwrap();
    let mut failures = Vec::new();
    for case in common::cases() {
        let run = common::run(&case);
        if run.exit != case.exit {
            failures.push(format!("{}: exit {} (expected {})\n{}", case.name, run.exit, case.exit, run.transcript));
            continue;
        }
        let path = dir.join(format!("{}.out", case.name));
        if bless {
            fs::write(&path, &run.transcript).unwrap();
        } else {
            let expected = fs::read_to_string(&path).unwrap_or_default();
            if expected != run.transcript {
                failures.push(format!("{}: output differs\n{}", case.name, run.transcript));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

fn subcommand_paths() -> BTreeSet<String> {
    let mut paths = BTreeSet::new();
    for group in Cli::command().get_subcommands() {
        let subs: Vec<_> = group.get_subcommands().filter(|c| c.get_name() != "help").collect();
        if subs.is_empty() {
            paths.insert(group.get_name().to_string());
        }
        for sub in subs {
            paths.insert(format!("{} {}", group.get_name(), sub.get_name()));
        }
    }
    paths.remove("help");
    paths
}

#[test]
fn command_table_covers_every_subcommand_once() {
    let table: Vec<&str> = COMMANDS.iter().map(|(path, _)| *path).collect();
    let unique: BTreeSet<String> = table.iter().map(|s| s.to_string()).collect();
    assert_eq!(unique.len(), table.len(), "duplicate subcommand in table");
    assert_eq!(unique, subcommand_paths());

    let mut operations = BTreeSet::new();
    for (path, ops) in COMMANDS {
        for op in *ops {
            assert!(operations.insert(*op), "{op} is reachable from more than one subcommand ({path})");
        }
    }
}

#[test]
fn corpus_exercises_every_subcommand() {
    let used: BTreeSet<String> = common::cases()
        .iter()
        .filter_map(|c| {
            let words: Vec<&str> = c.args.iter().map(String::as_str).filter(|a| !a.starts_with('-') && *a != "text" && *a != "json").collect();
            let path = format!("{} {}", words[0], words.get(1).copied().unwrap_or_default());
            subcommand_paths().into_iter().find(|p| *p == path || *p == words[0])
        })
        .collect();
    let missing: Vec<_> = subcommand_paths().difference(&used).cloned().collect();
    assert!(missing.is_empty(), "subcommands without corpus cases: {missing:?}");
}
