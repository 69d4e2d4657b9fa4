use std::fmt::Write;

use clap::ValueEnum;
use hypercontracts::behavioral::ConvexityReport;
use hypercontracts::doc::{AgOut, AutomatonDoc, BehavioralContractOut, CompositionOut, ContractOut, LanguageDoc};
use hypercontracts::oracle::CheckReport;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// The value computed by a command, with the display forms of behavioral
/// results precomputed against their universe.
#[derive(Debug)]
pub enum Output {
    Language(LanguageDoc),
    Contract(ContractOut),
    Composition(CompositionOut),
    Bool(bool),
    Compset(Vec<Vec<String>>, String),
    BehContract(BehavioralContractOut, String, String),
    Ag(AgOut, String, String),
    Convexity(ConvexityReport),
    Reports(Vec<CheckReport>),
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn list(out: &mut String, indent: &str, label: &str, items: &[String]) {
    let _ = write!(out, "{indent}{label}:");
    for x in items {
        let _ = write!(out, " {x}");
    }
    out.push('\n');
}

fn language_text(out: &mut String, indent: &str, d: &LanguageDoc) {
    list(out, indent, "alphabet", &d.alphabet);
    if let Some(inputs) = &d.inputs {
        list(out, indent, "inputs", inputs);
    }
    let _ = writeln!(out, "{indent}initial: {}", d.initial);
    list(out, indent, "accepting", &d.accepting);
    for (p, s, q) in &d.transitions {
        let _ = writeln!(out, "{indent}{p} -{s}-> {q}");
    }
}

fn automaton_text(out: &mut String, d: &AutomatonDoc) {
    list(out, "", "alphabet", &d.alphabet);
    list(out, "", "inputs", &d.inputs);
    let _ = writeln!(out, "initial: {}", d.initial);
    for (p, s, q) in &d.transitions {
        let _ = writeln!(out, "{p} -{s}-> {q}");
    }
}

impl Output {
    pub fn json(&self) -> Value {
        match self {
            Output::Language(d) => to_value(d),
            Output::Contract(c) => to_value(c),
            Output::Composition(c) => to_value(c),
            Output::Bool(b) => json!(b),
            Output::Compset(h, _) => json!({ "compset": h }),
            Output::BehContract(c, _, _) => to_value(c),
            Output::Ag(c, _, _) => to_value(c),
            Output::Convexity(r) => json!({ "convex": r.convex, "coconvex": r.coconvex, "flat": r.flat }),
            Output::Reports(rs) => json!({
                "passed": rs.iter().all(CheckReport::passed),
                "reports": rs,
            }),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Language(d) => language_text(&mut out, "", d),
            Output::Contract(c) if !c.compatible => out.push_str("incompatible\n"),
            Output::Contract(c) => {
                list(&mut out, "", "inputs", c.inputs.as_deref().unwrap_or_default());
                list(&mut out, "", "outputs", c.outputs.as_deref().unwrap_or_default());
                for (name, l) in [("S", &c.s), ("E", &c.e), ("M", &c.m)] {
                    if let Some(l) = l {
                        let _ = writeln!(&mut out, "{name}:");
                        language_text(&mut out, "  ", l);
                    }
                }
            }
            Output::Composition(c) => {
                match &c.automaton {
                    Some(a) => automaton_text(&mut out, a),
                    None => out.push_str("incompatible\n"),
                }
                for p in &c.pruned_states {
                    let _ = writeln!(&mut out, "pruned: {p}");
                }
            }
            Output::Bool(b) => {
                let _ = writeln!(&mut out, "{b}");
            }
            Output::Compset(_, text) => {
                let _ = writeln!(&mut out, "{text}");
            }
            Output::BehContract(_, env, imp) => {
                let _ = writeln!(&mut out, "env: {env}\nimpl: {imp}");
            }
            Output::Ag(_, a, g) => {
                let _ = writeln!(&mut out, "A: {a}\nG: {g}");
            }
            Output::Convexity(r) => {
                let _ = writeln!(&mut out, "convex: {}\ncoconvex: {}\nflat: {}", r.convex, r.coconvex, r.flat);
            }
            Output::Reports(rs) => {
                for r in rs {
                    let _ = writeln!(&mut out, "{r}");
                }
            }
        }
        out
    }
}
