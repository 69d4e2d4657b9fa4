//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed.

mod common;

use std::time::Instant;

use hypercontracts::behavioral::info_flow::{SecureFlow, ONE_BIT_FUNCTIONS};
use hypercontracts::behavioral::{AgContract, Component, Universe};
use hypercontracts::oracle::{self, BoundedCheckConfig, CheckKind, CheckReport};

type Verdict = Result<String, String>;

fn from_report(r: CheckReport) -> Verdict {
    if r.passed() {
        Ok(r.to_string())
    } else {
        Err(r.to_string())
    }
}

fn suite(kind: CheckKind, cfg: BoundedCheckConfig) -> Verdict {
    oracle::run(kind, &cfg).map_err(|e| e.to_string()).and_then(from_report)
}

fn heyting_laws() -> Verdict {
    suite(
        CheckKind::Exponential,
        BoundedCheckConfig {
            max_states: 4,
            ..Default::default()
        },
    )
}

fn receptive_quotient() -> Verdict {
    suite(CheckKind::ReceptiveQuotient, BoundedCheckConfig::default())
}

fn ia_equivalence() -> Verdict {
    suite(CheckKind::IaEquivalence, BoundedCheckConfig::default())
}

fn composition_soundness() -> Verdict {
    suite(CheckKind::InterfaceCompose, BoundedCheckConfig::default())
}

fn conic_algebra() -> Verdict {
    oracle::conic_exhaustive(4, 2).map_err(|e| e.to_string()).and_then(from_report)
}

fn ag_example() -> Verdict {
    let run = || -> hypercontracts::Result<Verdict> {
        let u = Universe::numbered(4)?;
        let c = |xs: &[usize]| Component::from_indices(xs.iter().copied());
        let ag1 = AgContract::new(u.clone(), c(&[0, 1]), c(&[0, 2]))?;
        let ag2 = AgContract::new(u.clone(), c(&[0, 2]), c(&[0, 1]))?;
        let (k1, k2) = (ag1.to_contract(), ag2.to_contract());
        let general = k1.to_general()?.compose(&k2.to_general()?)?;
        let composite = k1.compose(&k2)?;
        if composite.to_general()? != general {
            return Ok(Err("conic composite differs from the general engine".into()));
        }
        if composite.env().maximals() != [c(&[0, 1, 2])] || composite.imp().maximals() != [c(&[0, 3])] {
            return Ok(Err(format!(
                "composite env {} impl {}",
                composite.env().format(),
                composite.imp().format()
            )));
        }
        let strong = ag1.merge_strong(&ag2)?;
        if (strong.assumption(), strong.guarantee()) != (c(&[0]), c(&[0])) {
            return Ok(Err("strong merge is not (A1∩A2, G1∩G2)".into()));
        }
        let merged = strong.to_contract();
        if merged != k1.merge_strong(&k2)? || merged != k1.merge_strong_search(&k2)? {
            return Ok(Err("strong merge disagrees with the contract-level merge".into()));
        }
        Ok(Ok(format!(
            "env {} impl {}; strong merge env {} impl {}",
            composite.env().format(),
            composite.imp().format(),
            merged.env().format(),
            merged.imp().format()
        )))
    };
    run().map_err(|e| e.to_string())?
}

fn secure_flow() -> Verdict {
    for f in ONE_BIT_FUNCTIONS {
        let report = SecureFlow::new(f).check().map_err(|e| e.to_string())?;
        if !(report.composite_refines_spec && report.glue_consistent) {
            return Err(format!("f*={f:?}: {report:?}"));
        }
    }
    Ok("Cr ∥ Cc ≤ C and Cr consistent for all four f*".into())
}

fn convexity() -> Verdict {
    oracle::convexity_exhaustive(3).map_err(|e| e.to_string()).and_then(from_report)
}

fn determinism() -> Verdict {
    let first = common::run_all();
    let second = common::run_all();
    for (a, b) in first.iter().zip(&second) {
        if a.exit != b.exit || a.transcript != b.transcript {
            return Err(format!("`{}` differs between runs", a.name));
        }
    }
    Ok(format!("{} commands byte-identical across two runs", first.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("heyting laws", heyting_laws),
        ("receptive quotient", receptive_quotient),
        ("ia/contract equivalence", ia_equivalence),
        ("composition soundness", composition_soundness),
        ("conic algebra", conic_algebra),
        ("ag example", ag_example),
        ("secure information flow", secure_flow),
        ("convexity", convexity),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = check();
        let secs = t.elapsed().as_secs_f64();
        match &verdict {
            Ok(detail) => println!("criterion {} ({name}): PASS [{secs:.1}s] {detail}", i + 1),
            Err(detail) => {
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
