use hypercontracts::oracle::{self, BoundedCheckConfig, CheckKind};

#[test]
fn every_suite_passes_on_defaults() {
    let cfg = BoundedCheckConfig::default();
    for kind in CheckKind::ALL {
        let t = std::time::Instant::now();
        let report = oracle::run(kind, &cfg).unwrap();
        eprintln!("{report} ({:?})", t.elapsed());
        assert!(report.passed(), "{report}");
    }
}
