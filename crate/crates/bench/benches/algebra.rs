use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypercontracts::behavioral::{GeneralCompset, Universe};
use hypercontracts::oracle::{self, BoundedCheckConfig, CheckKind};
use hypercontracts_bench as fx;

fn receptive(c: &mut Criterion) {
    let pairs = fx::receptive_pairs(32, 6);
    c.bench_function("exponential", |b| {
        b.iter(|| {
            for (l, l2) in &pairs {
                black_box(l.exponential(l2).unwrap());
            }
        })
    });
    let qs = fx::quotient_pairs(32, 6);
    c.bench_function("receptive_quotient", |b| {
        b.iter(|| {
            for (l, l2) in &qs {
                black_box(l.quotient(l2).unwrap());
            }
        })
    });
}

fn interfaces(c: &mut Criterion) {
    let pairs = fx::contract_pairs(32, 6);
    c.bench_function("interface_compose", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(x.compose(y).unwrap());
            }
        })
    });
    let automata = fx::automaton_pairs(32, 8);
    c.bench_function("ia_compose", |b| {
        b.iter(|| {
            for (x, y) in &automata {
                black_box(x.compose(y).unwrap());
            }
        })
    });
}

fn conic(c: &mut Criterion) {
    let u = Universe::numbered(16).unwrap();
    let mut group = c.benchmark_group("conic_quotient");
    for k in [1usize, 2, 4, 6] {
        let h = fx::conic(&u, 6, 10);
        let h2 = fx::conic(&u, k, 20 + k as u64);
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, _| {
            b.iter(|| black_box(h.quotient(&h2).unwrap()))
        });
    }
    group.finish();

    let u4 = Universe::numbered(4).unwrap();
    let downsets = GeneralCompset::downsets(u4).unwrap();
    c.bench_function("general_compose_all_downsets_n4", |b| {
        b.iter(|| {
            for x in downsets.iter().step_by(7) {
                for y in downsets.iter().step_by(11) {
                    black_box(x.compose(y).unwrap());
                }
            }
        })
    });
}

fn oracles(c: &mut Criterion) {
    let cfg = BoundedCheckConfig {
        num_cases: 20,
        ..Default::default()
    };
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for kind in [CheckKind::Unc, CheckKind::ReceptiveQuotient, CheckKind::IaEquivalence] {
        group.bench_function(kind.name(), |b| b.iter(|| black_box(oracle::run(kind, &cfg).unwrap())));
    }
    group.finish();
}

criterion_group!(benches, receptive, interfaces, conic, oracles);
criterion_main!(benches);
