//! Sequential vs. parallel execution of the hot loops.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use horoaut::bundle::bundle_batch;
use horoaut::fan::{demazure_roots_bruteforce_with, demazure_roots_with, safe_oracle_radius};
use horoaut::lie::{DynkinType, SimpleFactor};
use horoaut::par::Execution;
use horoaut::{BundleSpec, Fan, RootSystemSpec};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

/// A deterministic many-ray refinement of `P^n`.
fn refined(n: usize, steps: usize) -> Fan {
    let choices: Vec<usize> = (0..steps).map(|i| (i * 7919 + 13) % 1000).collect();
    Fan::projective_space(n).refine(&choices)
}

fn fast_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("demazure_roots");
    for (n, steps) in [(2, 40), (3, 30)] {
        let fan = refined(n, steps).validate().unwrap();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("dim{n}_rays{}", fan.rays().len())), &fan, |b, f| {
                b.iter(|| demazure_roots_with(black_box(f), exec))
            });
        }
    }
    g.finish();
}

fn bruteforce_oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("bruteforce_oracle");
    g.sample_size(20);
    let fans = [
        ("F8", Fan::hirzebruch(8)),
        ("F8xP1", Fan::hirzebruch(8).product(&Fan::projective_space(1))),
        ("F5xF3", Fan::hirzebruch(5).product(&Fan::hirzebruch(3))),
    ];
    for (label, fan) in fans {
        let fan = fan.validate().unwrap();
        let radius = safe_oracle_radius(&fan);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("{label}_r{radius}")), &fan, |b, f| {
                b.iter(|| demazure_roots_bruteforce_with(black_box(f), radius, exec))
            });
        }
    }
    g.finish();
}

/// Rank-three bundles over the flag variety of `A_3` with all twists in a box.
fn bundle_sweep() -> Vec<BundleSpec> {
    let base = RootSystemSpec::new(vec![SimpleFactor::new(DynkinType::A, 3)], 0);
    let marking = vec![(0, 1), (0, 2), (0, 3)];
    let mut specs = Vec::new();
    for a in -2..=2i64 {
        for b in -2..=2i64 {
            for c in -2..=2i64 {
                specs.push(BundleSpec {
                    base: base.clone(),
                    marking: marking.clone(),
                    line_bundles: vec![vec![0, 0, 0], vec![a, b, c], vec![c, a, b]],
                });
            }
        }
    }
    specs
}

fn batch(c: &mut Criterion) {
    let specs = bundle_sweep();
    let mut g = c.benchmark_group("bundle_batch");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, specs.len()), &specs, |b, s| {
            b.iter(|| bundle_batch(black_box(s), exec))
        });
    }
    g.finish();
}

criterion_group!(benches, fast_enumeration, bruteforce_oracle, batch);
criterion_main!(benches);
