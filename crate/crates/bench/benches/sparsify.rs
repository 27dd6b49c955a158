use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sparselab_bench::{bounded_graph, random_graph};
use sparselab_core::analysis::branching_root;
use sparselab_core::sparsify::{approx_is_kstep, param_is_excavation, ExactSubsolver};
use sparselab_core::{superlinear_sparsify, Mode, ThresholdPolicy};

fn leaves(c: &mut Criterion) {
    let mut group = c.benchmark_group("superlinear leaves");
    for n in [16, 24, 32] {
        let g = random_graph(n, 0.4);
        for (name, policy) in [
            ("const:3", ThresholdPolicy::Constant(3)),
            ("power:0.5", ThresholdPolicy::Power(0.5)),
        ] {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| {
                    superlinear_sparsify(black_box(g), Mode::Is, policy)
                        .unwrap()
                        .count()
                })
            });
        }
    }
    group.finish();
}

fn excavation(c: &mut Criterion) {
    let mut group = c.benchmark_group("excavation");
    for n in [20, 30, 40] {
        let g = bounded_graph(n, 4);
        group.bench_with_input(BenchmarkId::new("param is", n), &g, |b, g| {
            b.iter(|| param_is_excavation(black_box(g)).unwrap())
        });
        let sub = ExactSubsolver::default();
        group.bench_with_input(BenchmarkId::new("kstep is", n), &g, |b, g| {
            b.iter(|| approx_is_kstep(black_box(g), &sub).unwrap())
        });
    }
    group.finish();
}

fn roots(c: &mut Criterion) {
    c.bench_function("branching roots b <= 1000", |b| {
        b.iter(|| {
            (2..=1000)
                .map(|b| branching_root(black_box(b)).unwrap().excess())
                .sum::<f64>()
        })
    });
}

criterion_group!(benches, leaves, excavation, roots);
criterion_main!(benches);
