use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sparselab_bench::{fas_gadget, random_graph};
use sparselab_core::reductions::is_to_max2sat;
use sparselab_core::{solve_exact, Instance, OracleBudget, Problem};

fn graph_oracles(c: &mut Criterion) {
    let budget = OracleBudget::default();
    let mut group = c.benchmark_group("graph oracles");
    for n in [20, 30, 40] {
        let g: Instance = random_graph(n, 0.15).into();
        group.bench_with_input(BenchmarkId::new("is", n), &g, |b, g| {
            b.iter(|| solve_exact(Problem::Is, black_box(g), &budget).unwrap())
        });
    }
    for n in [12, 16, 20] {
        let g: Instance = random_graph(n, 0.3).into();
        for problem in [Problem::Ds, Problem::Ids, Problem::Fvs] {
            group.bench_with_input(BenchmarkId::new(problem.to_string(), n), &g, |b, g| {
                b.iter(|| solve_exact(problem, black_box(g), &budget).unwrap())
            });
        }
    }
    group.finish();
}

fn exponential_oracles(c: &mut Criterion) {
    let budget = OracleBudget::default();
    let mut group = c.benchmark_group("exponential oracles");
    group.sample_size(10);
    for n in [6, 8, 10] {
        let d: Instance = fas_gadget(n).into();
        group.bench_with_input(BenchmarkId::new("fas gadget", n), &d, |b, d| {
            b.iter(|| solve_exact(Problem::Fas, black_box(d), &budget).unwrap())
        });
    }
    for n in [12, 16] {
        let cnf: Instance = is_to_max2sat(&random_graph(n, 0.3)).unwrap().into();
        group.bench_with_input(BenchmarkId::new("max2sat", n), &cnf, |b, f| {
            b.iter(|| solve_exact(Problem::Max2Sat, black_box(f), &budget).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, graph_oracles, exponential_oracles);
criterion_main!(benches);
