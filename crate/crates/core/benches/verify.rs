//! Benchmarks for enumeration, poset construction, and theorem verification,
//! including a corpus sweep in both the parallel and the sequential lane.
//! Run `cargo bench` for the default (parallel) build and
//! `cargo bench --no-default-features` for the sequential fallback.

use criterion::{criterion_group, criterion_main, Criterion};
use orilat_core::graph::{connected_graphs_up_to, Graph};
use orilat_core::lattice::{verify_corpus, verify_corpus_serial, verify_theorem};
use orilat_core::orientation::enumerate_acyclic;
use orilat_core::poset::Poset;
use std::hint::black_box;

fn k5() -> Graph {
    let mut edges = Vec::new();
    for a in 0..5 {
        for b in (a + 1)..5 {
            edges.push((a, b));
        }
    }
    Graph::new(4, &edges).unwrap()
}

fn c6() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap()
}

fn bench_enumerate(c: &mut Criterion) {
    let g = k5();
    c.bench_function("enumerate_acyclic/k5", |b| {
        b.iter(|| enumerate_acyclic(black_box(&g)))
    });
}

fn bench_poset(c: &mut Criterion) {
    let g = c6();
    c.bench_function("poset_build/c6", |b| b.iter(|| Poset::build(black_box(&g))));
}

fn bench_verify(c: &mut Criterion) {
    let g = c6();
    c.bench_function("verify_theorem/c6", |b| {
        b.iter(|| verify_theorem(black_box(&g)))
    });
}

fn bench_corpus(c: &mut Criterion) {
    let graphs = connected_graphs_up_to(4);
    let mut group = c.benchmark_group("verify_corpus/n4");
    group.sample_size(10);
    group.bench_function("parallel_lane", |b| {
        b.iter(|| verify_corpus(black_box(&graphs)))
    });
    group.bench_function("serial_lane", |b| {
        b.iter(|| verify_corpus_serial(black_box(&graphs)))
    });
    group.finish();
}

criterion_group!(benches, bench_enumerate, bench_poset, bench_verify, bench_corpus);
criterion_main!(benches);
