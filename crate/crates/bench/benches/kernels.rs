use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use majcolor_bench::{mindeg_suite, regular_suite};
use majcolor_core::flow::{max_flow, selection_network};
use majcolor_core::{
    alpha_majority_k2, balanced_2coloring, brute_min_colors, gallai_edmonds, generate, majority3,
    majority4, max_matching, proper_edge_coloring, resample_until_valid, ResampleConfig,
};

const SIZES: [usize; 3] = [50, 100, 200];

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching");
    for (n, g) in mindeg_suite(&SIZES, 4, 7) {
        group.bench_with_input(BenchmarkId::new("blossom", n), &g, |b, g| {
            b.iter(|| max_matching(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("gallai_edmonds", n), &g, |b, g| {
            b.iter(|| gallai_edmonds(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn flow(c: &mut Criterion) {
    let mut group = c.benchmark_group("selection_flow");
    for a in [4usize, 8, 16] {
        // isolated D-vertices on one side, A on the other
        let g = generate::complete_bipartite(a, 6 * a).unwrap();
        let ge = gallai_edmonds(&g).unwrap();
        let net = selection_network(&g, &ge).network;
        group.bench_with_input(BenchmarkId::new("dinic", 7 * a), &net, |b, net| {
            b.iter(|| max_flow(black_box(net)))
        });
    }
    group.finish();
}

fn colorings(c: &mut Criterion) {
    let mut group = c.benchmark_group("coloring");
    for (n, g) in regular_suite(&SIZES, 8, 3) {
        group.bench_with_input(BenchmarkId::new("misra_gries", n), &g, |b, g| {
            b.iter(|| proper_edge_coloring(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("euler_2", n), &g, |b, g| {
            b.iter(|| balanced_2coloring(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("majority4", n), &g, |b, g| {
            b.iter(|| majority4(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("majority3", n), &g, |b, g| {
            b.iter(|| majority3(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("alpha_k3", n), &g, |b, g| {
            b.iter(|| alpha_majority_k2(black_box(g), 3).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("resample_k2", n), &g, |b, g| {
            b.iter(|| resample_until_valid(black_box(g), &ResampleConfig::new(g, 2, 1)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let petersen = generate::petersen();
    c.bench_function("oracle/petersen", |b| {
        b.iter(|| brute_min_colors(black_box(&petersen), 4))
    });
}

criterion_group!(benches, matching, flow, colorings, oracle);
criterion_main!(benches);
