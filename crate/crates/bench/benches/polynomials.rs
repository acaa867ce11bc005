use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use interlace_bench::{bdh_graph, sp_sequence};
use interlace_core::dh::qn_bdh_fast;
use interlace_core::interlace::{qn_recursive, qn_statesum};
use interlace_core::planarsp::tutte_diagonal_sp;

fn vertex_nullity(c: &mut Criterion) {
    let mut group = c.benchmark_group("q_N on BDH graphs");
    group.sample_size(10);
    for n in [8, 12, 16] {
        let g = bdh_graph(n);
        group.bench_with_input(BenchmarkId::new("state-sum", n), &g, |b, g| b.iter(|| qn_statesum(black_box(g))));
        group.bench_with_input(BenchmarkId::new("recursion", n), &g, |b, g| b.iter(|| qn_recursive(black_box(g))));
        group.bench_with_input(BenchmarkId::new("bdh-fast", n), &g, |b, g| b.iter(|| qn_bdh_fast(black_box(g))));
    }
    for n in [50, 100, 200] {
        let g = bdh_graph(n);
        group.bench_with_input(BenchmarkId::new("bdh-fast", n), &g, |b, g| b.iter(|| qn_bdh_fast(black_box(g))));
    }
    group.finish();
}

fn sp_diagonal(c: &mut Criterion) {
    let mut group = c.benchmark_group("t(G;x,x) by reduction");
    for ops in [10, 40, 160] {
        let seq = sp_sequence(ops);
        group.bench_with_input(BenchmarkId::from_parameter(ops), &seq, |b, s| b.iter(|| tutte_diagonal_sp(black_box(s))));
    }
    group.finish();
}

criterion_group!(benches, vertex_nullity, sp_diagonal);
criterion_main!(benches);
