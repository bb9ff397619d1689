use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperdeg::gen::{random_general, random_tripartite};
use hyperdeg::{
    oracle_tripartite, realize_hypergraph, realize_tripartite, regular_tripartite, Budget,
    DegreeSequence, TripartiteDegreeSequence,
};

fn tripartite(c: &mut Criterion) {
    let mut group = c.benchmark_group("realize_tripartite");
    for n in [8usize, 16, 32] {
        let d = random_tripartite(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| {
            b.iter(|| realize_tripartite(black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn general(c: &mut Criterion) {
    let mut group = c.benchmark_group("realize_hypergraph");
    group.sample_size(20);
    for n in [45usize, 60, 90] {
        let d = random_general(n, 1).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| {
            b.iter(|| realize_hypergraph(black_box(d)).unwrap())
        });
    }
    group.finish();
}

fn regular(c: &mut Criterion) {
    c.bench_function("regular_tripartite/32", |b| {
        b.iter(|| regular_tripartite(black_box(32), black_box(500)).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let row = DegreeSequence::new(vec![9, 27, 27, 27, 27, 27]).unwrap();
    let d = TripartiteDegreeSequence::symmetric(row);
    c.bench_function("oracle_tripartite/6", |b| {
        b.iter(|| oracle_tripartite(black_box(&d), Budget::default()))
    });
}

criterion_group!(benches, tripartite, general, regular, oracle);
criterion_main!(benches);
