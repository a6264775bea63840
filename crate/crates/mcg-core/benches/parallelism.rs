//! Relation-suite and membership throughput, parallel vs sequential.

use criterion::{criterion_group, criterion_main, Criterion};
use mcg_core::ext::{membership_with, relation_suite_with};
use mcg_core::gens::GeneratorTable;
use mcg_core::par::Mode;
use mcg_core::Signature;

fn bench_relation_suite(c: &mut Criterion) {
    let sig = Signature::new(2, 2).unwrap();
    let table = GeneratorTable::new(&sig);
    let mut group = c.benchmark_group("relation_suite_2_2");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| relation_suite_with(&table, Mode::Sequential))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| relation_suite_with(&table, Mode::Parallel))
    });
    group.finish();
}

fn bench_membership(c: &mut Criterion) {
    let sig = Signature::new(1, 2).unwrap();
    let table = GeneratorTable::new(&sig);
    let query = table.parse_class("xi_1_2 s_2_2 tau_1^-1").unwrap();
    let mut group = c.benchmark_group("membership_1_2");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| membership_with(&table, &query, 3, true, Mode::Sequential).unwrap())
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| membership_with(&table, &query, 3, true, Mode::Parallel).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_relation_suite, bench_membership);
criterion_main!(benches);
