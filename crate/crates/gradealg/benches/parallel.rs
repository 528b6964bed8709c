//! Parallel-versus-sequential comparison for the data-parallel kernels.
//!
//! Run with `cargo bench -p gradealg`. Each group benches the sequential
//! reference implementation against the feature-dispatched entry point (rayon
//! under the default `parallel` feature).

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use gradealg::grassmann::{self, Blade};
use gradealg::identities;
use gradealg::regularity::{is_k_regular, TupleSelection};

fn random_blade_pairs(n: usize, count: usize) -> Vec<(Blade, Blade)> {
    // splitmix64; fixed seed for reproducible inputs
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..count)
        .map(|_| (Blade(next() & mask), Blade(next() & mask)))
        .collect()
}

fn bench_blade_products(c: &mut Criterion) {
    let pairs = random_blade_pairs(40, 1_000_000);
    let mut group = c.benchmark_group("blade_products_1e6_e40");
    group.bench_function("seq", |b| {
        b.iter(|| grassmann::blade_product_batch_seq(black_box(&pairs)))
    });
    group.bench_function("dispatched", |b| {
        b.iter(|| grassmann::blade_product_batch(black_box(&pairs)))
    });
    group.finish();
}

fn bench_identity_scan(c: &mut Criterion) {
    let e6 = grassmann::materialize(6).unwrap();
    let [_, _, odd_odd] = identities::grassmann_t_ideal_generators();
    let mut group = c.benchmark_group("identity_scan_anticommutator_e6");
    group.sample_size(20);
    group.bench_function("seq", |b| {
        b.iter(|| identities::is_graded_identity_seq(black_box(&e6), black_box(&odd_odd)).unwrap())
    });
    group.bench_function("dispatched", |b| {
        b.iter(|| identities::is_graded_identity(black_box(&e6), black_box(&odd_odd)).unwrap())
    });
    group.finish();
}

fn bench_validate(c: &mut Criterion) {
    let e7 = grassmann::materialize(7).unwrap();
    let mut group = c.benchmark_group("validate_e7");
    group.sample_size(10);
    group.bench_function("seq", |b| b.iter(|| black_box(&e7).validate_seq()));
    group.bench_function("dispatched", |b| b.iter(|| black_box(&e7).validate()));
    group.finish();
}

fn bench_regularity_scan(c: &mut Criterion) {
    let e5 = grassmann::materialize(5).unwrap();
    let selection = TupleSelection::AllUpTo(6);
    let mut group = c.benchmark_group("regularity_all_tuples_to_6_e5");
    group.sample_size(20);
    group.bench_function("dispatched", |b| {
        b.iter(|| is_k_regular(black_box(&e5), black_box(&selection)))
    });
    group.finish();
}

criterion_group!(
    kernels,
    bench_blade_products,
    bench_identity_scan,
    bench_validate,
    bench_regularity_scan
);
criterion_main!(kernels);
