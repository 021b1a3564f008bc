//! Benchmarks for the hot paths: sparse convolution, coset-representative
//! enumeration, cyclotomic reduction, idempotent construction, and the
//! class-function map.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use hyperoct::algebra::{
    composition_idempotent, eigen_element, min_coset_reps, partition_idempotent,
};
use hyperoct::characters::Theta;
use hyperoct::compositions::signed_partitions;
use hyperoct::scalars::{ratio, root_of_unity, Cyclotomic};
use std::hint::black_box;

fn convolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("convolution");
    group.sample_size(20);
    for n in [3usize, 4] {
        let lambdas = signed_partitions(n).unwrap();
        let idems: Vec<_> = lambdas
            .iter()
            .map(|l| partition_idempotent(l).unwrap())
            .collect();
        group.bench_function(format!("partition_idempotent_products_n{n}"), |b| {
            b.iter(|| {
                let mut count = 0usize;
                for e in &idems {
                    for f in &idems {
                        if !e.mul(f).is_zero() {
                            count += 1;
                        }
                    }
                }
                black_box(count)
            })
        });
    }
    group.finish();
}

fn coset_reps(c: &mut Criterion) {
    let mut group = c.benchmark_group("coset_reps");
    group.sample_size(20);
    let p: hyperoct::SignedComposition = "1,-2,1".parse().unwrap();
    group.bench_function("signed_coset_partition_n4", |b| {
        b.iter(|| black_box(min_coset_reps(&p).unwrap().len()))
    });
    group.finish();
}

fn cyclotomic_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclotomic");
    let x = root_of_unity(24, 7)
        .scale(&ratio(3, 5))
        .add(&root_of_unity(24, 11));
    let y = root_of_unity(24, 13).add(&Cyclotomic::from_integer(-2));
    group.bench_function("mul_conductor_24", |b| {
        b.iter(|| black_box(x.mul(&y)))
    });
    let a = root_of_unity(120, 77).add(&root_of_unity(120, 31).scale(&ratio(-1, 7)));
    group.bench_function("mul_conductor_120", |b| {
        b.iter(|| black_box(a.mul(&a)))
    });
    group.finish();
}

fn idempotent_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("idempotents");
    group.sample_size(20);
    let p: hyperoct::SignedComposition = "2,-2".parse().unwrap();
    group.bench_function("composition_idempotent_n4", |b| {
        b.iter(|| black_box(composition_idempotent(&p).unwrap().support_len()))
    });
    let lambda: hyperoct::SignedPartition = "2,-2".parse().unwrap();
    group.bench_function("eigen_element_n4", |b| {
        b.iter(|| black_box(eigen_element(&lambda).unwrap().support_len()))
    });
    group.finish();
}

fn theta_map(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta");
    group.sample_size(10);
    group.bench_function("build_n3", |b| {
        b.iter(|| black_box(Theta::new(3).unwrap().rank()))
    });
    let theta = Theta::new(3).unwrap();
    let e = composition_idempotent(&"1,-2".parse().unwrap()).unwrap();
    group.bench_function("apply_to_quasi_idempotent_n3", |b| {
        b.iter_batched(
            || e.clone(),
            |e| black_box(theta.apply(&e).unwrap()),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

criterion_group!(
    benches,
    convolution,
    coset_reps,
    cyclotomic_mul,
    idempotent_construction,
    theta_map
);
criterion_main!(benches);
