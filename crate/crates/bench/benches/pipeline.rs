use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use gc_fibers::{
    eigenvalues, enumerate_faces, fiber_descriptor, random_conjugate, verify_face, LambdaSpec,
};
use gc_fibers_bench::{diagram, faces, middle_face, SPECTRA};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_faces");
    for (name, lambda) in SPECTRA {
        let d = diagram(lambda);
        group.bench_with_input(BenchmarkId::from_parameter(name), &d, |b, d| {
            b.iter(|| enumerate_faces(black_box(d)).unwrap().len())
        });
    }
    group.finish();
}

fn descriptors(c: &mut Criterion) {
    let mut group = c.benchmark_group("fiber_descriptor_all_faces");
    for (name, lambda) in SPECTRA {
        let all = faces(lambda);
        group.bench_with_input(BenchmarkId::from_parameter(name), &all, |b, all| {
            b.iter(|| {
                all.iter()
                    .map(|f| fiber_descriptor(black_box(f)).total_dim)
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_face_10_samples");
    group.sample_size(20);
    for (name, lambda) in SPECTRA {
        let face = middle_face(lambda);
        group.bench_with_input(BenchmarkId::from_parameter(name), &face, |b, face| {
            b.iter(|| verify_face(black_box(face), 10, 1, 1e-8).unwrap().passed)
        });
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi_eigenvalues");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [3usize, 6, 10] {
        let lambda: Vec<String> = (0..n).rev().map(|i| i.to_string()).collect();
        let spec: LambdaSpec = lambda.join(",").parse().unwrap();
        let m = random_conjugate(&spec, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| eigenvalues(black_box(m)))
        });
    }
    group.finish();
}

criterion_group!(benches, enumerate, descriptors, verify, jacobi);
criterion_main!(benches);
