use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ddqpc_core::channels::tomograph;
use ddqpc_core::dynamics::{evolve, expm, initial_state, superoperator};
use ddqpc_core::hermitian::{hermitian_eigen, tensor_product};
use ddqpc_core::{
    ComplexMatrix, DensityMatrix, GeneratorParams, InitialStateParams, TimeGrid, C64,
};

fn hermitian(dim: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let v = C64::new(
                ((i * 7 + j * 3) % 5) as f64 - 2.0,
                if i == j { 0.0 } else { (i + j) as f64 * 0.1 },
            );
            m[(i, j)] = v;
            m[(j, i)] = v.conj();
        }
    }
    m
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("hermitian_eigen");
    for dim in [2, 4, 8, 16] {
        let m = hermitian(dim);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &m, |b, m| {
            b.iter(|| hermitian_eigen(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn rk4(c: &mut Criterion) {
    let g = GeneratorParams::normalized(5.0, 0.0).unwrap();
    let grid = TimeGrid::new(1.0, 1e-3, 100).unwrap();
    let single = initial_state(&InitialStateParams::from_degrees(90.0, 0.0).unwrap());
    let pair = DensityMatrix::singlet();
    let mut group = c.benchmark_group("rk4_1000_steps");
    group.bench_function("single", |b| b.iter(|| evolve(black_box(&single), &g, &grid).unwrap()));
    group.bench_function("pair", |b| b.iter(|| evolve(black_box(&pair), &g, &grid).unwrap()));
    group.finish();
}

fn channels(c: &mut Criterion) {
    let g = GeneratorParams::normalized(20.0, 0.0).unwrap();
    c.bench_function("tomograph_tau1", |b| b.iter(|| tomograph(black_box(&g), 1.0, 1e-3).unwrap()));
}

fn propagator(c: &mut Criterion) {
    let g = GeneratorParams::normalized(5.0, 0.3).unwrap();
    let mut group = c.benchmark_group("expm_superoperator");
    for dim in [2, 4] {
        let l = superoperator(&g, dim).unwrap().scale_real(1.0);
        group.bench_with_input(BenchmarkId::from_parameter(dim * dim), &l, |b, l| {
            b.iter(|| expm(black_box(l)))
        });
    }
    group.finish();
    let a = hermitian(4);
    c.bench_function("tensor_product_4x4", |b| {
        b.iter(|| tensor_product(black_box(&a), &a).unwrap())
    });
}

criterion_group!(benches, eigensolver, rk4, channels, propagator);
criterion_main!(benches);
