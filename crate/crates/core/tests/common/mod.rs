#![allow(dead_code)]

use ddqpc_core::dynamics::expm;
use ddqpc_core::{ComplexMatrix, DensityMatrix, C64};
use proptest::prelude::*;

/// `2·n²` reals in [−1, 1].
pub fn reals(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0..1.0f64, 2 * n * n)
}

pub fn complex_matrix(n: usize, raw: &[f64]) -> ComplexMatrix {
    assert_eq!(raw.len(), 2 * n * n);
    let data = raw.chunks(2).map(|c| C64::new(c[0], c[1])).collect();
    ComplexMatrix::from_vec(data).unwrap()
}

pub fn hermitian(n: usize, raw: &[f64]) -> ComplexMatrix {
    complex_matrix(n, raw).hermitian_part()
}

/// A A† / Tr(A A†), full rank with probability one.
pub fn density(n: usize, raw: &[f64]) -> DensityMatrix {
    let a = complex_matrix(n, raw);
    let m = a.matmul(&a.adjoint());
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr)).unwrap()
}

pub fn pure_state(raw: &[f64]) -> DensityMatrix {
    let ket: Vec<C64> = raw.chunks(2).map(|c| C64::new(c[0], c[1])).collect();
    DensityMatrix::pure(&ket).unwrap()
}

/// exp(−iH) for a random Hermitian H.
pub fn unitary(n: usize, raw: &[f64]) -> ComplexMatrix {
    expm(&hermitian(n, raw).scale(C64::new(0.0, -3.0)))
}

pub fn conjugate(u: &ComplexMatrix, m: &ComplexMatrix) -> ComplexMatrix {
    u.matmul(m).matmul(&u.adjoint())
}
