//! Dense complex matrix kernel for 2×2, 4×4 and 16×16 operators.
//!
//! Basis ordering is fixed crate-wide: one double dot uses {|L⟩, |R⟩}; a
//! pair uses {LL, LR, RL, RR} with DD₁ as the left (slow) index.

mod density;
mod eigen;
mod matrix;

pub use density::{partial_trace, DensityMatrix, HERMITICITY_TOL, PSD_TOL, TRACE_TOL};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use matrix::{
    consts, frobenius_distance, partial_trace_matrix, tensor_product, ComplexMatrix, Subsystem,
    MAX_DIM,
};
