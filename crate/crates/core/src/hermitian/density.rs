use num_complex::Complex64 as C64;

use super::eigen::hermitian_eigenvalues;
use super::matrix::{partial_trace_matrix, tensor_product, ComplexMatrix, Subsystem};
use crate::error::{Error, Result};

pub const HERMITICITY_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-10;
/// Smallest eigenvalue tolerated in a stored state.
pub const PSD_TOL: f64 = -1e-9;

/// A Hermitian, positive semidefinite, unit-trace matrix of dimension 2
/// (one double dot) or 4 (a pair, DD₁ as the slow index).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates `mat` against the density-matrix invariants.
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if mat.dim() != 2 && mat.dim() != 4 {
            return Err(Error::InvalidState(format!(
                "density matrices must have dimension 2 or 4, got {}",
                mat.dim()
            )));
        }
        let herm = mat.hermiticity_deviation();
        if herm > HERMITICITY_TOL {
            return Err(Error::InvalidState(format!(
                "hermiticity deviation {herm:e} exceeds {HERMITICITY_TOL:e}"
            )));
        }
        let tr = mat.trace();
        if (tr - 1.0).norm() > TRACE_TOL {
            return Err(Error::InvalidState(format!(
                "trace {tr} differs from 1 by more than {TRACE_TOL:e}"
            )));
        }
        let min_ev = hermitian_eigenvalues(&mat)?[0];
        if min_ev < PSD_TOL {
            return Err(Error::InvalidState(format!(
                "minimum eigenvalue {min_ev:e} below {PSD_TOL:e}"
            )));
        }
        Ok(Self { mat })
    }

    /// Wraps a matrix the caller has already validated.
    pub(crate) fn new_unchecked(mat: ComplexMatrix) -> Self {
        Self { mat }
    }

    /// |ψ⟩⟨ψ| after normalizing ψ.
    pub fn pure(ket: &[C64]) -> Result<Self> {
        let norm = ket.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidState("zero ket".into()));
        }
        let ket: Vec<C64> = ket.iter().map(|z| z / norm).collect();
        Self::new(ComplexMatrix::outer(&ket))
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        Self::new(ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64))
    }

    /// (|LR⟩ − |RL⟩)(⟨LR| − ⟨RL|)/2.
    pub fn singlet() -> Self {
        Self::new_unchecked(ComplexMatrix::outer(&super::matrix::consts::singlet_ket()))
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn purity(&self) -> f64 {
        self.mat.matmul(&self.mat).trace().re
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(hermitian_eigenvalues(&self.mat)?[0])
    }

    /// ρ_a ⊗ ρ_b.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.dim() * other.dim() != 4 {
            return Err(Error::UnsupportedDimension(self.dim() * other.dim()));
        }
        Ok(Self::new_unchecked(tensor_product(&self.mat, &other.mat)?))
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.mat
    }
}

/// Reduced state of one double dot from a pair state.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Result<DensityMatrix> {
    Ok(DensityMatrix::new_unchecked(partial_trace_matrix(rho.matrix(), keep)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singlet_reduces_to_maximally_mixed() {
        let r = partial_trace(&DensityMatrix::singlet(), Subsystem::First).unwrap();
        assert!(r.matrix().max_abs_diff(&ComplexMatrix::diag(&[0.5, 0.5])) < 1e-15);
    }

    #[test]
    fn product_state_reduction() {
        let l = DensityMatrix::new(ComplexMatrix::diag(&[1.0, 0.0])).unwrap();
        let r = DensityMatrix::new(ComplexMatrix::diag(&[0.0, 1.0])).unwrap();
        let lr = l.tensor(&r).unwrap();
        let kept = partial_trace(&lr, Subsystem::Second).unwrap();
        assert_eq!(kept.matrix(), r.matrix());
    }

    #[test]
    fn rejects_invalid_matrices() {
        assert!(DensityMatrix::new(ComplexMatrix::diag(&[0.6, 0.6])).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::diag(&[1.1, -0.1])).is_err());
        let mut m = ComplexMatrix::diag(&[0.5, 0.5]);
        m[(0, 1)] = C64::new(0.1, 0.0);
        assert!(DensityMatrix::new(m).is_err());
        assert!(DensityMatrix::new(ComplexMatrix::identity(3).scale_real(1.0 / 3.0)).is_err());
    }

    #[test]
    fn tolerates_tiny_negative_eigenvalue() {
        let rho = DensityMatrix::new(ComplexMatrix::diag(&[1.0 + 5e-10, -5e-10]));
        assert!(rho.is_ok());
    }
}
