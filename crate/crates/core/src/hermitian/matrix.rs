use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Largest supported matrix dimension (two-qubit superoperators).
pub const MAX_DIM: usize = 16;

/// Dense, row-major square complex matrix.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from row-major entries. The entry count must be a
    /// perfect square no larger than `MAX_DIM²`.
    pub fn from_vec(data: Vec<C64>) -> Result<Self> {
        let dim = (data.len() as f64).sqrt().round() as usize;
        if dim == 0 || dim * dim != data.len() {
            return Err(Error::InvalidArgument(format!(
                "{} entries do not form a square matrix",
                data.len()
            )));
        }
        if dim > MAX_DIM {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        assert!(N > 0 && N <= MAX_DIM, "unsupported dimension {N}");
        Self { dim: N, data: rows.iter().flatten().copied().collect() }
    }

    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        assert!(N > 0 && N <= MAX_DIM, "unsupported dimension {N}");
        Self { dim: N, data: rows.iter().flatten().map(|&x| C64::new(x, 0.0)).collect() }
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = C64::new(v, 0.0);
        }
        m
    }

    /// |ψ⟩⟨ψ| for an unnormalized ket.
    pub fn outer(ket: &[C64]) -> Self {
        let dim = ket.len();
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = ket[i] * ket[j].conj();
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    #[inline]
    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * factor).collect() }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|z| z * factor).collect() }
    }

    /// `self + factor * other`, the axpy update used by the integrators.
    pub fn add_scaled(&self, other: &Self, factor: f64) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// [A, B] = AB − BA.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    /// {A, B} = AB + BA.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.matmul(other) + &other.matmul(self)
    }

    /// (M + M†)/2.
    pub fn hermitian_part(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
            }
        }
        out
    }

    /// max |M[i,j] − conj(M[j,i])|.
    pub fn hermiticity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Stacks the columns into a vector of length dim².
    pub fn vectorize(&self) -> Vec<C64> {
        let n = self.dim;
        let mut v = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                v.push(self[(i, j)]);
            }
        }
        v
    }

    /// Inverse of [`vectorize`](Self::vectorize).
    pub fn unvectorize(v: &[C64]) -> Result<Self> {
        let dim = (v.len() as f64).sqrt().round() as usize;
        if dim * dim != v.len() || dim == 0 {
            return Err(Error::InvalidArgument(format!(
                "vector of length {} is not a stacked square matrix",
                v.len()
            )));
        }
        let mut m = Self::zeros(dim);
        for j in 0..dim {
            for i in 0..dim {
                m[(i, j)] = v[j * dim + i];
            }
        }
        Ok(m)
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        let n = self.dim;
        assert_eq!(v.len(), n, "dimension mismatch");
        (0..n).map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum()).collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.add_scaled(rhs, 1.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.add_scaled(rhs, -1.0)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product: (A⊗B)[i·db+k, j·db+l] = A[i,j]·B[k,l].
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    if dim > MAX_DIM {
        return Err(Error::UnsupportedDimension(dim));
    }
    let mut out = ComplexMatrix::zeros(dim);
    for i in 0..da {
        for j in 0..da {
            let aij = a[(i, j)];
            for k in 0..db {
                for l in 0..db {
                    out[(i * db + k, j * db + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// Which half of a two-qubit (4×4) operator to keep in a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    /// DD₁, the slow (left) tensor index.
    First,
    /// DD₂, the fast (right) tensor index.
    Second,
}

/// Partial trace of a 4×4 operator down to the kept qubit.
pub fn partial_trace_matrix(m: &ComplexMatrix, keep: Subsystem) -> Result<ComplexMatrix> {
    if m.dim() != 4 {
        return Err(Error::DimensionMismatch { left: m.dim(), right: 4 });
    }
    let mut out = ComplexMatrix::zeros(2);
    for a in 0..2 {
        for b in 0..2 {
            out[(a, b)] = (0..2)
                .map(|s| match keep {
                    Subsystem::First => m[(2 * a + s, 2 * b + s)],
                    Subsystem::Second => m[(2 * s + a, 2 * s + b)],
                })
                .sum();
        }
    }
    Ok(out)
}

/// sqrt(Σ |a_ij − b_ij|²).
pub fn frobenius_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok((a - b).frobenius_norm())
}

/// Pauli matrices and the single-DD projectors in the {|L⟩, |R⟩} basis.
pub mod consts {
    use super::ComplexMatrix;
    use num_complex::Complex64 as C64;

    const O: C64 = C64::new(0.0, 0.0);
    const I: C64 = C64::new(0.0, 1.0);
    const ONE: C64 = C64::new(1.0, 0.0);

    pub fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_rows([[O, ONE], [ONE, O]])
    }

    pub fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::from_rows([[O, -I], [I, O]])
    }

    pub fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_rows([[ONE, O], [O, -ONE]])
    }

    /// |L⟩⟨L|.
    pub fn proj_left() -> ComplexMatrix {
        ComplexMatrix::diag(&[1.0, 0.0])
    }

    /// |R⟩⟨R|.
    pub fn proj_right() -> ComplexMatrix {
        ComplexMatrix::diag(&[0.0, 1.0])
    }

    /// The singlet (|LR⟩ − |RL⟩)/√2 as a ket in the {LL, LR, RL, RR} basis.
    pub fn singlet_ket() -> [C64; 4] {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        [O, C64::new(h, 0.0), C64::new(-h, 0.0), O]
    }
}
