//! Process tomography of the detector-induced single-dot channel and its
//! Choi and Kraus representations.
//!
//! Choi convention: J(Λ) = Σ_kl |k⟩⟨l| ⊗ Λ(|k⟩⟨l|), input index slow, so
//! `J[(2k + i, 2l + j)] = Λ(|k⟩⟨l|)[i, j]` and Tr J = 2.

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::dynamics::{evolve_single, evolve_to, GeneratorParams, TimeGrid};
use crate::error::{Error, Result};
use crate::hermitian::{
    hermitian_eigen, hermitian_eigenvalues, partial_trace_matrix, ComplexMatrix, DensityMatrix,
    Subsystem,
};

pub const HERMITICITY_TOL: f64 = 1e-8;
pub const TRACE_TOL: f64 = 1e-8;
pub const CP_TOL: f64 = -1e-8;
pub const TP_TOL: f64 = 1e-6;
/// Choi eigenvalues at or below this are treated as numerical zero rank.
pub const KRAUS_RANK_CUTOFF: f64 = 1e-10;

/// Choi matrix of a single-qubit channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    mat: ComplexMatrix,
}

impl ChoiMatrix {
    pub fn from_matrix(mat: ComplexMatrix) -> Result<Self> {
        if mat.dim() != 4 {
            return Err(Error::DimensionMismatch { left: mat.dim(), right: 4 });
        }
        Ok(Self { mat })
    }

    /// J of the identity channel: Σ_kl |k⟩⟨l| ⊗ |k⟩⟨l|.
    pub fn identity() -> Self {
        let mut images = [
            [ComplexMatrix::zeros(2), ComplexMatrix::zeros(2)],
            [ComplexMatrix::zeros(2), ComplexMatrix::zeros(2)],
        ];
        for (k, row) in images.iter_mut().enumerate() {
            for (l, img) in row.iter_mut().enumerate() {
                img[(k, l)] = C64::new(1.0, 0.0);
            }
        }
        Self::from_unit_images(&images)
    }

    /// Assembles J from the images Λ(|k⟩⟨l|).
    pub fn from_unit_images(images: &[[ComplexMatrix; 2]; 2]) -> Self {
        let mut mat = ComplexMatrix::zeros(4);
        for k in 0..2 {
            for l in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        mat[(2 * k + i, 2 * l + j)] = images[k][l][(i, j)];
                    }
                }
            }
        }
        Self { mat }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    /// Λ(σ)[i, j] = Σ_kl σ[k, l] J[(k, i), (l, j)].
    pub fn apply(&self, sigma: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(sigma.dim(), 2, "single-qubit channel needs a 2x2 input");
        let mut out = ComplexMatrix::zeros(2);
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..2 {
                    for l in 0..2 {
                        acc += sigma[(k, l)] * self.mat[(2 * k + i, 2 * l + j)];
                    }
                }
                out[(i, j)] = acc;
            }
        }
        out
    }
}

/// Operator-sum representation Λ(ρ) = Σ KᵢρKᵢ†.
#[derive(Debug, Clone)]
pub struct KrausSet {
    pub ops: Vec<ComplexMatrix>,
}

impl KrausSet {
    pub fn apply(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        self.ops.iter().fold(ComplexMatrix::zeros(rho.dim()), |acc, k| {
            &acc + &k.matmul(rho).matmul(&k.adjoint())
        })
    }

    /// max |Σ Kᵢ†Kᵢ − I|.
    pub fn completeness_deviation(&self) -> f64 {
        let sum =
            self.ops.iter().fold(ComplexMatrix::zeros(2), |acc, k| &acc + &k.adjoint().matmul(k));
        sum.max_abs_diff(&ComplexMatrix::identity(2))
    }
}

/// Diagnostics for complete positivity and trace preservation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptpReport {
    pub min_eigenvalue: f64,
    /// max |Tr_out J − I₂|.
    pub tp_deviation: f64,
    /// max |J − J†|.
    pub hermiticity_deviation: f64,
}

impl CptpReport {
    /// Checks the report against the module tolerances.
    pub fn is_cptp(&self) -> bool {
        self.min_eigenvalue >= CP_TOL
            && self.tp_deviation <= TP_TOL
            && self.hermiticity_deviation <= HERMITICITY_TOL
    }
}

pub fn verify_cptp(j: &ChoiMatrix) -> Result<CptpReport> {
    let min_eigenvalue = hermitian_eigenvalues(j.matrix())?[0];
    let tp_deviation = partial_trace_matrix(j.matrix(), Subsystem::First)?
        .max_abs_diff(&ComplexMatrix::identity(2));
    Ok(CptpReport {
        min_eigenvalue,
        tp_deviation,
        hermiticity_deviation: j.matrix().hermiticity_deviation(),
    })
}

fn probe_states() -> Result<[DensityMatrix; 4]> {
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    Ok([
        DensityMatrix::pure(&[one, zero])?,
        DensityMatrix::pure(&[zero, one])?,
        DensityMatrix::pure(&[one, one])?,
        DensityMatrix::pure(&[one, C64::new(0.0, 1.0)])?,
    ])
}

/// Recovers Λ on the matrix units from the probe outputs
/// Λ(|L⟩⟨L|), Λ(|R⟩⟨R|), Λ(|+⟩⟨+|), Λ(|+i⟩⟨+i|).
fn choi_from_probe_outputs(out: [&ComplexMatrix; 4]) -> ChoiMatrix {
    let [ll, rr, plus, plus_i] = out;
    let half_1_plus_i = C64::new(0.5, 0.5);
    let lr = (plus + &plus_i.scale(C64::new(0.0, 1.0)))
        .add_scaled(&(ll + rr).scale(half_1_plus_i), -1.0);
    let rl = lr.adjoint();
    ChoiMatrix::from_unit_images(&[[ll.clone(), lr], [rl, rr.clone()]])
}

/// Choi matrix of the channel σ(0) ↦ σ(τ) from four probe integrations.
pub fn tomograph(g: &GeneratorParams, tau: f64, grid_dt: f64) -> Result<ChoiMatrix> {
    if tau.is_nan() || tau < 0.0 {
        return Err(Error::InvalidArgument(format!("tau = {tau} must be >= 0")));
    }
    let outputs: Vec<DensityMatrix> =
        probe_states()?.par_iter().map(|p| evolve_to(p, g, tau, grid_dt)).collect::<Result<_>>()?;
    let m: Vec<&ComplexMatrix> = outputs.iter().map(DensityMatrix::matrix).collect();
    Ok(choi_from_probe_outputs([m[0], m[1], m[2], m[3]]))
}

/// Choi matrices at every recorded τ of `grid`, sharing one integration
/// per probe.
pub fn tomograph_series(g: &GeneratorParams, grid: &TimeGrid) -> Result<Vec<(f64, ChoiMatrix)>> {
    let trajectories = probe_states()?
        .par_iter()
        .map(|p| evolve_single(p, g, grid))
        .collect::<Result<Vec<_>>>()?;
    let taus = trajectories[0].taus.clone();
    Ok(taus
        .iter()
        .enumerate()
        .map(|(s, &tau)| {
            let m = [0, 1, 2, 3].map(|p| trajectories[p].states[s].matrix());
            (tau, choi_from_probe_outputs(m))
        })
        .collect())
}

/// Kraus operators from the eigendecomposition of J:
/// K[i, k] = √μ · v[2k + i] for each eigenpair with μ above the cutoff.
pub fn choi_to_kraus(j: &ChoiMatrix) -> Result<KrausSet> {
    let eig = hermitian_eigen(j.matrix())?;
    if eig.values[0] < CP_TOL {
        return Err(Error::NotCompletelyPositive { min_eigenvalue: eig.values[0] });
    }
    let mut ops = Vec::new();
    for (idx, &mu) in eig.values.iter().enumerate().rev() {
        if mu <= KRAUS_RANK_CUTOFF {
            continue;
        }
        let v = eig.vector(idx);
        let scale = mu.sqrt();
        let mut k = ComplexMatrix::zeros(2);
        for i in 0..2 {
            for col in 0..2 {
                k[(i, col)] = v[2 * col + i] * scale;
            }
        }
        ops.push(k);
    }
    Ok(KrausSet { ops })
}

/// (Λ ⊗ I)(ρ) by contracting J with DD₁'s indices of ρ.
pub fn apply_one_sided(j: &ChoiMatrix, rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { left: rho.dim(), right: 4 });
    }
    let jm = j.matrix();
    let r = rho.matrix();
    let mut out = ComplexMatrix::zeros(4);
    for i in 0..2 {
        for m in 0..2 {
            for jj in 0..2 {
                for n in 0..2 {
                    let mut acc = C64::new(0.0, 0.0);
                    for k in 0..2 {
                        for l in 0..2 {
                            acc += jm[(2 * k + i, 2 * l + jj)] * r[(2 * k + m, 2 * l + n)];
                        }
                    }
                    out[(2 * i + m, 2 * jj + n)] = acc;
                }
            }
        }
    }
    DensityMatrix::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_choi_diagnostics() {
        let j = ChoiMatrix::identity();
        assert_eq!(j.matrix().trace(), C64::new(2.0, 0.0));
        let r = verify_cptp(&j).unwrap();
        assert!(r.min_eigenvalue.abs() < 1e-12);
        assert!(r.tp_deviation < 1e-12 && r.hermiticity_deviation < 1e-12);
        assert!(r.is_cptp());
    }

    #[test]
    fn zero_time_tomograph_is_identity() {
        let g = GeneratorParams::normalized(20.0, 0.0).unwrap();
        let j = tomograph(&g, 0.0, 1e-3).unwrap();
        assert!(j.matrix().max_abs_diff(ChoiMatrix::identity().matrix()) < 1e-14);
        let ev = hermitian_eigenvalues(j.matrix()).unwrap();
        assert!((ev[3] - 2.0).abs() < 1e-12 && ev[2].abs() < 1e-12);
    }

    #[test]
    fn identity_kraus_is_single_unitary() {
        let k = choi_to_kraus(&ChoiMatrix::identity()).unwrap();
        assert_eq!(k.ops.len(), 1);
        // I₂ up to a global phase.
        let phase = k.ops[0][(0, 0)];
        assert!((phase.norm() - 1.0).abs() < 1e-12);
        let normalized = k.ops[0].scale(phase.conj());
        assert!(normalized.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
    }

    #[test]
    fn identity_choi_leaves_pair_unchanged() {
        let rho = DensityMatrix::singlet();
        let out = apply_one_sided(&ChoiMatrix::identity(), &rho).unwrap();
        assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-12);
    }

    #[test]
    fn planted_hermiticity_defect() {
        let mut m = ChoiMatrix::identity().matrix().clone();
        m[(0, 1)] += C64::new(0.1, 0.0);
        let r = verify_cptp(&ChoiMatrix::from_matrix(m).unwrap()).unwrap();
        assert!(r.hermiticity_deviation >= 0.1);
        assert!(!r.is_cptp());
    }

    #[test]
    fn rejects_non_cp_choi() {
        let mut m = ChoiMatrix::identity().matrix().clone();
        m[(1, 1)] = C64::new(-0.5, 0.0);
        let j = ChoiMatrix::from_matrix(m).unwrap();
        assert!(matches!(choi_to_kraus(&j), Err(Error::NotCompletelyPositive { .. })));
    }
}
