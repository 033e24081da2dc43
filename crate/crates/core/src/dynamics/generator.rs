//! Dephasing master equation of a double dot watched by a point contact.
//!
//! dσ/dt = −i[H, σ] + Γd (PσP − ½{P, σ}),  P = |R⟩⟨R|,
//! H = E1|L⟩⟨L| + E2|R⟩⟨R| + Ω0(|L⟩⟨R| + |R⟩⟨L|),  ε = E2 − E1.
//!
//! For a pair only DD₁ is monitored: H ⊗ I + I ⊗ H₂ and P ⊗ I, with H₂ the
//! optional tunnelling term of DD₂.

use num_complex::Complex64 as C64;

use super::params::GeneratorParams;
use crate::error::{Error, Result};
use crate::hermitian::{consts, tensor_product, ComplexMatrix};

const I: C64 = C64::new(0.0, 1.0);

/// Single-dot Hamiltonian with the energy zero at the mean level.
pub fn hamiltonian(g: &GeneratorParams) -> ComplexMatrix {
    let mut h = consts::sigma_x().scale_real(g.omega0);
    h[(0, 0)] = C64::new(-0.5 * g.epsilon, 0.0);
    h[(1, 1)] = C64::new(0.5 * g.epsilon, 0.0);
    h
}

/// Explicit Bloch equations for a 2×2 state, in absolute time:
///
/// dσ11/dt = iΩ0(σ12 − σ21), dσ12/dt = iεσ12 + iΩ0(σ11 − σ22) − (Γd/2)σ12.
pub fn lindblad_derivative(sigma: &ComplexMatrix, g: &GeneratorParams) -> ComplexMatrix {
    assert_eq!(sigma.dim(), 2, "single-dot derivative needs a 2x2 state");
    let s11 = sigma[(0, 0)];
    let s22 = sigma[(1, 1)];
    let s12 = sigma[(0, 1)];
    let s21 = sigma[(1, 0)];

    let d11 = I * g.omega0 * (s12 - s21);
    let d12 = I * g.epsilon * s12 + I * g.omega0 * (s11 - s22) - s12 * (0.5 * g.gamma_d);
    let d21 = -I * g.epsilon * s21 - I * g.omega0 * (s11 - s22) - s21 * (0.5 * g.gamma_d);

    ComplexMatrix::from_rows([[d11, d12], [d21, -d11]])
}

/// Lindblad generator in commutator form, for 2×2 or 4×4 states.
#[derive(Debug, Clone)]
pub struct Generator {
    hamiltonian: ComplexMatrix,
    projector: ComplexMatrix,
    gamma_d: f64,
}

impl Generator {
    pub fn new(g: &GeneratorParams, dim: usize) -> Result<Self> {
        let h = hamiltonian(g);
        let p = consts::proj_right();
        match dim {
            2 => Ok(Self { hamiltonian: h, projector: p, gamma_d: g.gamma_d }),
            4 => {
                let id = ComplexMatrix::identity(2);
                let h2 = consts::sigma_x().scale_real(g.omega0_2);
                let hamiltonian = &tensor_product(&h, &id)? + &tensor_product(&id, &h2)?;
                let projector = tensor_product(&p, &id)?;
                Ok(Self { hamiltonian, projector, gamma_d: g.gamma_d })
            }
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }

    pub fn hamiltonian(&self) -> &ComplexMatrix {
        &self.hamiltonian
    }

    /// Collapse projector P (or P ⊗ I for a pair).
    pub fn projector(&self) -> &ComplexMatrix {
        &self.projector
    }

    pub fn gamma_d(&self) -> f64 {
        self.gamma_d
    }

    /// dρ/dt in absolute time.
    pub fn derivative(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let p = &self.projector;
        let pr = p.matmul(rho);
        let rp = rho.matmul(p);
        let prp = pr.matmul(p);
        let unitary = self.hamiltonian.commutator(rho).scale(-I);
        let dissipator = prp.add_scaled(&(&pr + &rp), -0.5);
        unitary.add_scaled(&dissipator, self.gamma_d)
    }
}

/// Operator-form derivative for either dimension; agrees with
/// [`lindblad_derivative`] on 2×2 states.
pub fn lindblad_derivative_operator_form(
    rho: &ComplexMatrix,
    g: &GeneratorParams,
) -> Result<ComplexMatrix> {
    Ok(Generator::new(g, rho.dim())?.derivative(rho))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(omega0: f64, epsilon: f64, gamma_d: f64) -> GeneratorParams {
        GeneratorParams::new(omega0, epsilon, gamma_d).unwrap()
    }

    #[test]
    fn left_dot_plug_in() {
        let sigma = ComplexMatrix::diag(&[1.0, 0.0]);
        let d = lindblad_derivative(&sigma, &g(1.7, 0.3, 4.0));
        assert_eq!(d[(0, 0)], C64::new(0.0, 0.0));
        assert!((d[(0, 1)] - I * 1.7).norm() < 1e-15);
    }

    #[test]
    fn sigma_x_eigenstate_is_stationary_without_dephasing() {
        // ½(I + σx) commutes with H = Ω0σx at ε = 0.
        let sigma = (&ComplexMatrix::identity(2) + &consts::sigma_x()).scale_real(0.5);
        let d = lindblad_derivative(&sigma, &g(1.0, 0.0, 0.0));
        assert!(d.frobenius_norm() < 1e-15);
    }

    #[test]
    fn diagnostic_coherence_decay_rate() {
        let sigma = ComplexMatrix::from_real_rows([[0.5, 0.5], [0.5, 0.5]]);
        let (eps, gd) = (0.8, 3.0);
        let d = lindblad_derivative(&sigma, &GeneratorParams::diagnostic(eps, gd).unwrap());
        let want = (I * eps - gd / 2.0) * 0.5;
        assert!((d[(0, 1)] - want).norm() < 1e-15);
    }

    #[test]
    fn bloch_and_operator_forms_agree() {
        let sigma = ComplexMatrix::from_rows([
            [C64::new(0.3, 0.0), C64::new(0.1, -0.2)],
            [C64::new(0.1, 0.2), C64::new(0.7, 0.0)],
        ]);
        let params = g(1.3, -0.4, 2.2);
        let a = lindblad_derivative(&sigma, &params);
        let b = lindblad_derivative_operator_form(&sigma, &params).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-14);
    }

    #[test]
    fn maximally_mixed_pair_is_fixed_point() {
        let rho = ComplexMatrix::identity(4).scale_real(0.25);
        let d = lindblad_derivative_operator_form(&rho, &g(1.0, 0.0, 20.0)).unwrap();
        assert!(d.frobenius_norm() < 1e-15);
    }
}
