//! Independent reference propagator: the generator written out as an
//! explicit superoperator on column-stacked states, exponentiated by
//! scaling and squaring.

use num_complex::Complex64 as C64;

use super::generator::hamiltonian;
use super::params::GeneratorParams;
use crate::error::{Error, Result};
use crate::hermitian::{consts, tensor_product, ComplexMatrix, DensityMatrix};

const SERIES_CUTOFF: f64 = 1e-18;
const MAX_TERMS: usize = 200;

/// Superoperator of the one-sided dephasing generator acting on vec(ρ)
/// (columns stacked), in absolute time. Uses vec(AXB) = (Bᵀ ⊗ A) vec(X).
pub fn superoperator(g: &GeneratorParams, dim: usize) -> Result<ComplexMatrix> {
    let (h, p) = match dim {
        2 => (hamiltonian(g), consts::proj_right()),
        4 => {
            let id = ComplexMatrix::identity(2);
            let h2 = consts::sigma_x().scale_real(g.omega0_2);
            let h = &tensor_product(&hamiltonian(g), &id)? + &tensor_product(&id, &h2)?;
            (h, tensor_product(&consts::proj_right(), &id)?)
        }
        d => return Err(Error::UnsupportedDimension(d)),
    };
    let id = ComplexMatrix::identity(dim);
    let minus_i = C64::new(0.0, -1.0);

    let left_h = tensor_product(&id, &h)?;
    let right_h = tensor_product(&h.transpose(), &id)?;
    let unitary = (&left_h - &right_h).scale(minus_i);

    let sandwich = tensor_product(&p.transpose(), &p)?;
    let left_p = tensor_product(&id, &p)?;
    let right_p = tensor_product(&p.transpose(), &id)?;
    let dissipator = sandwich.add_scaled(&(&left_p + &right_p), -0.5);

    Ok(unitary.add_scaled(&dissipator, g.gamma_d))
}

/// exp(A) by scaling and squaring with a truncated Taylor series.
pub fn expm(a: &ComplexMatrix) -> ComplexMatrix {
    let norm = a.inf_norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a.scale_real(0.5_f64.powi(squarings as i32));

    let n = a.dim();
    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..=MAX_TERMS {
        term = term.matmul(&scaled).scale_real(1.0 / k as f64);
        sum = &sum + &term;
        if term.frobenius_norm() <= SERIES_CUTOFF * sum.frobenius_norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    sum
}

/// State after absolute time `t`.
pub fn exact_evolution(
    state0: &DensityMatrix,
    g: &GeneratorParams,
    t: f64,
) -> Result<DensityMatrix> {
    g.validate()?;
    let dim = state0.dim();
    let propagator = expm(&superoperator(g, dim)?.scale_real(t));
    let out = ComplexMatrix::unvectorize(&propagator.apply(&state0.matrix().vectorize()))?;
    Ok(DensityMatrix::new_unchecked(out))
}

/// State at normalized time τ (absolute time τ/Ω0, or τ itself when Ω0 = 0).
pub fn evolve_exact_oracle(
    state0: &DensityMatrix,
    g: &GeneratorParams,
    tau: f64,
) -> Result<DensityMatrix> {
    exact_evolution(state0, g, tau * g.time_scale())
}
