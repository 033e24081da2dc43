//! Reduced evolution of the monitored double dot.

mod generator;
mod integrate;
mod oracle;
mod params;

use num_complex::Complex64 as C64;

use crate::hermitian::{ComplexMatrix, DensityMatrix};

pub use generator::{
    hamiltonian, lindblad_derivative, lindblad_derivative_operator_form, Generator,
};
pub use integrate::{evolve, evolve_pair_one_sided, evolve_single, evolve_to, scan, PURITY_TOL};
pub use oracle::{evolve_exact_oracle, exact_evolution, expm, superoperator};
pub use params::{
    DetectorParams, GeneratorParams, InitialStateParams, TimeGrid, Trajectory, MAX_DT, MAX_STEPS,
};

/// Pure single-dot state with σ11 = cos²(θ/2), σ12 = sin(θ/2)cos(θ/2)e^{−iφ}.
pub fn initial_state(p: &InitialStateParams) -> DensityMatrix {
    let (s, c) = (0.5 * p.theta).sin_cos();
    let s12 = C64::from_polar(s * c, -p.phi);
    let mat =
        ComplexMatrix::from_rows([[C64::new(c * c, 0.0), s12], [s12.conj(), C64::new(s * s, 0.0)]]);
    DensityMatrix::new_unchecked(mat)
}
