//! Entanglement and mixedness measures. Entropies are in bits.

use crate::dynamics::Trajectory;
use crate::error::{Error, Result};
use crate::hermitian::{
    consts, hermitian_eigen, hermitian_eigenvalues, tensor_product, ComplexMatrix, DensityMatrix,
    PSD_TOL,
};

/// Entropy samples on an ascending τ grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropySeries {
    pub taus: Vec<f64>,
    pub values: Vec<f64>,
}

/// dS/dτ samples, one per entropy sample.
#[derive(Debug, Clone, PartialEq)]
pub struct RateSeries {
    pub taus: Vec<f64>,
    pub values: Vec<f64>,
}

/// Eigenvalues with drift-level negatives clipped and the trace restored.
fn clipped_spectrum(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let mut ev = hermitian_eigenvalues(m)?;
    if ev[0] < PSD_TOL {
        return Err(Error::NumericalFailure(format!(
            "eigenvalue {:e} below positivity tolerance {PSD_TOL:e}",
            ev[0]
        )));
    }
    for x in ev.iter_mut() {
        *x = x.max(0.0);
    }
    let total: f64 = ev.iter().sum();
    Ok(ev.into_iter().map(|x| x / total).collect())
}

fn shannon_bits(p: impl IntoIterator<Item = f64>) -> f64 {
    p.into_iter().filter(|&x| x > 0.0).map(|x| -x * x.log2()).sum::<f64>() + 0.0
    // no −0 for pure states
}

/// S(ρ) = −Tr ρ log₂ ρ.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let ev = clipped_spectrum(rho.matrix())?;
    let max = (rho.dim() as f64).log2();
    Ok(shannon_bits(ev).clamp(0.0, max))
}

/// Pointwise entropy of every recorded state. For a globally pure
/// system+detector state this is the system–detector entanglement.
pub fn entanglement_entropy_series(traj: &Trajectory) -> Result<EntropySeries> {
    let values = traj.states.iter().map(von_neumann_entropy).collect::<Result<_>>()?;
    Ok(EntropySeries { taus: traj.taus.clone(), values })
}

/// Central differences inside, second-order one-sided differences at the
/// ends. The grid must be uniform.
pub fn entanglement_rate(s: &EntropySeries) -> Result<RateSeries> {
    let n = s.values.len();
    if n < 3 || s.taus.len() != n {
        return Err(Error::InvalidArgument(format!(
            "rate needs at least 3 aligned samples, got {} values and {} taus",
            n,
            s.taus.len()
        )));
    }
    let h = (s.taus[n - 1] - s.taus[0]) / (n - 1) as f64;
    let uniform =
        s.taus.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h.abs().max(1e-300));
    if !uniform || h <= 0.0 {
        return Err(Error::InvalidArgument("rate needs a uniform ascending τ grid".into()));
    }

    let v = &s.values;
    let mut out = Vec::with_capacity(n);
    out.push((-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h));
    for i in 1..n - 1 {
        out.push((v[i + 1] - v[i - 1]) / (2.0 * h));
    }
    out.push((3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h));
    Ok(RateSeries { taus: s.taus.clone(), values: out })
}

/// Wootters concurrence of a two-qubit state.
///
/// The λᵢ are the square roots of the eigenvalues of ρ·ρ̃ with
/// ρ̃ = (σy⊗σy)ρ*(σy⊗σy); they are obtained from the Hermitian matrix
/// √ρ ρ̃ √ρ, which has the same spectrum.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { left: rho.dim(), right: 4 });
    }
    let yy = tensor_product(&consts::sigma_y(), &consts::sigma_y())?;
    let flipped = yy.matmul(&rho.matrix().conj()).matmul(&yy);

    let eig = hermitian_eigen(rho.matrix())?;
    let mut sqrt_rho = ComplexMatrix::zeros(4);
    for (k, &mu) in eig.values.iter().enumerate() {
        if mu > 0.0 {
            sqrt_rho = sqrt_rho.add_scaled(&ComplexMatrix::outer(&eig.vector(k)), mu.sqrt());
        }
    }

    let m = sqrt_rho.matmul(&flipped).matmul(&sqrt_rho);
    let mut lambdas: Vec<f64> =
        hermitian_eigenvalues(&m)?.into_iter().map(|x| x.max(0.0).sqrt()).collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0))
}

/// h(x) = −x log₂ x − (1−x) log₂(1−x).
pub fn binary_entropy(x: f64) -> f64 {
    shannon_bits([x, 1.0 - x])
}

/// EoF = h((1 + √(1 − C²))/2).
pub fn entropy_of_formation_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).sqrt()))
}

pub fn entropy_of_formation(rho: &DensityMatrix) -> Result<f64> {
    concurrence(rho).map(entropy_of_formation_from_concurrence)
}

/// Smallest τ with S(τ) ≥ `level`, linearly interpolated between the
/// bracketing samples.
pub fn threshold_time(s: &EntropySeries, level: f64) -> Result<Option<f64>> {
    if level.is_nan() || level <= 0.0 {
        return Err(Error::InvalidArgument(format!("threshold level {level} must be > 0")));
    }
    Ok(first_crossing(&s.taus, &s.values, level, |v| v >= level))
}

/// Smallest τ with `values(τ) ≤ level`, linearly interpolated.
pub fn falling_time(taus: &[f64], values: &[f64], level: f64) -> Option<f64> {
    first_crossing(taus, values, level, |v| v <= level)
}

fn first_crossing(
    taus: &[f64],
    values: &[f64],
    level: f64,
    reached: impl Fn(f64) -> bool,
) -> Option<f64> {
    let i = values.iter().position(|&v| reached(v))?;
    if i == 0 {
        return Some(taus[0]);
    }
    let (t0, t1) = (taus[i - 1], taus[i]);
    let (v0, v1) = (values[i - 1], values[i]);
    Some(t0 + (level - v0) / (v1 - v0) * (t1 - t0))
}
