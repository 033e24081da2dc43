use num_complex::Complex64 as C64;

use super::generator::{lindblad_derivative, Generator};
use super::params::{GeneratorParams, TimeGrid, Trajectory};
use crate::error::{Error, Result};
use crate::hermitian::{hermitian_eigenvalues, ComplexMatrix, DensityMatrix, PSD_TOL, TRACE_TOL};

const RENORMALIZE_ABOVE: f64 = 1e-12;
/// Allowed excess of Tr ρ² over 1. Exceeding it means the step is unstable.
pub const PURITY_TOL: f64 = 1e-9;

/// Fixed-step classic RK4 in τ units. `rhs` is the absolute-time
/// derivative; `visit` sees the state after every step.
fn drive<F, V>(
    state0: &DensityMatrix,
    g: &GeneratorParams,
    grid: &TimeGrid,
    rhs: F,
    mut visit: V,
) -> Result<()>
where
    F: Fn(&ComplexMatrix) -> ComplexMatrix,
    V: FnMut(usize, f64, &ComplexMatrix) -> Result<()>,
{
    g.validate()?;
    let n = grid.steps();
    let h_tau = grid.step();
    let h = h_tau * g.time_scale();

    let mut y = state0.matrix().clone();
    for step in 1..=n {
        let k1 = rhs(&y);
        let k2 = rhs(&y.add_scaled(&k1, 0.5 * h));
        let k3 = rhs(&y.add_scaled(&k2, 0.5 * h));
        let k4 = rhs(&y.add_scaled(&k3, h));
        let incr = k1.add_scaled(&k2, 2.0).add_scaled(&k3, 2.0).add_scaled(&k4, 1.0);
        y = y.add_scaled(&incr, h / 6.0).hermitian_part();

        let tau = step as f64 * h_tau;
        if !y.as_slice().iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NumericalFailure(format!(
                "state became non-finite at tau = {tau} (integration diverged; reduce dt)"
            )));
        }
        let tr = y.trace().re;
        if (tr - 1.0).abs() > RENORMALIZE_ABOVE {
            y = y.scale(C64::new(1.0 / tr, 0.0));
        }
        let purity = y.frobenius_norm().powi(2);
        if purity > 1.0 + PURITY_TOL {
            return Err(Error::NumericalFailure(format!(
                "purity {purity} at tau = {tau} violates tolerance 1 + {PURITY_TOL:e} \
                 (integration unstable; reduce dt)"
            )));
        }
        visit(step, tau, &y)?;
    }
    Ok(())
}

fn integrate<F>(
    state0: &DensityMatrix,
    g: &GeneratorParams,
    grid: &TimeGrid,
    rhs: F,
) -> Result<Trajectory>
where
    F: Fn(&ComplexMatrix) -> ComplexMatrix,
{
    let samples = grid.sample_steps();
    let mut taus = Vec::with_capacity(samples.len());
    let mut states = Vec::with_capacity(samples.len());
    taus.push(0.0);
    states.push(state0.clone());

    let mut next_sample = samples.iter().skip(1).peekable();
    drive(state0, g, grid, rhs, |step, tau, y| {
        if next_sample.peek() == Some(&&step) {
            next_sample.next();
            taus.push(tau);
            states.push(checked_state(y, tau)?);
        }
        Ok(())
    })?;
    Ok(Trajectory { grid: *grid, taus, states })
}

/// Maps `f` over the state at τ = 0 and after every integration step,
/// ignoring `grid.stride`. Every visited state is checked like a stored
/// trajectory sample, but none is kept.
pub fn scan<T, Fv>(
    state0: &DensityMatrix,
    g: &GeneratorParams,
    grid: &TimeGrid,
    mut f: Fv,
) -> Result<Vec<T>>
where
    Fv: FnMut(f64, &DensityMatrix) -> Result<T>,
{
    let mut out = Vec::with_capacity(grid.steps() + 1);
    out.push(f(0.0, state0)?);
    let mut visit = |_: usize, tau: f64, y: &ComplexMatrix| {
        out.push(f(tau, &checked_state(y, tau)?)?);
        Ok(())
    };
    match state0.dim() {
        2 => drive(state0, g, grid, |y| lindblad_derivative(y, g), &mut visit)?,
        4 => {
            let generator = Generator::new(g, 4)?;
            drive(state0, g, grid, |y| generator.derivative(y), &mut visit)?
        }
        d => return Err(Error::UnsupportedDimension(d)),
    }
    Ok(out)
}

fn checked_state(y: &ComplexMatrix, tau: f64) -> Result<DensityMatrix> {
    let tr = y.trace();
    if (tr - 1.0).norm() > TRACE_TOL {
        return Err(Error::NumericalFailure(format!(
            "trace {tr} at tau = {tau} violates tolerance {TRACE_TOL:e}"
        )));
    }
    let min_ev = hermitian_eigenvalues(y)?[0];
    if min_ev < PSD_TOL {
        return Err(Error::NumericalFailure(format!(
            "minimum eigenvalue {min_ev:e} at tau = {tau} violates positivity tolerance {PSD_TOL:e}"
        )));
    }
    Ok(DensityMatrix::new_unchecked(y.clone()))
}

/// Evolves a single double dot under the dephasing master equation.
pub fn evolve_single(
    sigma0: &DensityMatrix,
    g: &GeneratorParams,
    grid: &TimeGrid,
) -> Result<Trajectory> {
    if sigma0.dim() != 2 {
        return Err(Error::DimensionMismatch { left: sigma0.dim(), right: 2 });
    }
    integrate(sigma0, g, grid, |y| lindblad_derivative(y, g))
}

/// Evolves a DD pair where only DD₁ couples to the detector.
pub fn evolve_pair_one_sided(
    rho0: &DensityMatrix,
    g: &GeneratorParams,
    grid: &TimeGrid,
) -> Result<Trajectory> {
    if rho0.dim() != 4 {
        return Err(Error::DimensionMismatch { left: rho0.dim(), right: 4 });
    }
    let generator = Generator::new(g, 4)?;
    integrate(rho0, g, grid, |y| generator.derivative(y))
}

/// Dispatches on the state dimension.
pub fn evolve(state0: &DensityMatrix, g: &GeneratorParams, grid: &TimeGrid) -> Result<Trajectory> {
    match state0.dim() {
        2 => evolve_single(state0, g, grid),
        _ => evolve_pair_one_sided(state0, g, grid),
    }
}

/// State at `tau` using steps no longer than `dt`.
pub fn evolve_to(
    state0: &DensityMatrix,
    g: &GeneratorParams,
    tau: f64,
    dt: f64,
) -> Result<DensityMatrix> {
    if tau == 0.0 {
        return Ok(state0.clone());
    }
    let grid = TimeGrid::new(tau, dt, usize::MAX)?;
    Ok(evolve(state0, g, &grid)?.last().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::initial_state;
    use crate::dynamics::InitialStateParams;

    #[test]
    fn records_initial_and_strided_samples() {
        let g = GeneratorParams::normalized(1.0, 0.0).unwrap();
        let grid = TimeGrid::new(1.0, 1e-3, 100).unwrap();
        let s0 = initial_state(&InitialStateParams::new(0.0, 0.0).unwrap());
        let traj = evolve_single(&s0, &g, &grid).unwrap();
        assert_eq!(traj.len(), 11);
        assert_eq!(traj.taus[0], 0.0);
        assert!((traj.taus[10] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dimension_checks() {
        let g = GeneratorParams::normalized(1.0, 0.0).unwrap();
        let grid = TimeGrid::new(1.0, 1e-3, 100).unwrap();
        assert!(evolve_single(&DensityMatrix::singlet(), &g, &grid).is_err());
        let s0 = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(evolve_pair_one_sided(&s0, &g, &grid).is_err());
    }

    #[test]
    fn divergent_step_is_reported() {
        // RK4 is unstable far beyond |λ·dt| ≈ 2.8.
        let g = GeneratorParams::normalized(1e5, 0.0).unwrap();
        let grid = TimeGrid::new(1.0, 1e-2, 10).unwrap();
        let s0 = initial_state(&InitialStateParams::new(std::f64::consts::FRAC_PI_2, 0.0).unwrap());
        match evolve_single(&s0, &g, &grid) {
            Err(Error::NumericalFailure(msg)) => {
                assert!(msg.contains("tau") && msg.contains("tolerance"), "{msg}")
            }
            other => panic!("expected numerical failure, got {other:?}"),
        }
    }

    #[test]
    fn evolve_to_zero_is_identity() {
        let g = GeneratorParams::normalized(5.0, 0.0).unwrap();
        let s0 = DensityMatrix::singlet();
        assert_eq!(evolve_to(&s0, &g, 0.0, 1e-3).unwrap(), s0);
    }
}
