use super::config::{Scenario, ScenarioConfig};
use super::result::ScenarioResult;
use crate::channels::{apply_one_sided, tomograph_series, ChoiMatrix};
use crate::dynamics::{evolve_pair_one_sided, Trajectory};
use crate::entanglement::{
    concurrence, entropy_of_formation_from_concurrence, falling_time, threshold_time,
    von_neumann_entropy, EntropySeries,
};
use crate::error::{Error, Result};
use crate::hermitian::{consts, frobenius_distance, tensor_product, ComplexMatrix, DensityMatrix};

/// Concurrence below which the pair counts as disentangled.
pub const DISENTANGLED_CONCURRENCE: f64 = 1e-3;
/// Fraction of the final pair entropy that defines the pair–detector
/// entanglement time.
pub const PAIR_SATURATION_FRACTION: f64 = 0.9;
pub const CROSS_PATH_TOL: f64 = 1e-6;
const SPOT_CHECKS: usize = 5;
const BRANCH_CUTOFF: f64 = 1e-12;

/// Average post-measurement state when DD₁'s position is measured and the
/// outcome discarded: Σ_X p_X (X⊗I)ρ(X⊗I)/p_X over X ∈ {L, R}.
/// Branches with p_X ≤ 1e-12 are dropped.
pub fn collapse_average(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { left: rho.dim(), right: 4 });
    }
    let id = ComplexMatrix::identity(2);
    let mut mixed = ComplexMatrix::zeros(4);
    let mut kept = 0.0;
    for x in [consts::proj_left(), consts::proj_right()] {
        let px = tensor_product(&x, &id)?;
        let p = px.matmul(rho.matrix()).trace().re;
        if p <= BRANCH_CUTOFF {
            continue;
        }
        let branch = px.matmul(rho.matrix()).matmul(&px).scale_real(1.0 / p);
        mixed = mixed.add_scaled(&branch, p);
        kept += p;
    }
    if kept == 0.0 {
        return Err(Error::InvalidState("both collapse branches have zero probability".into()));
    }
    DensityMatrix::new(mixed)
}

/// Compares the direct 4×4 trajectory with (Λ_τ ⊗ I)(ρ₀), given the
/// tomographed channels on the same grid (see [`tomograph_series`]).
/// Returns the largest entrywise deviation over the checked samples. All samples are checked when `thorough`, five otherwise.
pub fn cross_path_deviation(
    chois: &[(f64, ChoiMatrix)],
    rho0: &DensityMatrix,
    traj: &Trajectory,
    thorough: bool,
) -> Result<f64> {
    let n = chois.len().min(traj.len());
    let indices: Vec<usize> = if thorough || n <= SPOT_CHECKS {
        (0..n).collect()
    } else {
        (0..SPOT_CHECKS).map(|k| k * (n - 1) / (SPOT_CHECKS - 1)).collect()
    };
    let mut worst = 0.0_f64;
    for i in indices {
        let via_choi = apply_one_sided(&chois[i].1, rho0)?;
        worst = worst.max(via_choi.matrix().max_abs_diff(traj.states[i].matrix()));
    }
    if worst > CROSS_PATH_TOL {
        return Err(Error::NumericalFailure(format!(
            "Choi-path and direct pair evolution differ by {worst:e} (tolerance {CROSS_PATH_TOL:e})"
        )));
    }
    Ok(worst)
}

struct PairSeries {
    concurrence: Vec<f64>,
    eof: Vec<f64>,
    entropy: Vec<f64>,
}

fn pair_series(traj: &Trajectory) -> Result<PairSeries> {
    let concurrence = traj.states.iter().map(concurrence).collect::<Result<Vec<_>>>()?;
    let eof = concurrence.iter().map(|&c| entropy_of_formation_from_concurrence(c)).collect();
    let entropy = traj.states.iter().map(von_neumann_entropy).collect::<Result<_>>()?;
    Ok(PairSeries { concurrence, eof, entropy })
}

/// Singlet pair with only DD₁ monitored: DD–DD entanglement (EoF, C) and
/// pair–detector entanglement S_pair over τ.
pub fn run_singlet_pair(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    cfg.validate()?;
    let g = cfg.generator(cfg.alpha)?;
    let rho0 = DensityMatrix::singlet();
    let traj = evolve_pair_one_sided(&rho0, &g, &cfg.grid)?;
    let chois = tomograph_series(&g, &cfg.grid)?;
    let cross = cross_path_deviation(&chois, &rho0, &traj, cfg.thorough)?;
    let series = pair_series(&traj)?;

    let s_sat = *series.entropy.last().expect("non-empty trajectory");
    let tau_d = falling_time(&traj.taus, &series.concurrence, DISENTANGLED_CONCURRENCE);
    let tau_e2 = if s_sat > 0.0 {
        let s = EntropySeries { taus: traj.taus.clone(), values: series.entropy.clone() };
        threshold_time(&s, PAIR_SATURATION_FRACTION * s_sat)?
    } else {
        None
    };

    let mut out = ScenarioResult::new(Scenario::SingletPair, "tau", traj.taus.clone());
    out.push_column("EoF", series.eof);
    out.push_column("S_pair", series.entropy);
    out.push_column("C", series.concurrence);
    out.metadata = cfg.echo();
    out.push_summary("tau_D", tau_d);
    out.push_summary("tau_E2", tau_e2);
    out.push_summary(
        "tau_E2_over_tau_D",
        tau_d.zip(tau_e2).filter(|(d, _)| *d > 0.0).map(|(d, e)| e / d),
    );
    out.push_summary("S_pair_final", Some(s_sat));
    out.push_summary("cross_path_max_dev", Some(cross));
    Ok(out)
}

/// Schrödinger evolution of the singlet against evolution of its
/// collapse average: D(τ) = ‖ρ_M(τ) − ρ(τ)‖_F and the EoF of both.
pub fn run_measure_compare(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    cfg.validate()?;
    let g = cfg.generator(cfg.alpha)?;
    let rho0 = DensityMatrix::singlet();
    let rho_m0 = collapse_average(&rho0)?;

    let (direct, measured) = rayon::join(
        || evolve_pair_one_sided(&rho0, &g, &cfg.grid),
        || evolve_pair_one_sided(&rho_m0, &g, &cfg.grid),
    );
    let (direct, measured) = (direct?, measured?);
    let chois = tomograph_series(&g, &cfg.grid)?;
    let cross = cross_path_deviation(&chois, &rho0, &direct, cfg.thorough)?
        .max(cross_path_deviation(&chois, &rho_m0, &measured, cfg.thorough)?);

    let distance = direct
        .states
        .iter()
        .zip(&measured.states)
        .map(|(a, b)| frobenius_distance(b.matrix(), a.matrix()))
        .collect::<Result<Vec<_>>>()?;
    let eof = |t: &Trajectory| -> Result<Vec<f64>> {
        t.states.iter().map(|s| concurrence(s).map(entropy_of_formation_from_concurrence)).collect()
    };
    let (eof_direct, eof_measured) = (eof(&direct)?, eof(&measured)?);

    let (argmax, dmax) = distance
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, d)| if d > best.1 { (i, d) } else { best });

    let mut out = ScenarioResult::new(Scenario::MeasureCompare, "tau", direct.taus.clone());
    out.metadata = cfg.echo();
    out.push_summary("D0", distance.first().copied());
    out.push_summary("D_final", distance.last().copied());
    out.push_summary("D_max", Some(dmax));
    out.push_summary("tau_at_D_max", Some(direct.taus[argmax]));
    out.push_summary("EoF_schrodinger_final", eof_direct.last().copied());
    out.push_summary("EoF_measured_final", eof_measured.last().copied());
    out.push_summary("cross_path_max_dev", Some(cross));
    out.push_column("D", distance);
    out.push_column("EoF_schrodinger", eof_direct);
    out.push_column("EoF_measured", eof_measured);
    Ok(out)
}
