use rayon::prelude::*;

use super::config::{Scenario, ScenarioConfig};
use super::result::ScenarioResult;
use crate::dynamics::{initial_state, scan};
use crate::entanglement::{entanglement_rate, threshold_time, von_neumann_entropy, EntropySeries};
use crate::error::{Error, Result};

/// Saturation entropy of a single double dot, in bits.
pub const SINGLE_DD_SATURATION: f64 = 1.0;
/// Threshold levels reported by every single-dot run.
pub const REPORTED_LEVELS: [f64; 3] = [0.90, 0.95, 0.99];

/// Entropy after every integration step (stride ignored).
fn full_resolution_entropy(cfg: &ScenarioConfig, alpha: f64) -> Result<EntropySeries> {
    let g = cfg.generator(alpha)?;
    let sigma0 = initial_state(&cfg.initial_state_params()?);
    let grid = cfg.grid.full_resolution();
    let values = scan(&sigma0, &g, &grid, |_, rho| von_neumann_entropy(rho))?;
    let h = grid.step();
    let taus = (0..values.len()).map(|k| k as f64 * h).collect();
    Ok(EntropySeries { taus, values })
}

/// Entanglement entropy S(τ) and rate R(τ) of one double dot.
///
/// Entropy and rate are computed on the integrator's own step and then
/// decimated to the output grid, so R is a derivative at step resolution.
/// The summary holds `R_first`, the rate at the first step after τ = 0.
pub fn run_single_dd(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    cfg.validate()?;
    let entropy = full_resolution_entropy(cfg, cfg.alpha)?;
    let rate = entanglement_rate(&entropy)?;

    let samples = cfg.grid.sample_steps();
    let pick = |v: &[f64]| samples.iter().map(|&k| v[k]).collect::<Vec<_>>();

    let mut out = ScenarioResult::new(Scenario::SingleDd, "tau", pick(&entropy.taus));
    out.push_column("S", pick(&entropy.values));
    out.push_column("R", pick(&rate.values));
    out.metadata = cfg.echo();

    for level in REPORTED_LEVELS {
        let t = threshold_time(&entropy, level * SINGLE_DD_SATURATION)?;
        out.push_summary(format!("tau_E_{level:.2}"), t);
    }
    out.push_summary(
        "tau_E",
        threshold_time(&entropy, cfg.threshold_level * SINGLE_DD_SATURATION)?,
    );
    out.push_summary("R_first", Some(rate.values[1]));
    out.push_summary("S_final", entropy.values.last().copied());
    Ok(out)
}

/// Entanglement time τ_E(α) over the α grid, from the configured start.
/// α values whose entropy never reaches the threshold are `NaN` in the
/// column and excluded from the argmin.
pub fn find_optimal_coupling(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    cfg.validate()?;
    let alphas = cfg
        .alpha_grid
        .clone()
        .ok_or_else(|| Error::InvalidArgument("optimal_coupling needs an alpha grid".into()))?;
    let level = cfg.threshold_level * SINGLE_DD_SATURATION;

    let times: Vec<Option<f64>> = alphas
        .par_iter()
        .map(|&a| threshold_time(&full_resolution_entropy(cfg, a)?, level))
        .collect::<Result<_>>()?;

    let best = times
        .iter()
        .enumerate()
        .filter_map(|(i, t)| t.map(|t| (i, t)))
        .min_by(|a, b| a.1.total_cmp(&b.1));

    let mut out = ScenarioResult::new(Scenario::OptimalCoupling, "alpha", alphas.clone());
    out.push_column("tau_E", times.iter().map(|t| t.unwrap_or(f64::NAN)).collect());
    out.metadata = cfg.echo();
    out.push_summary("alpha_opt", best.map(|(i, _)| alphas[i]));
    out.push_summary("tau_E_opt", best.map(|(_, t)| t));
    out.push_summary("opt_index", best.map(|(i, _)| i as f64));
    out.push_summary("unreached", Some(times.iter().filter(|t| t.is_none()).count() as f64));
    Ok(out)
}
