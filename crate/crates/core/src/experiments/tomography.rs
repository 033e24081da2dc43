use super::config::{Scenario, ScenarioConfig};
use super::result::ScenarioResult;
use crate::channels::{choi_to_kraus, tomograph_series, verify_cptp};
use crate::error::Result;

/// Choi entries (`J{row}{col}_re`, `J{row}{col}_im`) and CPTP diagnostics
/// of the tomographed channel at every recorded τ.
pub fn run_tomography_dump(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    cfg.validate()?;
    let g = cfg.generator(cfg.alpha)?;
    let chois = tomograph_series(&g, &cfg.grid)?;

    let taus: Vec<f64> = chois.iter().map(|(t, _)| *t).collect();
    let mut entries: Vec<Vec<f64>> = (0..32).map(|_| Vec::with_capacity(taus.len())).collect();
    let mut min_eig = Vec::with_capacity(taus.len());
    let mut tp_dev = Vec::with_capacity(taus.len());
    let mut herm_dev = Vec::with_capacity(taus.len());
    let mut kraus_dev = Vec::with_capacity(taus.len());
    let mut kraus_rank = Vec::with_capacity(taus.len());

    for (_, j) in &chois {
        for (idx, z) in j.matrix().as_slice().iter().enumerate() {
            entries[2 * idx].push(z.re);
            entries[2 * idx + 1].push(z.im);
        }
        let report = verify_cptp(j)?;
        min_eig.push(report.min_eigenvalue);
        tp_dev.push(report.tp_deviation);
        herm_dev.push(report.hermiticity_deviation);
        let kraus = choi_to_kraus(j)?;
        kraus_dev.push(kraus.completeness_deviation());
        kraus_rank.push(kraus.ops.len() as f64);
    }

    let worst = |v: &[f64], pick: fn(f64, f64) -> f64| v.iter().copied().reduce(pick);
    let mut out = ScenarioResult::new(Scenario::TomographyDump, "tau", taus);
    out.metadata = cfg.echo();
    out.push_summary("min_eigenvalue", worst(&min_eig, f64::min));
    out.push_summary("max_tp_deviation", worst(&tp_dev, f64::max));
    out.push_summary("max_hermiticity_deviation", worst(&herm_dev, f64::max));
    out.push_summary("max_kraus_deviation", worst(&kraus_dev, f64::max));

    let mut values = entries.into_iter();
    for r in 0..4 {
        for c in 0..4 {
            out.push_column(format!("J{r}{c}_re"), values.next().unwrap());
            out.push_column(format!("J{r}{c}_im"), values.next().unwrap());
        }
    }
    out.push_column("min_eigenvalue", min_eig);
    out.push_column("tp_deviation", tp_dev);
    out.push_column("hermiticity_deviation", herm_dev);
    out.push_column("kraus_deviation", kraus_dev);
    out.push_column("kraus_rank", kraus_rank);
    Ok(out)
}
