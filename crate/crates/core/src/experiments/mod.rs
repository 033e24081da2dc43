//! Scenario runners, one per studied effect, each turning a
//! [`ScenarioConfig`] into a [`ScenarioResult`]. No I/O happens here.

mod config;
mod pair;
mod result;
mod single;
mod tomography;

pub use config::{
    linear_grid, log_grid, OutputSpec, Scenario, ScenarioConfig, DEFAULT_ALPHA,
    DEFAULT_COMPARE_TAU_MAX, DEFAULT_DT, DEFAULT_LEVEL, DEFAULT_OPTIMAL_TAU_MAX,
    DEFAULT_PAIR_ALPHA, DEFAULT_STRIDE, DEFAULT_TAU_MAX,
};
pub use pair::{
    collapse_average, cross_path_deviation, run_measure_compare, run_singlet_pair, CROSS_PATH_TOL,
    DISENTANGLED_CONCURRENCE, PAIR_SATURATION_FRACTION,
};
pub use result::{Column, ScenarioResult};
pub use single::{find_optimal_coupling, run_single_dd, REPORTED_LEVELS, SINGLE_DD_SATURATION};
pub use tomography::run_tomography_dump;

use crate::error::Result;

/// Runs whichever scenario `cfg` names.
pub fn run(cfg: &ScenarioConfig) -> Result<ScenarioResult> {
    match cfg.scenario {
        Scenario::SingleDd => run_single_dd(cfg),
        Scenario::OptimalCoupling => find_optimal_coupling(cfg),
        Scenario::SingletPair => run_singlet_pair(cfg),
        Scenario::MeasureCompare => run_measure_compare(cfg),
        Scenario::TomographyDump => run_tomography_dump(cfg),
    }
}
