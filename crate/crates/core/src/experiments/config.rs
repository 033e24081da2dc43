use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::dynamics::{GeneratorParams, InitialStateParams, TimeGrid};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    SingleDd,
    OptimalCoupling,
    SingletPair,
    MeasureCompare,
    TomographyDump,
}

impl Scenario {
    pub const ALL: [Scenario; 5] = [
        Scenario::SingleDd,
        Scenario::OptimalCoupling,
        Scenario::SingletPair,
        Scenario::MeasureCompare,
        Scenario::TomographyDump,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Scenario::SingleDd => "single_dd",
            Scenario::OptimalCoupling => "optimal_coupling",
            Scenario::SingletPair => "singlet_pair",
            Scenario::MeasureCompare => "measure_compare",
            Scenario::TomographyDump => "tomography_dump",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scenario '{s}'")))
    }
}

/// Where a run's CSV and SVG go. Runners never touch these; the front end
/// does.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputSpec {
    pub csv: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

/// Default τ horizon for scenarios without a specific one.
pub const DEFAULT_TAU_MAX: f64 = 10.0;
/// Default τ horizon of the coupling sweep.
pub const DEFAULT_OPTIMAL_TAU_MAX: f64 = 40.0;
/// Default τ horizon of the measurement comparison.
pub const DEFAULT_COMPARE_TAU_MAX: f64 = 200.0;
pub const DEFAULT_DT: f64 = 1e-3;
pub const DEFAULT_STRIDE: usize = 100;
pub const DEFAULT_LEVEL: f64 = 0.95;
pub const DEFAULT_ALPHA: f64 = 5.0;
pub const DEFAULT_PAIR_ALPHA: f64 = 20.0;

/// Full description of one run. Angles are in degrees; conversion to
/// radians happens in [`ScenarioConfig::initial_state_params`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub alpha: f64,
    pub alpha_grid: Option<Vec<f64>>,
    pub theta_deg: f64,
    pub phi_deg: f64,
    pub delta: f64,
    pub grid: TimeGrid,
    pub threshold_level: f64,
    /// Cross-check every recorded pair state through the Choi path instead
    /// of a five-point spot check.
    pub thorough: bool,
    pub output: OutputSpec,
}

impl ScenarioConfig {
    pub fn defaults(scenario: Scenario) -> Self {
        let (alpha, tau_max) = match scenario {
            Scenario::SingletPair => (DEFAULT_PAIR_ALPHA, DEFAULT_TAU_MAX),
            Scenario::MeasureCompare => (DEFAULT_PAIR_ALPHA, DEFAULT_COMPARE_TAU_MAX),
            Scenario::OptimalCoupling => (DEFAULT_ALPHA, DEFAULT_OPTIMAL_TAU_MAX),
            _ => (DEFAULT_ALPHA, DEFAULT_TAU_MAX),
        };
        let alpha_grid = (scenario == Scenario::OptimalCoupling).then(|| log_grid(0.5, 50.0, 25));
        Self {
            scenario,
            alpha,
            alpha_grid,
            theta_deg: 0.0,
            phi_deg: 0.0,
            delta: 0.0,
            grid: TimeGrid { tau_max, dt: DEFAULT_DT, stride: DEFAULT_STRIDE },
            threshold_level: DEFAULT_LEVEL,
            thorough: false,
            output: OutputSpec::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        TimeGrid::new(self.grid.tau_max, self.grid.dt, self.grid.stride)?;
        self.initial_state_params()?;
        if !(self.alpha.is_finite() && self.alpha >= 0.0) {
            return Err(Error::InvalidArgument(format!("alpha = {} must be >= 0", self.alpha)));
        }
        if !self.delta.is_finite() {
            return Err(Error::InvalidArgument("delta must be finite".into()));
        }
        if self.threshold_level.is_nan() || self.threshold_level <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "level = {} must be > 0",
                self.threshold_level
            )));
        }
        match (&self.alpha_grid, self.scenario) {
            (None, Scenario::OptimalCoupling) => {
                return Err(Error::InvalidArgument("optimal_coupling needs an alpha grid".into()))
            }
            (Some(grid), _) => {
                if grid.is_empty() || grid.iter().any(|a| !(a.is_finite() && *a >= 0.0)) {
                    return Err(Error::InvalidArgument(
                        "alpha grid must be non-empty with finite values >= 0".into(),
                    ));
                }
                if grid.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(Error::InvalidArgument(
                        "alpha grid must be strictly ascending".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn initial_state_params(&self) -> Result<InitialStateParams> {
        InitialStateParams::from_degrees(self.theta_deg, self.phi_deg)
    }

    pub fn generator(&self, alpha: f64) -> Result<GeneratorParams> {
        GeneratorParams::normalized(alpha, self.delta)
    }

    /// Resolved settings as key/value pairs, for result metadata.
    pub fn echo(&self) -> Vec<(String, String)> {
        let mut kv = vec![
            ("scenario".to_string(), self.scenario.to_string()),
            ("alpha".to_string(), self.alpha.to_string()),
        ];
        if let Some(grid) = &self.alpha_grid {
            let list: Vec<String> = grid.iter().map(f64::to_string).collect();
            kv.push(("alpha_grid".into(), list.join(",")));
        }
        kv.extend([
            ("theta".to_string(), self.theta_deg.to_string()),
            ("phi".to_string(), self.phi_deg.to_string()),
            ("delta".to_string(), self.delta.to_string()),
            ("tau_max".to_string(), self.grid.tau_max.to_string()),
            ("dt".to_string(), self.grid.dt.to_string()),
            ("stride".to_string(), self.grid.stride.to_string()),
            ("level".to_string(), self.threshold_level.to_string()),
            ("thorough".to_string(), self.thorough.to_string()),
        ]);
        kv
    }
}

/// `n` points from `start` to `stop` inclusive, evenly spaced.
pub fn linear_grid(start: f64, stop: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![start],
        _ => {
            (0..n)
                .map(|k| {
                    if k == n - 1 {
                        stop
                    } else {
                        start + (stop - start) * k as f64 / (n - 1) as f64
                    }
                })
                .collect()
        }
    }
}

/// `n` log-spaced points from `start` to `stop` inclusive (both > 0).
pub fn log_grid(start: f64, stop: f64, n: usize) -> Vec<f64> {
    let (a, b) = (start.ln(), stop.ln());
    linear_grid(a, b, n)
        .into_iter()
        .enumerate()
        .map(|(k, x)| match k {
            0 => start,
            k if k == n - 1 => stop,
            _ => x.exp(),
        })
        .collect()
}
