//! Flag and config-file parsing into a [`ScenarioConfig`].

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use ddqpc_core::experiments::{linear_grid, log_grid};
use ddqpc_core::{Scenario, ScenarioConfig};
use serde::Deserialize;

use crate::format::fmt_real;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "ddqpc",
    version,
    about = "Entanglement dynamics of a double-dot charge qubit under point-contact measurement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy S(τ) and rate R(τ) of one monitored double dot
    Single(Flags),
    /// Entanglement time τ_E over a grid of couplings α
    Optimal(Flags),
    /// Singlet pair with one dot monitored: EoF and pair entropy
    Singlet(Flags),
    /// Schrödinger evolution of the singlet against its collapse average
    Compare(Flags),
    /// Choi matrix of the one-dot channel over τ
    Tomo(Flags),
}

impl Command {
    fn split(self) -> (Scenario, Flags) {
        match self {
            Command::Single(f) => (Scenario::SingleDd, f),
            Command::Optimal(f) => (Scenario::OptimalCoupling, f),
            Command::Singlet(f) => (Scenario::SingletPair, f),
            Command::Compare(f) => (Scenario::MeasureCompare, f),
            Command::Tomo(f) => (Scenario::TomographyDump, f),
        }
    }
}

/// Options shared by every subcommand. The JSON config file uses the same
/// names with underscores.
#[derive(Debug, Default, Args, Deserialize)]
#[serde(deny_unknown_fields)]
struct Flags {
    /// Coupling α = Γd/Ω0
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// α values: "start:stop:N", "start:stop:Nlog" or a comma list
    #[arg(long, value_name = "GRID")]
    alpha_grid: Option<String>,
    /// Initial polar angle in degrees
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<f64>,
    /// Initial azimuth in degrees
    #[arg(long, allow_negative_numbers = true)]
    phi: Option<f64>,
    /// Level detuning ε/Ω0
    #[arg(long, allow_negative_numbers = true)]
    delta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    tau_max: Option<f64>,
    /// Integrator step in τ units (at most 0.01)
    #[arg(long, allow_negative_numbers = true)]
    dt: Option<f64>,
    /// Keep every N-th step in the output
    #[arg(long)]
    stride: Option<usize>,
    /// Entropy threshold in bits for τ_E
    #[arg(long, allow_negative_numbers = true)]
    level: Option<f64>,
    /// CSV output path
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// SVG plot output path
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// JSON file with default flag values
    #[arg(long, value_name = "PATH")]
    #[serde(skip)]
    config: Option<PathBuf>,
    /// Cross-check every pair sample through the Choi path
    #[arg(long)]
    #[serde(default)]
    thorough: bool,
}

impl Flags {
    fn over(self, base: Flags) -> Flags {
        Flags {
            alpha: self.alpha.or(base.alpha),
            alpha_grid: self.alpha_grid.or(base.alpha_grid),
            theta: self.theta.or(base.theta),
            phi: self.phi.or(base.phi),
            delta: self.delta.or(base.delta),
            tau_max: self.tau_max.or(base.tau_max),
            dt: self.dt.or(base.dt),
            stride: self.stride.or(base.stride),
            level: self.level.or(base.level),
            out: self.out.or(base.out),
            svg: self.svg.or(base.svg),
            config: None,
            thorough: self.thorough || base.thorough,
        }
    }
}

fn read_config(path: &Path) -> Result<Flags, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("--config {}: {e}", path.display())))
}

/// Parses `argv` (without the program name) into a resolved config.
pub fn parse_invocation<I, S>(argv: I) -> Result<ScenarioConfig, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("ddqpc".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(CliError::from_clap)?;
    let (scenario, flags) = cli.command.split();
    let flags = match &flags.config {
        Some(path) => {
            let base = read_config(path)?;
            flags.over(base)
        }
        None => flags,
    };
    resolve(scenario, flags)
}

fn bad(flag: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("--{flag}: {msg}"))
}

fn resolve(scenario: Scenario, f: Flags) -> Result<ScenarioConfig, CliError> {
    let mut cfg = ScenarioConfig::defaults(scenario);
    if let Some(a) = f.alpha {
        if !(a.is_finite() && a >= 0.0) {
            return Err(bad("alpha", format!("{a} must be finite and >= 0")));
        }
        cfg.alpha = a;
    }
    if let Some(spec) = &f.alpha_grid {
        cfg.alpha_grid = Some(parse_grid(spec).map_err(|m| bad("alpha-grid", m))?);
    }
    for (flag, value, slot) in
        [("theta", f.theta, &mut cfg.theta_deg), ("phi", f.phi, &mut cfg.phi_deg)]
    {
        if let Some(v) = value {
            if !(0.0..=360.0).contains(&v) {
                return Err(bad(flag, format!("{v} must lie in [0, 360] degrees")));
            }
            *slot = v;
        }
    }
    if let Some(d) = f.delta {
        if !d.is_finite() {
            return Err(bad("delta", "must be finite"));
        }
        cfg.delta = d;
    }
    if let Some(t) = f.tau_max {
        if !(t.is_finite() && t > 0.0) {
            return Err(bad("tau-max", format!("{t} must be finite and > 0")));
        }
        cfg.grid.tau_max = t;
    }
    if let Some(dt) = f.dt {
        if dt.is_nan() || dt <= 0.0 || dt > ddqpc_core::dynamics::MAX_DT {
            return Err(bad(
                "dt",
                format!("{dt} must lie in (0, {}]", ddqpc_core::dynamics::MAX_DT),
            ));
        }
        cfg.grid.dt = dt;
    }
    if let Some(s) = f.stride {
        if s == 0 {
            return Err(bad("stride", "must be >= 1"));
        }
        cfg.grid.stride = s;
    }
    if let Some(l) = f.level {
        if !(l.is_finite() && l > 0.0) {
            return Err(bad("level", format!("{l} must be finite and > 0")));
        }
        cfg.threshold_level = l;
    }
    cfg.output.csv = f.out;
    cfg.output.svg = f.svg;
    cfg.thorough = f.thorough;
    cfg.validate().map_err(|e| CliError::Usage(format!("invalid configuration: {e}")))?;
    Ok(cfg)
}

/// Grid syntax: `start:stop:N`, `start:stop:Nlog`, or `a,b,c`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| format!("'{s}' is not a number"));
    let parts: Vec<&str> = spec.split(':').collect();
    let grid = match parts.as_slice() {
        [start, stop, count] => {
            let (start, stop) = (num(start)?, num(stop)?);
            let (count, log) = match count.strip_suffix("log") {
                Some(c) => (c, true),
                None => (*count, false),
            };
            let n: usize = count.trim().parse().map_err(|_| format!("'{count}' is not a count"))?;
            if n == 0 {
                return Err("count must be >= 1".into());
            }
            if log {
                if !(start > 0.0 && stop > 0.0) {
                    return Err("log grid endpoints must be > 0".into());
                }
                log_grid(start, stop, n)
            } else {
                linear_grid(start, stop, n)
            }
        }
        [list] => list.split(',').map(num).collect::<Result<_, _>>()?,
        _ => return Err(format!("'{spec}' is neither start:stop:N nor a comma list")),
    };
    if grid.iter().any(|a| !(a.is_finite() && *a >= 0.0)) {
        return Err("values must be finite and >= 0".into());
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err("values must be strictly ascending".into());
    }
    Ok(grid)
}

fn subcommand(s: Scenario) -> &'static str {
    match s {
        Scenario::SingleDd => "single",
        Scenario::OptimalCoupling => "optimal",
        Scenario::SingletPair => "singlet",
        Scenario::MeasureCompare => "compare",
        Scenario::TomographyDump => "tomo",
    }
}

/// Flags that [`parse_invocation`] turns back into `cfg`.
pub fn render_args(cfg: &ScenarioConfig) -> Vec<String> {
    let mut args = vec![subcommand(cfg.scenario).to_string()];
    let mut push = |flag: &str, value: String| {
        args.push(format!("--{flag}"));
        args.push(value);
    };
    push("alpha", fmt_real(cfg.alpha));
    if let Some(grid) = &cfg.alpha_grid {
        push("alpha-grid", grid.iter().map(|&a| fmt_real(a)).collect::<Vec<_>>().join(","));
    }
    push("theta", fmt_real(cfg.theta_deg));
    push("phi", fmt_real(cfg.phi_deg));
    push("delta", fmt_real(cfg.delta));
    push("tau-max", fmt_real(cfg.grid.tau_max));
    push("dt", fmt_real(cfg.grid.dt));
    push("stride", cfg.grid.stride.to_string());
    push("level", fmt_real(cfg.threshold_level));
    if let Some(p) = &cfg.output.csv {
        push("out", p.display().to_string());
    }
    if let Some(p) = &cfg.output.svg {
        push("svg", p.display().to_string());
    }
    if cfg.thorough {
        args.push("--thorough".into());
    }
    args
}
