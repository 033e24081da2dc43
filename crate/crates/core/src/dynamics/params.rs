use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hermitian::DensityMatrix;

/// Parameters of the reduced double-dot evolution, in energy units with ħ = 1.
///
/// `omega0` is the inter-dot tunnel coupling, `epsilon = E2 − E1` the level
/// detuning and `gamma_d` the detector-induced dephasing rate. `omega0_2`
/// is an optional coherent tunnelling term on the second dot of a pair; it
/// is zero unless set explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorParams {
    pub omega0: f64,
    pub epsilon: f64,
    pub gamma_d: f64,
    pub omega0_2: f64,
}

impl GeneratorParams {
    pub fn new(omega0: f64, epsilon: f64, gamma_d: f64) -> Result<Self> {
        let g = Self { omega0, epsilon, gamma_d, omega0_2: 0.0 };
        g.validate()?;
        Ok(g)
    }

    /// Ω0 = 1 units: `gamma_d = alpha`, `epsilon = delta`.
    pub fn normalized(alpha: f64, delta: f64) -> Result<Self> {
        Self::new(1.0, delta, alpha)
    }

    /// Ω0 = 0. In this mode τ is read as absolute time.
    pub fn diagnostic(epsilon: f64, gamma_d: f64) -> Result<Self> {
        Self::new(0.0, epsilon, gamma_d)
    }

    pub fn from_detector(omega0: f64, epsilon: f64, detector: &DetectorParams) -> Result<Self> {
        Self::new(omega0, epsilon, detector.gamma_d())
    }

    pub fn with_second_dot_coupling(mut self, omega0_2: f64) -> Self {
        self.omega0_2 = omega0_2;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let finite =
            [self.omega0, self.epsilon, self.gamma_d, self.omega0_2].iter().all(|x| x.is_finite());
        if !finite {
            return Err(Error::InvalidArgument("generator parameters must be finite".into()));
        }
        if self.omega0 < 0.0 {
            return Err(Error::InvalidArgument(format!("omega0 = {} < 0", self.omega0)));
        }
        if self.gamma_d < 0.0 {
            return Err(Error::InvalidArgument(format!("gamma_d = {} < 0", self.gamma_d)));
        }
        Ok(())
    }

    pub fn is_diagnostic(&self) -> bool {
        self.omega0 == 0.0
    }

    /// α = Γd/Ω0; `None` in diagnostic mode.
    pub fn alpha(&self) -> Option<f64> {
        (!self.is_diagnostic()).then(|| self.gamma_d / self.omega0)
    }

    /// δ = ε/Ω0; `None` in diagnostic mode.
    pub fn delta(&self) -> Option<f64> {
        (!self.is_diagnostic()).then(|| self.epsilon / self.omega0)
    }

    /// Absolute time per unit τ: 1/Ω0, or 1 in diagnostic mode.
    pub fn time_scale(&self) -> f64 {
        if self.is_diagnostic() {
            1.0
        } else {
            1.0 / self.omega0
        }
    }
}

/// Point-contact detector settings. The reservoir potentials are carried
/// for reference only; the reduced dynamics sees the detector solely
/// through `gamma_d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorParams {
    /// Transmission coefficient, in [0, 1].
    pub t1: f64,
    /// Applied bias voltage.
    pub vd: f64,
    pub mu_l: f64,
}

impl DetectorParams {
    pub fn new(t1: f64, vd: f64, mu_l: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t1) {
            return Err(Error::InvalidArgument(format!("transmission t1 = {t1} outside [0, 1]")));
        }
        if !(vd.is_finite() && vd >= 0.0) {
            return Err(Error::InvalidArgument(format!("bias vd = {vd} must be finite and >= 0")));
        }
        Ok(Self { t1, vd, mu_l })
    }

    /// Γd = T1·Vd/(2π).
    pub fn gamma_d(&self) -> f64 {
        self.t1 * self.vd / (2.0 * PI)
    }

    pub fn mu_r(&self) -> f64 {
        self.mu_l - self.vd
    }
}

/// Bloch angles of the initial pure state, in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialStateParams {
    pub theta: f64,
    pub phi: f64,
}

impl InitialStateParams {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        let range = 0.0..=2.0 * PI;
        if !range.contains(&theta) || !range.contains(&phi) {
            return Err(Error::InvalidArgument(format!(
                "angles (theta = {theta}, phi = {phi}) must lie in [0, 2π]"
            )));
        }
        Ok(Self { theta, phi })
    }

    pub fn from_degrees(theta_deg: f64, phi_deg: f64) -> Result<Self> {
        Self::new(theta_deg.to_radians(), phi_deg.to_radians())
    }
}

pub const MAX_DT: f64 = 0.01;
pub const MAX_STEPS: f64 = 1e8;

/// Uniform τ grid for the integrators.
///
/// The integrator takes `steps()` equal steps of `step()` ≤ `dt`; the last
/// one lands exactly on `tau_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub tau_max: f64,
    pub dt: f64,
    pub stride: usize,
}

impl TimeGrid {
    pub fn new(tau_max: f64, dt: f64, stride: usize) -> Result<Self> {
        if !(tau_max.is_finite() && tau_max > 0.0) {
            return Err(Error::InvalidArgument(format!("tau_max = {tau_max} must be > 0")));
        }
        if dt.is_nan() || dt <= 0.0 || dt > MAX_DT {
            return Err(Error::InvalidArgument(format!("dt = {dt} must lie in (0, {MAX_DT}]")));
        }
        if tau_max / dt > MAX_STEPS {
            return Err(Error::InvalidArgument(format!(
                "tau_max/dt = {:e} exceeds {MAX_STEPS:e}",
                tau_max / dt
            )));
        }
        if stride == 0 {
            return Err(Error::InvalidArgument("stride must be >= 1".into()));
        }
        Ok(Self { tau_max, dt, stride })
    }

    pub fn steps(&self) -> usize {
        // Tolerate tau_max/dt landing a hair above an integer.
        ((self.tau_max / self.dt) * (1.0 - 1e-12)).ceil().max(1.0) as usize
    }

    pub fn step(&self) -> f64 {
        self.tau_max / self.steps() as f64
    }

    /// Step indices at which states are recorded: every `stride` steps from
    /// 0, plus the final step when it is not a multiple of `stride`.
    pub fn sample_steps(&self) -> Vec<usize> {
        let n = self.steps();
        let mut idx: Vec<usize> = (0..=n).step_by(self.stride).collect();
        if !n.is_multiple_of(self.stride) {
            idx.push(n);
        }
        idx
    }

    pub fn sample_taus(&self) -> Vec<f64> {
        let h = self.step();
        self.sample_steps().iter().map(|&k| k as f64 * h).collect()
    }

    /// Same span and step with every step recorded.
    pub fn full_resolution(&self) -> Self {
        Self { stride: 1, ..*self }
    }
}

/// States recorded along an integration, starting at τ = 0.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub grid: TimeGrid,
    pub taus: Vec<f64>,
    pub states: Vec<DensityMatrix>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn last(&self) -> &DensityMatrix {
        self.states.last().expect("trajectory always holds the initial state")
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &DensityMatrix)> {
        self.taus.iter().copied().zip(self.states.iter())
    }
}
