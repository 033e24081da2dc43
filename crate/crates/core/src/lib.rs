//! Entanglement dynamics of a double-dot charge qubit monitored by a
//! quantum point contact.
//!
//! The detector enters only through its dephasing rate Γd. Times are
//! normalized as τ = Ω0·t and couplings as α = Γd/Ω0. The crate covers
//! the matrix kernel ([`hermitian`]), the reduced evolution
//! ([`dynamics`]), entanglement measures ([`entanglement`]), channel
//! tomography ([`channels`]) and the scenario runners ([`experiments`]).

pub mod channels;
pub mod dynamics;
pub mod entanglement;
mod error;
pub mod experiments;
pub mod hermitian;

pub use num_complex::Complex64 as C64;

pub use channels::{ChoiMatrix, CptpReport, KrausSet};
pub use dynamics::{DetectorParams, GeneratorParams, InitialStateParams, TimeGrid, Trajectory};
pub use entanglement::{EntropySeries, RateSeries};
pub use error::{Error, Result};
pub use experiments::{Scenario, ScenarioConfig, ScenarioResult};
pub use hermitian::{ComplexMatrix, DensityMatrix};
