//! Axial equation of motion: damped, driven, optionally anharmonic and
//! stochastically heated.

pub mod ensemble;
pub mod export;
pub mod integrator;
pub mod model;
pub mod steady_state;

pub use ensemble::{ensemble_thermal_stats, position_variance_vs_time, run_ensemble, ThermalStats};
pub use integrator::{heat_without_cooling, integrate, integrate_observed, ring_down, FinalState};
pub use model::{CoolingParams, DriveSignal, ModelWarning, OscillatorModel, SimConfig, Trajectory};
pub use steady_state::{steady_state_amplitude, steady_state_amplitude_numeric};
