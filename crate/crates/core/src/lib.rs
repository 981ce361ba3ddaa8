//! Desk-scale simulator and analysis toolkit for a single laser-cooled
//! trapped ion used as a detector of weak oscillating and static electric
//! fields.
//!
//! The crate covers the full measurement chain:
//!
//! * [`physics`] — constants, trap formulas, thermometry and force units;
//! * [`dynamics`] — the damped/driven/stochastically heated axial equation
//!   of motion with closed-form and numeric steady-state references;
//! * [`imaging`] — synthetic EMCCD frames and axial photon profiles;
//! * [`fit`] — the chi-square fitting pipeline (profiles, resonances,
//!   heating, electrostatic response) and derived quantities;
//! * [`scenario`] — config-driven end-to-end runs with reference checks.
//!
//! All numerical code is generic over the scalar type via [`real::Real`];
//! concrete `f64` aliases are exported at the crate root.

pub mod dynamics;
pub mod error;
pub mod fit;
pub mod imaging;
pub mod numeric;
pub mod physics;
pub mod real;
pub mod scenario;

pub use error::{Error, Result};
pub use real::{real, Real};

/// `f64` working aliases for the main domain types.
pub type IonSpecies64 = physics::IonSpecies<f64>;
pub type TrapConfig64 = physics::TrapConfig<f64>;
pub type PhysicalConstants64 = physics::PhysicalConstants<f64>;
pub type OscillatorModel64 = dynamics::OscillatorModel<f64>;
pub type DriveSignal64 = dynamics::DriveSignal<f64>;
pub type SimConfig64 = dynamics::SimConfig<f64>;
pub type Trajectory64 = dynamics::Trajectory<f64>;
// TEMP pub type OpticsConfig64 = imaging::OpticsConfig<f64>;
// TEMP pub type ImageFrame64 = imaging::ImageFrame<f64>;
// TEMP pub type AxialProfile64 = imaging::AxialProfile<f64>;
// TEMP pub type FitResult64 = fit::FitResult<f64>;
// TEMP pub type ResonanceDataset64 = fit::ResonanceDataset<f64>;
