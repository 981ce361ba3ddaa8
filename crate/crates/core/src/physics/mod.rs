//! Physical constants, unit conversions and trap-model formulas.

pub mod constants;
pub mod species;
pub mod thermal;
pub mod trap;
pub mod units;

pub use constants::PhysicalConstants;
pub use species::IonSpecies;
pub use thermal::{
    effective_pixel_size, mean_phonon_number, phonon_energy, temperature_from_variance,
    two_ion_separation, variance_from_temperature,
};
pub use trap::{secular_frequency, MathieuParams, TrapAxis, TrapConfig, TrapWarning};
pub use units::{force_unit_convert, ForceUnit, NEV_PER_UM_IN_NEWTON};
