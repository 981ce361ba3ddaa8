//! CODATA 2018 physical constants.
//!
//! The SI-exact values (k_B, e) are exact by definition; the others carry
//! far more digits than any tolerance in this crate.

use crate::real::{real, Real};

/// Boltzmann constant (J/K), exact.
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Reduced Planck constant (J s).
pub const REDUCED_PLANCK: f64 = 1.054571817e-34;

/// Vacuum permittivity (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.8541878128e-12;

/// Elementary charge (C), exact.
pub const ELEMENTARY_CHARGE: f64 = 1.602176634e-19;

/// One electronvolt (J), exact.
pub const ELECTRONVOLT: f64 = 1.602176634e-19;

/// Atomic mass unit (kg).
pub const ATOMIC_MASS_KG: f64 = 1.66053906660e-27;

/// Immutable bundle of the constants, in the working scalar type.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants<T> {
    boltzmann: T,
    reduced_planck: T,
    vacuum_permittivity: T,
    elementary_charge: T,
    electronvolt: T,
}

impl<T: Real> PhysicalConstants<T> {
    pub fn new() -> Self {
        PhysicalConstants {
            boltzmann: real(BOLTZMANN),
            reduced_planck: real(REDUCED_PLANCK),
            vacuum_permittivity: real(VACUUM_PERMITTIVITY),
            elementary_charge: real(ELEMENTARY_CHARGE),
            electronvolt: real(ELECTRONVOLT),
        }
    }

    pub fn boltzmann(&self) -> T {
        self.boltzmann
    }

    pub fn reduced_planck(&self) -> T {
        self.reduced_planck
    }

    pub fn vacuum_permittivity(&self) -> T {
        self.vacuum_permittivity
    }

    pub fn elementary_charge(&self) -> T {
        self.elementary_charge
    }

    pub fn electronvolt(&self) -> T {
        self.electronvolt
    }
}

impl<T: Real> Default for PhysicalConstants<T> {
    fn default() -> Self {
        Self::new()
    }
}
