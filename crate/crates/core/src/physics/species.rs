//! Trapped-ion species parameters.

use crate::error::{Error, Result};
use crate::physics::constants::{ATOMIC_MASS_KG, ELEMENTARY_CHARGE};
use crate::real::{real, Real};

/// Mass and charge state of the trapped ion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IonSpecies<T> {
    mass: T,
    charge: u32,
}

impl<T: Real> IonSpecies<T> {
    /// New species from mass in kg and charge as a positive multiple of e.
    pub fn new(mass: T, charge: u32) -> Result<Self> {
        if !(mass > T::zero() && mass.is_finite()) {
            return Err(Error::invalid("ion species", "mass must be positive"));
        }
        if charge < 1 {
            return Err(Error::invalid("ion species", "charge must be at least 1"));
        }
        Ok(IonSpecies { mass, charge })
    }

    /// New species from mass in atomic mass units.
    pub fn from_atomic_mass(mass_u: T, charge: u32) -> Result<Self> {
        Self::new(mass_u * real(ATOMIC_MASS_KG), charge)
    }

    /// Singly charged calcium-40 (isotopic mass 39.9626 u).
    pub fn calcium_40() -> Self {
        Self::from_atomic_mass(real(39.9626), 1).expect("valid builtin species")
    }

    /// Ion mass in kg.
    pub fn mass(&self) -> T {
        self.mass
    }

    /// Charge state as a multiple of the elementary charge.
    pub fn charge(&self) -> u32 {
        self.charge
    }

    /// Total charge in coulombs.
    pub fn charge_coulombs(&self) -> T {
        real::<T>(self.charge as f64) * real(ELEMENTARY_CHARGE)
    }
}
