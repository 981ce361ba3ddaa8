//! Thermometry and two-ion calibration formulas.

use crate::error::{Error, Result};
use crate::physics::constants::{BOLTZMANN, REDUCED_PLANCK, VACUUM_PERMITTIVITY};
use crate::physics::species::IonSpecies;
use crate::real::{real, Real};

/// Equilibrium separation of two identical ions in the same well:
/// (e^2 / (2 pi eps0 m omega_z^2))^(1/3).
pub fn two_ion_separation<T: Real>(species: &IonSpecies<T>, angular_frequency: T) -> Result<T> {
    if !(angular_frequency > T::zero()) {
        return Err(Error::invalid(
            "two-ion separation",
            "angular frequency must be positive",
        ));
    }
    let e = species.charge_coulombs();
    let denom = real::<T>(2.0 * std::f64::consts::PI)
        * real::<T>(VACUUM_PERMITTIVITY)
        * species.mass()
        * angular_frequency
        * angular_frequency;
    Ok((e * e / denom).cbrt())
}

/// Object-plane pixel size from a known separation and its span in pixels.
pub fn effective_pixel_size<T: Real>(separation: T, pixel_distance: T) -> Result<T> {
    if !(pixel_distance > T::zero()) {
        return Err(Error::invalid(
            "effective pixel size",
            "pixel distance must be positive",
        ));
    }
    Ok(separation / pixel_distance)
}

/// Axial temperature from the position variance: T = m omega^2 sigma^2 / k_B.
pub fn temperature_from_variance<T: Real>(
    species: &IonSpecies<T>,
    angular_frequency: T,
    position_variance: T,
) -> T {
    species.mass() * angular_frequency * angular_frequency * position_variance / real(BOLTZMANN)
}

/// Inverse of [`temperature_from_variance`].
pub fn variance_from_temperature<T: Real>(
    species: &IonSpecies<T>,
    angular_frequency: T,
    temperature: T,
) -> T {
    real::<T>(BOLTZMANN) * temperature / (species.mass() * angular_frequency * angular_frequency)
}

/// Classical mean phonon number k_B T / (hbar omega).
pub fn mean_phonon_number<T: Real>(angular_frequency: T, temperature: T) -> T {
    real::<T>(BOLTZMANN) * temperature / (real::<T>(REDUCED_PLANCK) * angular_frequency)
}

/// Energy of one motional quantum, hbar omega (J).
pub fn phonon_energy<T: Real>(angular_frequency: T) -> T {
    real::<T>(REDUCED_PLANCK) * angular_frequency
}
