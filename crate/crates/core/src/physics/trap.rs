//! Paul-trap secular motion in the adiabatic approximation.

use crate::error::{Error, Result};
use crate::real::{real, Real};

/// Mathieu stability parameters for one trap axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathieuParams<T> {
    pub a: T,
    pub q: T,
}

/// Trap axis selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrapAxis {
    Axial,
    Radial,
}

/// RF trap drive and stability parameters.
///
/// The (a, q) pairs are taken as direct inputs; the mapping from electrode
/// voltages to (a, q) depends on the electrode geometry and can be supplied
/// through [`mathieu_from_geometry`] when known.
#[derive(Debug, Clone, PartialEq)]
pub struct TrapConfig<T> {
    /// RF drive angular frequency (rad/s).
    pub rf_angular_frequency: T,
    /// RF amplitude in volts peak-to-peak; descriptive metadata.
    pub rf_amplitude: Option<T>,
    /// Compensation DC voltage; descriptive metadata.
    pub dc_voltage: Option<T>,
    pub axial: MathieuParams<T>,
    pub radial: Option<MathieuParams<T>>,
}

/// Soft diagnostics raised by [`TrapConfig::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrapWarning {
    /// q > 0.5: the static pseudo-potential picture starts to strain.
    AdiabaticApproximationStrained(TrapAxis),
}

impl<T: Real> TrapConfig<T> {
    pub fn new(rf_angular_frequency: T, axial: MathieuParams<T>) -> Self {
        TrapConfig {
            rf_angular_frequency,
            rf_amplitude: None,
            dc_voltage: None,
            axial,
            radial: None,
        }
    }

    pub fn params(&self, axis: TrapAxis) -> Result<MathieuParams<T>> {
        match axis {
            TrapAxis::Axial => Ok(self.axial),
            TrapAxis::Radial => self
                .radial
                .ok_or_else(|| Error::invalid("trap config", "no radial parameters configured")),
        }
    }

    /// Checks stability invariants; returns soft warnings on success.
    pub fn validate(&self) -> Result<Vec<TrapWarning>> {
        if !(self.rf_angular_frequency > T::zero()) {
            return Err(Error::invalid(
                "trap config",
                "rf_angular_frequency must be positive",
            ));
        }
        let mut warnings = Vec::new();
        let axes = [(TrapAxis::Axial, Some(self.axial)), (TrapAxis::Radial, self.radial)];
        for (axis, params) in axes {
            let Some(p) = params else { continue };
            let q = p.q.abs();
            if !(q > T::zero() && q < real(0.908)) {
                return Err(Error::invalid(
                    "trap config",
                    format!("|q| = {q} outside the nominal stability range (0, 0.908)"),
                ));
            }
            let stability = p.a + p.q * p.q * real(0.5);
            if !(stability > T::zero()) {
                return Err(Error::UnstableTrap {
                    value: stability.to_f64().unwrap_or(f64::NAN),
                });
            }
            if q > real(0.5) {
                warnings.push(TrapWarning::AdiabaticApproximationStrained(axis));
            }
        }
        Ok(warnings)
    }
}

/// Secular angular frequency for one axis: (omega_RF / 2) sqrt(a + q^2/2).
pub fn secular_frequency<T: Real>(trap: &TrapConfig<T>, axis: TrapAxis) -> Result<T> {
    let p = trap.params(axis)?;
    let stability = p.a + p.q * p.q * real(0.5);
    if !(stability > T::zero()) {
        return Err(Error::UnstableTrap {
            value: stability.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(trap.rf_angular_frequency * real::<T>(0.5) * stability.sqrt())
}

/// Derives (a, q) from electrode drive values through a user-supplied
/// geometry map `f(V_RF, U_DC, omega_RF) -> (a, q)`.
pub fn mathieu_from_geometry<T, F>(geometry: F, v_rf: T, u_dc: T, rf_angular_frequency: T) -> MathieuParams<T>
where
    T: Real,
    F: Fn(T, T, T) -> (T, T),
{
    let (a, q) = geometry(v_rf, u_dc, rf_angular_frequency);
    MathieuParams { a, q }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::TAU;

    fn trap(a: f64, q: f64) -> TrapConfig<f64> {
        TrapConfig::new(TAU * 1.47e6, MathieuParams { a, q })
    }

    #[test]
    fn measured_operating_points() {
        // a_z = -0.0088, q_z = 0.25 at omega_RF = 2 pi x 1.47 MHz
        let w = secular_frequency(&trap(-0.0088, 0.25), TrapAxis::Axial).unwrap();
        assert_relative_eq!(w / TAU, 110_127.4, max_relative = 1e-5);
        assert!((w / TAU - 108e3).abs() / 108e3 < 0.03);

        // a_z = -0.0184 for the electrostatic measurements
        let w = secular_frequency(&trap(-0.0184, 0.25), TrapAxis::Axial).unwrap();
        assert_relative_eq!(w / TAU, 83_318.0, max_relative = 1e-5);
        assert!((w / TAU - 80e3).abs() / 80e3 < 0.05);
    }

    #[test]
    fn pure_rf_pseudopotential_limit() {
        // a = 0: omega = omega_RF q / (2 sqrt(2))
        let cfg = trap(0.0, 0.2);
        let w = secular_frequency(&cfg, TrapAxis::Axial).unwrap();
        let expect = cfg.rf_angular_frequency * 0.2 / (2.0 * 2.0f64.sqrt());
        assert_relative_eq!(w, expect, max_relative = 1e-14);
    }

    #[test]
    fn unstable_configuration_is_an_error() {
        let res = secular_frequency(&trap(-0.05, 0.25), TrapAxis::Axial);
        assert!(matches!(res, Err(Error::UnstableTrap { .. })));
        assert!(trap(-0.05, 0.25).validate().is_err());
    }

    #[test]
    fn adiabatic_warning_above_half_q() {
        let warnings = trap(-0.001, 0.6).validate().unwrap();
        assert_eq!(
            warnings,
            vec![TrapWarning::AdiabaticApproximationStrained(TrapAxis::Axial)]
        );
        assert!(trap(-0.001, 0.3).validate().unwrap().is_empty());
    }

    #[test]
    fn q_outside_stability_band_rejected() {
        assert!(trap(0.0, 0.95).validate().is_err());
        assert!(trap(0.0, 0.0).validate().is_err());
    }

    #[test]
    fn geometry_map_feeds_mathieu_params() {
        // toy linear geometry: q ~ V_RF / omega_RF^2, a ~ -U_DC
        let geometry = |v: f64, u: f64, w: f64| (-2e-3 * u, 2.1e10 * v / (w * w));
        let p = mathieu_from_geometry(geometry, 1000.0, 4.4, TAU * 1.47e6);
        assert!(p.q > 0.0 && p.q < 0.908);
        assert!(p.a < 0.0);
    }

    #[test]
    fn monotone_in_q_and_linear_in_rf() {
        let base = secular_frequency(&trap(-0.0088, 0.25), TrapAxis::Axial).unwrap();
        let higher_q = secular_frequency(&trap(-0.0088, 0.30), TrapAxis::Axial).unwrap();
        assert!(higher_q > base);
        let mut cfg = trap(-0.0088, 0.25);
        cfg.rf_angular_frequency *= 2.0;
        let scaled = secular_frequency(&cfg, TrapAxis::Axial).unwrap();
        assert_relative_eq!(scaled, 2.0 * base, max_relative = 1e-14);
    }
}
