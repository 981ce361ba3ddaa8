//! Force-unit conversions for the neV/um convention used in weak-force sensing.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::real::{real, Real};

/// 1 neV/um expressed in newtons (exact: 1e-9 eV / 1e-6 m).
pub const NEV_PER_UM_IN_NEWTON: f64 = 1.602176634e-22;

/// 1 eV/m expressed in newtons (exact).
pub const EV_PER_M_IN_NEWTON: f64 = 1.602176634e-19;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForceUnit {
    Newton,
    NevPerUm,
    EvPerM,
}

impl ForceUnit {
    fn in_newtons(self) -> f64 {
        match self {
            ForceUnit::Newton => 1.0,
            ForceUnit::NevPerUm => NEV_PER_UM_IN_NEWTON,
            ForceUnit::EvPerM => EV_PER_M_IN_NEWTON,
        }
    }
}

impl FromStr for ForceUnit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "N" | "n" | "newton" => Ok(ForceUnit::Newton),
            "neV/um" | "neV/µm" | "nev/um" => Ok(ForceUnit::NevPerUm),
            "eV/m" | "ev/m" => Ok(ForceUnit::EvPerM),
            other => Err(Error::UnknownForceUnit(other.to_string())),
        }
    }
}

/// Exact conversion between force units.
pub fn force_unit_convert<T: Real>(value: T, from: ForceUnit, to: ForceUnit) -> T {
    value * real(from.in_newtons() / to.in_newtons())
}

/// Shorthand: neV/um -> N.
pub fn newtons_from_nev_per_um<T: Real>(value: T) -> T {
    force_unit_convert(value, ForceUnit::NevPerUm, ForceUnit::Newton)
}

/// Shorthand: N -> neV/um.
pub fn nev_per_um_from_newtons<T: Real>(value: T) -> T {
    force_unit_convert(value, ForceUnit::Newton, ForceUnit::NevPerUm)
}
