//! Crate-wide error type.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unstable trap configuration: a + q^2/2 = {value} must be positive")]
    UnstableTrap { value: f64 },

    #[error("invalid {what}: {message}")]
    InvalidInput { what: &'static str, message: String },

    #[error("unknown force unit `{0}` (expected one of: N, neV/um, eV/m)")]
    UnknownForceUnit(String),

    #[error("time step {dt:.3e} s exceeds accuracy bound {max:.3e} s (period/50)")]
    TimeStepTooLarge { dt: f64, max: f64 },

    #[error("non-finite state at step {step} (t = {time:.6e} s); check model parameters")]
    NonFiniteState { step: usize, time: f64 },

    #[error("steady-state amplitude undefined: zero damping on resonance")]
    UndampedResonance,

    #[error("closed-form steady state requires a harmonic model (anharmonicity = 0)")]
    AnharmonicModel,

    #[error("steady state did not converge: amplitude drift {drift:.2}% over the last window")]
    SteadyStateNotConverged { drift: f64 },

    #[error("operation requires active cooling (cooling_on = true)")]
    CoolingRequired,

    #[error("expected photon count {value:.3e} exceeds the counter range")]
    CountOverflow { value: f64 },

    #[error("requested rows {lo}..{hi} fall outside the sensor (height {height})")]
    RowsOutsideSensor { lo: usize, hi: usize, height: usize },

    #[error("degenerate fit input: {0}")]
    DegenerateData(String),

    #[error("fit did not converge after {iterations} iterations (chi2 = {chi_square:.6e})")]
    FitDidNotConverge { iterations: usize, chi_square: f64 },

    #[error("rank-deficient design matrix: {0}")]
    RankDeficient(String),

    #[error("off-resonance variances have zero spread; SNR undefined")]
    ZeroNoiseSpread,

    #[error("unknown fit parameter `{0}`")]
    UnknownParameter(String),

    #[error("config field `{field}`: {message}")]
    ConfigValidation { field: String, message: String },

    #[error("unknown scenario id `{0}`")]
    UnknownScenario(String),

    #[error("no reference entry for checked quantity `{0}`")]
    MissingReferenceEntry(String),

    #[error("failed to parse {what}: {message}")]
    Parse { what: String, message: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn invalid(what: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidInput {
            what,
            message: message.into(),
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }
}
