//! Oscillator model, drive terms and simulation configuration.

use crate::error::{Error, Result};
use crate::physics::constants::BOLTZMANN;
use crate::physics::species::IonSpecies;
use crate::real::{real, Real};

/// Laser-cooling parameters. The transition linewidths are descriptive
/// metadata; the dynamics only consume the damping rate and the Doppler
/// limit temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoolingParams<T> {
    /// Amplitude damping rate (1/s), the gamma_z of the equation of motion.
    pub damping_rate: T,
    /// Doppler limit temperature (K).
    pub doppler_temperature: T,
    /// Natural linewidth of the blue cooling transition (rad/s).
    pub linewidth_blue: T,
    /// Natural linewidth of the red repump transition (rad/s).
    pub linewidth_red: T,
}

impl<T: Real> CoolingParams<T> {
    pub fn new(damping_rate: T, doppler_temperature: T) -> Result<Self> {
        if !(damping_rate > T::zero()) {
            return Err(Error::invalid("cooling params", "damping rate must be positive"));
        }
        if !(doppler_temperature > T::zero()) {
            return Err(Error::invalid(
                "cooling params",
                "Doppler temperature must be positive",
            ));
        }
        Ok(CoolingParams {
            damping_rate,
            doppler_temperature,
            linewidth_blue: real(std::f64::consts::TAU * 21.58e6),
            linewidth_red: real(std::f64::consts::TAU * 1.35e6),
        })
    }
}

/// External forcing: harmonic dipole drive, DC force and white noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveSignal<T> {
    /// Harmonic drive amplitude (N).
    pub dipole_force: T,
    /// Harmonic drive angular frequency (rad/s).
    pub dipole_angular_frequency: T,
    /// Harmonic drive phase (rad).
    pub dipole_phase: T,
    /// Static force (N).
    pub dc_force: T,
    /// White-noise amplitude (V).
    pub noise_amplitude: T,
    /// Noise coupling zeta (J s^-1 V^-2); zeta V^2 is the heating rate.
    pub noise_coupling: T,
}

impl<T: Real> DriveSignal<T> {
    pub fn none() -> Self {
        DriveSignal {
            dipole_force: T::zero(),
            dipole_angular_frequency: T::zero(),
            dipole_phase: T::zero(),
            dc_force: T::zero(),
            noise_amplitude: T::zero(),
            noise_coupling: T::zero(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dipole_force < T::zero() {
            return Err(Error::invalid("drive", "dipole force must be non-negative"));
        }
        if self.noise_amplitude < T::zero() || self.noise_coupling < T::zero() {
            return Err(Error::invalid(
                "drive",
                "noise amplitude and coupling must be non-negative",
            ));
        }
        Ok(())
    }

    /// Heating power injected by the noise drive, 2 zeta V^2 (J/s).
    ///
    /// This is the rate at which the mean motional energy grows with the
    /// damping off; it reproduces the linear variance law
    /// sigma_z^2(t) = 2 zeta V^2 / (m omega_z^2) * t.
    pub fn noise_power(&self) -> T {
        real::<T>(2.0) * self.noise_coupling * self.noise_amplitude * self.noise_amplitude
    }
}

impl<T: Real> Default for DriveSignal<T> {
    fn default() -> Self {
        Self::none()
    }
}

/// Soft diagnostics for [`OscillatorModel::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelWarning {
    /// gamma_z > omega_z / 10: outside the underdamped regime assumed here.
    WeaklyDampedAssumptionStrained,
}

/// Axial oscillator with cooling, drive and anharmonicity.
///
/// Equation of motion (acceleration form):
/// rho'' = -2 gamma rho' - omega^2 rho - alpha rho^3
///         + (F_e/m) cos(omega_dip t + phi) + F_dc/m + noise
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorModel<T> {
    pub species: IonSpecies<T>,
    /// Secular angular frequency omega_z (rad/s).
    pub angular_frequency: T,
    /// Amplitude damping rate gamma_z (1/s); active only while cooling is on.
    pub damping_rate: T,
    /// Cubic restoring coefficient alpha (m^-2 s^-2); softening for alpha < 0.
    pub anharmonicity: T,
    pub drive: DriveSignal<T>,
    pub cooling_on: bool,
    /// Doppler limit temperature (K) of the cooling bath.
    pub doppler_temperature: T,
}

impl<T: Real> OscillatorModel<T> {
    /// Cooled, undriven oscillator.
    pub fn cooled(
        species: IonSpecies<T>,
        angular_frequency: T,
        damping_rate: T,
        doppler_temperature: T,
    ) -> Self {
        OscillatorModel {
            species,
            angular_frequency,
            damping_rate,
            anharmonicity: T::zero(),
            drive: DriveSignal::none(),
            cooling_on: true,
            doppler_temperature,
        }
    }

    pub fn with_drive(mut self, drive: DriveSignal<T>) -> Self {
        self.drive = drive;
        self
    }

    pub fn validate(&self) -> Result<Vec<ModelWarning>> {
        if !(self.angular_frequency > T::zero()) {
            return Err(Error::invalid("oscillator", "angular frequency must be positive"));
        }
        if self.damping_rate < T::zero() {
            return Err(Error::invalid("oscillator", "damping rate must be non-negative"));
        }
        if self.cooling_on && !(self.damping_rate > T::zero()) {
            return Err(Error::invalid(
                "oscillator",
                "cooling_on requires a positive damping rate",
            ));
        }
        if self.doppler_temperature < T::zero() {
            return Err(Error::invalid("oscillator", "temperature must be non-negative"));
        }
        self.drive.validate()?;
        let mut warnings = Vec::new();
        if self.damping_rate > self.angular_frequency / real(10.0) {
            warnings.push(ModelWarning::WeaklyDampedAssumptionStrained);
        }
        Ok(warnings)
    }

    /// Oscillation period 2 pi / omega_z.
    pub fn period(&self) -> T {
        T::TAU() / self.angular_frequency
    }

    /// Damping rate as seen by the integrator (zero while cooling is off).
    pub fn effective_damping(&self) -> T {
        if self.cooling_on {
            self.damping_rate
        } else {
            T::zero()
        }
    }

    /// Thermal position variance of the cooled steady state, k_B T / (m omega^2).
    pub fn thermal_position_variance(&self) -> T {
        real::<T>(BOLTZMANN) * self.doppler_temperature
            / (self.species.mass() * self.angular_frequency * self.angular_frequency)
    }
}

/// Fixed-step integration setup.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig<T> {
    /// Integration step (s); must satisfy dt <= 2 pi / (50 omega_z).
    pub time_step: T,
    /// Total simulated time (s).
    pub duration: T,
    pub seed: u64,
    /// Initial position (m).
    pub initial_position: T,
    /// Initial velocity (m/s).
    pub initial_velocity: T,
    /// Record every n-th step.
    pub record_stride: usize,
}

impl<T: Real> SimConfig<T> {
    pub fn new(time_step: T, duration: T, seed: u64) -> Self {
        SimConfig {
            time_step,
            duration,
            seed,
            initial_position: T::zero(),
            initial_velocity: T::zero(),
            record_stride: 1,
        }
    }

    /// Step at period/64 and a stride that keeps recordings below ~2^17 samples.
    pub fn for_model(model: &OscillatorModel<T>, duration: T, seed: u64) -> Self {
        let dt = model.period() / real(64.0);
        let steps = (duration / dt).to_f64().unwrap_or(0.0).ceil().max(1.0) as usize;
        let stride = (steps / (1 << 17)).max(1);
        SimConfig {
            time_step: dt,
            duration,
            seed,
            initial_position: T::zero(),
            initial_velocity: T::zero(),
            record_stride: stride,
        }
    }

    pub fn with_initial_state(mut self, position: T, velocity: T) -> Self {
        self.initial_position = position;
        self.initial_velocity = velocity;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate_for(&self, model: &OscillatorModel<T>) -> Result<()> {
        let max_dt = model.period() / real(50.0);
        if !(self.time_step > T::zero()) || self.time_step > max_dt {
            return Err(Error::TimeStepTooLarge {
                dt: self.time_step.to_f64().unwrap_or(f64::NAN),
                max: max_dt.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(self.duration > T::zero()) {
            return Err(Error::invalid("sim config", "duration must be positive"));
        }
        if self.record_stride == 0 {
            return Err(Error::invalid("sim config", "record_stride must be at least 1"));
        }
        Ok(())
    }

    pub fn steps(&self) -> usize {
        let n = (self.duration / self.time_step).to_f64().unwrap_or(0.0).round();
        (n as usize).max(1)
    }
}

/// Recorded time series from one integration run.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T> {
    pub times: Vec<T>,
    pub positions: Vec<T>,
    pub velocities: Vec<T>,
    pub seed: u64,
    pub model: OscillatorModel<T>,
}

impl<T: Real> Trajectory<T> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Mean position over samples with t >= after.
    pub fn mean_position(&self, after: T) -> T {
        let (sum, n) = self
            .times
            .iter()
            .zip(&self.positions)
            .filter(|(&t, _)| t >= after)
            .fold((T::zero(), 0usize), |(s, n), (_, &x)| (s + x, n + 1));
        if n == 0 {
            T::zero()
        } else {
            sum / real(n as f64)
        }
    }

    /// Mean squared velocity over samples with t >= after.
    pub fn mean_square_velocity(&self, after: T) -> T {
        mean_square(self.times.iter().zip(&self.velocities), after)
    }

    /// Mean squared position over samples with t >= after.
    pub fn mean_square_position(&self, after: T) -> T {
        mean_square(self.times.iter().zip(&self.positions), after)
    }

    /// Total mechanical energy at a recorded sample.
    pub fn energy(&self, index: usize) -> T {
        let m = self.model.species.mass();
        let w = self.model.angular_frequency;
        let v = self.velocities[index];
        let x = self.positions[index];
        real::<T>(0.5) * m * (v * v + w * w * x * x)
    }

    /// Temperature estimate m <v^2> / k_B over samples with t >= after.
    pub fn temperature_estimate(&self, after: T) -> T {
        self.model.species.mass() * self.mean_square_velocity(after) / real(BOLTZMANN)
    }
}

fn mean_square<'a, T: Real>(it: impl Iterator<Item = (&'a T, &'a T)>, after: T) -> T {
    let (sum, n) = it
        .filter(|(&t, _)| t >= after)
        .fold((T::zero(), 0usize), |(s, n), (_, &x)| (s + x * x, n + 1));
    if n == 0 {
        T::zero()
    } else {
        sum / real(n as f64)
    }
}
