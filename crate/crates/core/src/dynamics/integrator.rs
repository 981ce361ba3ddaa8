//! Fixed-step RK4 core with an end-of-step stochastic velocity kick.
//!
//! The deterministic part of the equation of motion advances with classical
//! RK4; the cooling bath and the white-noise drive enter as independent
//! Gaussian velocity kicks per step (Euler-Maruyama treatment):
//!
//! * cooling bath: variance 4 gamma k_B T_D / m * dt, which balances the
//!   -2 gamma v damping at m <v^2> = k_B T_D;
//! * noise drive: variance 4 zeta V^2 / m * dt, which grows the undamped
//!   energy at 2 zeta V^2 J/s and hence the ensemble position variance as
//!   sigma_z^2(t) = 2 zeta V^2 / (m omega_z^2) * t.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::physics::constants::BOLTZMANN;
use crate::real::{real, Real};

use super::model::{OscillatorModel, SimConfig, Trajectory};

/// State at the end of an integration run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinalState<T> {
    pub time: T,
    pub position: T,
    pub velocity: T,
    pub steps: usize,
}

struct Rates<T> {
    neg_two_gamma: T,
    omega_sq: T,
    alpha: T,
    drive_accel: T,
    drive_omega: T,
    drive_phase: T,
    dc_accel: T,
}

impl<T: Real> Rates<T> {
    fn from_model(model: &OscillatorModel<T>) -> Self {
        let m = model.species.mass();
        Rates {
            neg_two_gamma: -real::<T>(2.0) * model.effective_damping(),
            omega_sq: model.angular_frequency * model.angular_frequency,
            alpha: model.anharmonicity,
            drive_accel: model.drive.dipole_force / m,
            drive_omega: model.drive.dipole_angular_frequency,
            drive_phase: model.drive.dipole_phase,
            dc_accel: model.drive.dc_force / m,
        }
    }

    #[inline]
    fn accel(&self, t: T, x: T, v: T) -> T {
        let mut a = self.neg_two_gamma * v - self.omega_sq * x + self.dc_accel;
        if self.alpha != T::zero() {
            a = a - self.alpha * x * x * x;
        }
        if self.drive_accel != T::zero() {
            a = a + self.drive_accel * (self.drive_omega * t + self.drive_phase).cos();
        }
        a
    }
}

/// Integrates the model, invoking `observe(record_index, t, position, velocity)`
/// at every `record_stride`-th step (step 0 included).
pub fn integrate_observed<T, F>(
    model: &OscillatorModel<T>,
    sim: &SimConfig<T>,
    mut observe: F,
) -> Result<FinalState<T>>
where
    T: Real,
    F: FnMut(usize, T, T, T),
{
    model.validate()?;
    sim.validate_for(model)?;
    let rates = Rates::from_model(model);
    let dt = sim.time_step;
    let half_dt = dt * real(0.5);
    let sixth_dt = dt / real(6.0);
    let steps = sim.steps();

    let m = model.species.mass();
    let mut kick_variance = T::zero();
    if model.cooling_on && model.doppler_temperature > T::zero() {
        kick_variance += real::<T>(4.0) * model.damping_rate * real::<T>(BOLTZMANN)
            * model.doppler_temperature
            / m
            * dt;
    }
    if model.drive.noise_amplitude > T::zero() && model.drive.noise_coupling > T::zero() {
        // 2 * noise_power / m * dt, with noise_power = 2 zeta V^2
        kick_variance += real::<T>(2.0) * model.drive.noise_power() / m * dt;
    }
    let kick_sigma = kick_variance.sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(sim.seed);

    let mut x = sim.initial_position;
    let mut v = sim.initial_velocity;
    let mut record_index = 0usize;
    for step in 0..steps {
        let t = dt * real(step as f64);
        if step % sim.record_stride == 0 {
            observe(record_index, t, x, v);
            record_index += 1;
        }

        let k1x = v;
        let k1v = rates.accel(t, x, v);
        let k2x = v + half_dt * k1v;
        let k2v = rates.accel(t + half_dt, x + half_dt * k1x, v + half_dt * k1v);
        let k3x = v + half_dt * k2v;
        let k3v = rates.accel(t + half_dt, x + half_dt * k2x, v + half_dt * k2v);
        let k4x = v + dt * k3v;
        let k4v = rates.accel(t + dt, x + dt * k3x, v + dt * k3v);
        let two = real::<T>(2.0);
        x = x + sixth_dt * (k1x + two * k2x + two * k3x + k4x);
        v = v + sixth_dt * (k1v + two * k2v + two * k3v + k4v);

        if kick_sigma > T::zero() {
            v = v + kick_sigma * T::standard_normal(&mut rng);
        }

        if !(x.is_finite() && v.is_finite()) {
            return Err(Error::NonFiniteState {
                step,
                time: (t + dt).to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let end = dt * real(steps as f64);
    if steps % sim.record_stride == 0 {
        observe(record_index, end, x, v);
    }
    Ok(FinalState {
        time: end,
        position: x,
        velocity: v,
        steps,
    })
}

/// Integrates the model and records a [`Trajectory`].
pub fn integrate<T: Real>(model: &OscillatorModel<T>, sim: &SimConfig<T>) -> Result<Trajectory<T>> {
    let capacity = sim.steps() / sim.record_stride + 2;
    let mut times = Vec::with_capacity(capacity);
    let mut positions = Vec::with_capacity(capacity);
    let mut velocities = Vec::with_capacity(capacity);
    integrate_observed(model, sim, |_, t, x, v| {
        times.push(t);
        positions.push(x);
        velocities.push(v);
    })?;
    Ok(Trajectory {
        times,
        positions,
        velocities,
        seed: sim.seed,
        model: *model,
    })
}

/// Free decay after the drive is removed at t = 0.
///
/// The dipole drive is forced to zero and the ion starts at the given
/// amplitude; cooling must be on so the envelope decays as exp(-gamma t)
/// toward the thermal floor.
pub fn ring_down<T: Real>(
    model: &OscillatorModel<T>,
    initial_amplitude: T,
    sim: &SimConfig<T>,
) -> Result<Trajectory<T>> {
    if !model.cooling_on {
        return Err(Error::CoolingRequired);
    }
    let mut released = *model;
    released.drive.dipole_force = T::zero();
    let sim = sim.with_initial_state(initial_amplitude, T::zero());
    integrate(&released, &sim)
}

/// Evolution with the cooling lasers off (damping treated as zero) under the
/// white-noise drive; the ensemble position variance grows linearly at
/// 2 zeta V^2 / (m omega_z^2).
pub fn heat_without_cooling<T: Real>(
    model: &OscillatorModel<T>,
    sim: &SimConfig<T>,
) -> Result<Trajectory<T>> {
    let mut heated = *model;
    heated.cooling_on = false;
    integrate(&heated, sim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::model::DriveSignal;
    use crate::physics::species::IonSpecies;
    use crate::physics::units::newtons_from_nev_per_um;
    use approx::assert_relative_eq;
    use std::f64::consts::TAU;

    fn base_model() -> OscillatorModel<f64> {
        OscillatorModel::cooled(IonSpecies::calcium_40(), TAU * 108e3, 87.6, 0.010)
    }

    #[test]
    fn undamped_oscillator_stays_on_cosine() {
        let mut m = base_model();
        m.cooling_on = false;
        m.damping_rate = 0.0;
        let rho0 = 5e-6;
        let sim = SimConfig::new(m.period() / 64.0, 10.0 * m.period(), 3)
            .with_initial_state(rho0, 0.0);
        let traj = integrate(&m, &sim).unwrap();
        let mut worst = 0.0f64;
        for (t, x) in traj.times.iter().zip(&traj.positions) {
            let expect = rho0 * (m.angular_frequency * t).cos();
            worst = worst.max((x - expect).abs() / rho0);
        }
        // RK4 phase drift at dt = period/64 stays below 1e-4 over 10 periods
        assert!(worst < 1e-4, "cosine deviation {worst}");
    }

    #[test]
    fn identical_seeds_are_bit_identical() {
        let m = base_model();
        let sim = SimConfig::for_model(&m, 0.02, 99);
        let a = integrate(&m, &sim).unwrap();
        let b = integrate(&m, &sim).unwrap();
        assert_eq!(a.positions.len(), b.positions.len());
        for (x, y) in a.positions.iter().zip(&b.positions) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        let c = integrate(&m, &sim.with_seed(100)).unwrap();
        assert!(a.positions.iter().zip(&c.positions).any(|(x, y)| x != y));
    }

    #[test]
    fn resonant_drive_reaches_closed_form_amplitude() {
        // F = 5.3 neV/um, gamma = 87.6 -> 107.6 um steady amplitude
        let mut m = base_model();
        m.doppler_temperature = 0.0;
        m.drive = DriveSignal {
            dipole_force: newtons_from_nev_per_um(5.3),
            dipole_angular_frequency: m.angular_frequency,
            dipole_phase: 0.0,
            dc_force: 0.0,
            noise_amplitude: 0.0,
            noise_coupling: 0.0,
        };
        let settle = 10.0 / m.damping_rate;
        let sim = SimConfig::new(m.period() / 64.0, settle + 40.0 * m.period(), 1);
        let mut peak = 0.0f64;
        let mut trough = 0.0f64;
        integrate_observed(&m, &sim, |_, t, x, _| {
            if t > settle {
                peak = peak.max(x);
                trough = trough.min(x);
            }
        })
        .unwrap();
        let amplitude = 0.5 * (peak - trough);
        assert_relative_eq!(amplitude, 107.63e-6, max_relative = 5e-3);
    }

    #[test]
    fn energy_decays_at_two_gamma() {
        let mut m = base_model();
        m.doppler_temperature = 0.0;
        let sim = SimConfig::new(m.period() / 256.0, 0.030, 7).with_initial_state(20e-6, 0.0);
        let traj = integrate(&m, &sim).unwrap();
        let e0 = traj.energy(0);
        let last = traj.len() - 1;
        let expected = e0 * (-2.0 * m.damping_rate * traj.times[last]).exp();
        // residual ripple on E(t) is O(gamma/omega) ~ 1e-4
        assert_relative_eq!(traj.energy(last), expected, max_relative = 1e-3);
    }

    #[test]
    fn dc_force_displaces_to_static_limit() {
        let mut m = base_model();
        m.doppler_temperature = 0.0;
        m.drive.dc_force = newtons_from_nev_per_um(42.0);
        let sim = SimConfig::for_model(&m, 0.08, 5);
        let traj = integrate(&m, &sim).unwrap();
        let expect = m.drive.dc_force / (m.species.mass() * m.angular_frequency.powi(2));
        let mean = traj.mean_position(0.05);
        assert_relative_eq!(mean, expect, max_relative = 1e-3);
        // 42 neV/um at 2 pi x 80 kHz corresponds to 402 nm; here omega differs
        assert!(expect > 0.0);
    }

    #[test]
    fn ring_down_envelope_hits_one_over_e() {
        let mut m = base_model();
        m.doppler_temperature = 1e-9; // negligible thermal floor
        let a0 = 50e-6;
        let t_e = 1.0 / m.damping_rate;
        let sim = SimConfig::new(m.period() / 64.0, t_e + 2.0 * m.period(), 11);
        let traj = ring_down(&m, a0, &sim).unwrap();
        // envelope estimate: max |rho| over the last oscillation period
        let window_start = t_e;
        let envelope = traj
            .times
            .iter()
            .zip(&traj.positions)
            .filter(|(&t, _)| t >= window_start)
            .map(|(_, &x)| x.abs())
            .fold(0.0f64, f64::max);
        assert_relative_eq!(envelope, a0 / std::f64::consts::E, max_relative = 2e-2);
    }

    #[test]
    fn ring_down_requires_cooling() {
        let mut m = base_model();
        m.cooling_on = false;
        m.damping_rate = 0.0;
        let sim = SimConfig::for_model(&m, 0.01, 1);
        assert!(matches!(
            ring_down(&m, 1e-6, &sim),
            Err(Error::CoolingRequired)
        ));
    }

    #[test]
    fn zero_noise_without_cooling_conserves_energy() {
        let mut m = base_model();
        m.cooling_on = false;
        let sim = SimConfig::for_model(&m, 0.05, 2).with_initial_state(10e-6, 0.0);
        let traj = heat_without_cooling(&m, &sim).unwrap();
        let drift = (traj.energy(traj.len() - 1) - traj.energy(0)).abs() / traj.energy(0);
        assert!(drift < 1e-2, "energy drift {drift}");
    }

    #[test]
    fn non_finite_state_is_reported() {
        let mut m = base_model();
        m.cooling_on = false;
        m.damping_rate = 0.0;
        m.anharmonicity = -1e30; // runaway softening potential
        let sim = SimConfig::for_model(&m, 0.01, 1).with_initial_state(1e-3, 0.0);
        assert!(matches!(
            integrate(&m, &sim),
            Err(Error::NonFiniteState { .. })
        ));
    }
}
