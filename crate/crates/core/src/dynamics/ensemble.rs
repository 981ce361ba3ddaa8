//! Ensembles of independent runs, fanned out over worker threads.
//!
//! Seeds map one-to-one onto runs and results are merged in seed order, so
//! an ensemble is deterministic regardless of thread count.

use rayon::prelude::*;

use crate::error::Result;
use crate::physics::constants::BOLTZMANN;
use crate::real::{real, Real};

use super::integrator::{integrate, integrate_observed};
use super::model::{OscillatorModel, SimConfig, Trajectory};

/// Runs one trajectory per seed.
pub fn run_ensemble<T: Real>(
    model: &OscillatorModel<T>,
    sim: &SimConfig<T>,
    seeds: &[u64],
) -> Result<Vec<Trajectory<T>>> {
    seeds
        .par_iter()
        .map(|&seed| integrate(model, &sim.with_seed(seed)))
        .collect()
}

/// Second-moment accumulators over an equilibrated ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalStats<T> {
    pub mean_square_velocity: T,
    pub mean_square_position: T,
    pub mean_position: T,
    pub samples: usize,
}

impl<T: Real> ThermalStats<T> {
    /// Temperature estimate m <v^2> / k_B.
    pub fn temperature(&self, model: &OscillatorModel<T>) -> T {
        model.species.mass() * self.mean_square_velocity / real(BOLTZMANN)
    }

    /// Temperature estimate from the position spread, m omega^2 <rho^2> / k_B.
    pub fn temperature_from_position(&self, model: &OscillatorModel<T>) -> T {
        model.species.mass() * model.angular_frequency * model.angular_frequency
            * self.mean_square_position
            / real(BOLTZMANN)
    }
}

/// Streams second moments over an ensemble, discarding samples before
/// `discard` seconds of each run. Memory use is independent of duration.
pub fn ensemble_thermal_stats<T: Real>(
    model: &OscillatorModel<T>,
    sim: &SimConfig<T>,
    seeds: &[u64],
    discard: T,
) -> Result<ThermalStats<T>> {
    let partials: Result<Vec<(T, T, T, usize)>> = seeds
        .par_iter()
        .map(|&seed| {
            let mut v2 = T::zero();
            let mut x2 = T::zero();
            let mut x1 = T::zero();
            let mut n = 0usize;
            integrate_observed(model, &sim.with_seed(seed), |_, t, x, v| {
                if t >= discard {
                    v2 += v * v;
                    x2 += x * x;
                    x1 += x;
                    n += 1;
                }
            })?;
            Ok((v2, x2, x1, n))
        })
        .collect();
    let mut v2 = T::zero();
    let mut x2 = T::zero();
    let mut x1 = T::zero();
    let mut n = 0usize;
    for (pv2, px2, px1, pn) in partials? {
        v2 += pv2;
        x2 += px2;
        x1 += px1;
        n += pn;
    }
    let norm = real::<T>(n.max(1) as f64);
    Ok(ThermalStats {
        mean_square_velocity: v2 / norm,
        mean_square_position: x2 / norm,
        mean_position: x1 / norm,
        samples: n,
    })
}

/// Ensemble position variance sampled on the recording grid.
///
/// Returns (time, variance across seeds) for every recorded index.
pub fn position_variance_vs_time<T: Real>(
    model: &OscillatorModel<T>,
    sim: &SimConfig<T>,
    seeds: &[u64],
) -> Result<Vec<(T, T)>> {
    let per_seed: Result<Vec<(Vec<T>, Vec<T>)>> = seeds
        .par_iter()
        .map(|&seed| {
            let mut times = Vec::new();
            let mut xs = Vec::new();
            integrate_observed(model, &sim.with_seed(seed), |_, t, x, _| {
                times.push(t);
                xs.push(x);
            })?;
            Ok((times, xs))
        })
        .collect();
    let per_seed = per_seed?;
    let n_times = per_seed.iter().map(|(t, _)| t.len()).min().unwrap_or(0);
    let n_seeds = per_seed.len();
    let mut out = Vec::with_capacity(n_times);
    for i in 0..n_times {
        let mut sum = T::zero();
        let mut sum_sq = T::zero();
        for (_, xs) in &per_seed {
            let x = xs[i];
            sum += x;
            sum_sq += x * x;
        }
        let nf = real::<T>(n_seeds as f64);
        let mean = sum / nf;
        let var = sum_sq / nf - mean * mean;
        out.push((per_seed[0].0[i], var));
    }
    Ok(out)
}
