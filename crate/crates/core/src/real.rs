//! Scalar abstraction for the numerical core.
//!
//! All physics, dynamics, imaging and fitting routines are generic over a
//! floating-point scalar so the same code runs in `f32` or `f64`. Concrete
//! `f64` aliases for the main types live at the crate root.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use rand::Rng;
use rand_distr::{Distribution, Poisson, StandardNormal};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
    /// Draws a standard-normal variate from `rng`.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Draws a Poisson count with the given mean; a non-positive mean yields 0.
    fn poisson_count<R: Rng + ?Sized>(rng: &mut R, mean: Self) -> u64;
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                StandardNormal.sample(rng)
            }

            fn poisson_count<R: Rng + ?Sized>(rng: &mut R, mean: Self) -> u64 {
                if mean <= 0.0 {
                    return 0;
                }
                let draw: $t = Poisson::new(mean)
                    .expect("positive finite Poisson mean")
                    .sample(rng);
                draw as u64
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn real<T: Real>(value: f64) -> T {
    T::from_f64(value).expect("literal representable in scalar type")
}
