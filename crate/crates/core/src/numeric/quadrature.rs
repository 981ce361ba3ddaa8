//! Gauss–Legendre nodes and an adaptive Simpson rule.

use crate::real::{real, Real};

/// Gauss–Legendre quadrature rule on [-1, 1].
///
/// Nodes are found by Newton iteration on the Legendre polynomial; for the
/// orders used here (<= 512) this converges in a handful of steps.
#[derive(Debug, Clone)]
pub struct GaussLegendre<T> {
    nodes: Vec<T>,
    weights: Vec<T>,
}

impl<T: Real> GaussLegendre<T> {
    pub fn new(order: usize) -> Self {
        assert!(order >= 2, "quadrature order must be at least 2");
        let n = order;
        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        let nf = real::<T>(n as f64);
        for i in 0..(n + 1) / 2 {
            // Chebyshev-based initial guess.
            let guess = (real::<T>(std::f64::consts::PI) * (real::<T>(i as f64) + real(0.75))
                / (nf + real(0.5)))
            .cos();
            let mut x = guess;
            let mut dp = T::zero();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x = x - dx;
                if dx.abs() <= T::epsilon() * real(4.0) {
                    break;
                }
            }
            let w = real::<T>(2.0) / ((T::one() - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrates `f` over [a, b].
    pub fn integrate<F: Fn(T) -> T>(&self, a: T, b: T, f: F) -> T {
        let half = (b - a) * real(0.5);
        let mid = (b + a) * real(0.5);
        let mut acc = T::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    /// Nodes and weights mapped onto [a, b].
    pub fn mapped(&self, a: T, b: T) -> impl Iterator<Item = (T, T)> + '_ {
        let half = (b - a) * real::<T>(0.5);
        let mid = (b + a) * real::<T>(0.5);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, w * half))
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }
}

fn legendre_with_derivative<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = real::<T>(k as f64);
        let p2 = ((real::<T>(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = real::<T>(n as f64);
    let d = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, d)
}

/// Adaptive Simpson integration of `f` over [a, b] to absolute tolerance `tol`.
pub fn adaptive_simpson<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, tol: T) -> T {
    let c = (a + b) * real(0.5);
    let fa = f(a);
    let fb = f(b);
    let fc = f(c);
    let whole = simpson(a, b, fa, fc, fb);
    recurse(f, a, b, fa, fc, fb, whole, tol, 28)
}

fn simpson<T: Real>(a: T, b: T, fa: T, fc: T, fb: T) -> T {
    (b - a) / real::<T>(6.0) * (fa + real::<T>(4.0) * fc + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    b: T,
    fa: T,
    fc: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
) -> T {
    let c = (a + b) * real::<T>(0.5);
    let d = (a + c) * real::<T>(0.5);
    let e = (c + b) * real::<T>(0.5);
    let fd = f(d);
    let fe = f(e);
    let left = simpson(a, c, fa, fd, fc);
    let right = simpson(c, b, fc, fe, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= real::<T>(15.0) * tol {
        left + right + delta / real(15.0)
    } else {
        let half_tol = tol * real(0.5);
        recurse(f, a, c, fa, fd, fc, left, half_tol, depth - 1)
            + recurse(f, c, b, fc, fe, fb, right, half_tol, depth - 1)
    }
}
