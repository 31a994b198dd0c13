//! Flat-space kernels. Geodesics are straight lines, transport is the
//! identity and all curvature terms vanish.

use crate::linalg::{add, axpy, norm, scale, sub};

pub fn exp(p: &[f64], v: &[f64]) -> Vec<f64> {
    add(p, v)
}

pub fn log(p: &[f64], q: &[f64]) -> Vec<f64> {
    sub(q, p)
}

pub fn dist(p: &[f64], q: &[f64]) -> f64 {
    norm(&sub(q, p))
}

pub fn geodesic(p: &[f64], q: &[f64], t: f64) -> Vec<f64> {
    axpy(p, t, &sub(q, p))
}

pub fn dgeodesic_start(t: f64, v: &[f64]) -> Vec<f64> {
    scale(v, 1.0 - t)
}

/// J(1) for the Jacobi field along `s ↦ p + s x` with J(0) = j0, J'(0) = dj0.
pub fn jacobi_ivp(j0: &[f64], dj0: &[f64]) -> Vec<f64> {
    add(j0, dj0)
}

pub fn frechet(points: &[&[f64]], weights: &[f64]) -> Vec<f64> {
    let dim = points[0].len();
    let total: f64 = weights.iter().sum();
    let mut mean = vec![0.0; dim];
    for (p, w) in points.iter().zip(weights) {
        for (m, x) in mean.iter_mut().zip(p.iter()) {
            *m += w * x;
        }
    }
    for m in mean.iter_mut() {
        *m /= total;
    }
    mean
}
