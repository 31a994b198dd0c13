//! Deterministic random sampling helpers for tests and synthetic data.
//!
//! All functions take a caller-provided RNG so that seeded generators give
//! reproducible draws.

use rand::Rng;

use crate::linalg::{self, dot};
use crate::manifold::Manifold;
use crate::point::{Point, Tangent};

/// Uniform-ish random point: coordinates in `[-1, 1]` for Euclidean space,
/// a normalized Gaussian-free direction for the sphere.
pub fn random_point<R: Rng>(manifold: &Manifold, rng: &mut R) -> Point {
    let ambient = manifold.ambient_dim();
    loop {
        let coords: Vec<f64> = (0..ambient).map(|_| rng.random_range(-1.0..1.0)).collect();
        if manifold.is_sphere() {
            if linalg::norm(&coords) < 1e-3 {
                continue;
            }
            return manifold.point_normalized(coords).expect("valid sample");
        }
        return manifold.point(coords).expect("valid sample");
    }
}

/// Random unit tangent vector at `p`.
pub fn random_unit_tangent<R: Rng>(p: &Point, rng: &mut R) -> Tangent {
    let basis = p
        .manifold()
        .tangent_basis(p)
        .expect("tangent basis exists");
    loop {
        let coeffs: Vec<f64> = basis.iter().map(|_| rng.random_range(-1.0..1.0)).collect();
        let n = linalg::norm(&coeffs);
        if n < 1e-3 {
            continue;
        }
        let mut vec = vec![0.0; p.manifold().ambient_dim()];
        for (c, b) in coeffs.iter().zip(&basis) {
            linalg::axpy_in_place(&mut vec, c / n, b.vec());
        }
        return Tangent::new_unchecked(p.clone(), vec);
    }
}

/// Random tangent vector at `p` with norm at most `max_norm`.
pub fn random_tangent<R: Rng>(p: &Point, max_norm: f64, rng: &mut R) -> Tangent {
    let r: f64 = rng.random_range(0.0..max_norm);
    random_unit_tangent(p, rng).scaled(r)
}

/// Random point within geodesic distance `radius` of `center`.
pub fn random_in_ball<R: Rng>(center: &Point, radius: f64, rng: &mut R) -> Point {
    let v = random_tangent(center, radius, rng);
    center.manifold().exp(&v).expect("exp of in-ball vector")
}

/// Random orthogonal matrix (rows) of the given size, via Gram-Schmidt on
/// random vectors. Used to exercise isometry invariance.
pub fn random_rotation<R: Rng>(size: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(size);
    while rows.len() < size {
        let cand: Vec<f64> = (0..size).map(|_| rng.random_range(-1.0..1.0)).collect();
        let mut v = cand;
        for r in &rows {
            let proj = dot(&v, r);
            linalg::axpy_in_place(&mut v, -proj, r);
        }
        let n = linalg::norm(&v);
        if n < 1e-6 {
            continue;
        }
        rows.push(linalg::scale(&v, 1.0 / n));
    }
    rows
}

/// Apply a linear map given by rows to ambient coordinates.
pub fn apply_matrix(rows: &[Vec<f64>], coords: &[f64]) -> Vec<f64> {
    rows.iter().map(|r| dot(r, coords)).collect()
}

/// Rotate a point by an orthogonal matrix (sphere isometry / Euclidean
/// rotation about the origin).
pub fn rotate_point(rows: &[Vec<f64>], p: &Point) -> Point {
    let coords = apply_matrix(rows, p.coords());
    if p.manifold().is_sphere() {
        p.manifold()
            .point_normalized(coords)
            .expect("rotation preserves the sphere")
    } else {
        p.manifold().point(coords).expect("rotation of a point")
    }
}

/// Rotate a tangent vector along with its base point.
pub fn rotate_tangent(rows: &[Vec<f64>], v: &Tangent) -> Tangent {
    let base = rotate_point(rows, v.base());
    Tangent::new_unchecked(base, apply_matrix(rows, v.vec()))
}
