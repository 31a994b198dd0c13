//! Unit-sphere kernels in ambient coordinates.
//!
//! The sphere `S^d ⊂ ℝ^{d+1}` has constant sectional curvature 1, so
//! geodesics are great circles and every derivative of the exponential map
//! has a closed form through sine-type Jacobi fields. All angles are radians.

use crate::error::GeometryError;
use crate::linalg::{axpy, axpy_in_place, dot, norm, normalize, scale};

/// Below this chord length two sphere points are treated as coincident.
const DEGENERATE_TOL: f64 = 1e-14;

/// Angles within this margin of pi are rejected as antipodal.
const ANTIPODAL_MARGIN: f64 = 1e-9;

/// Geometry of the unique geodesic from `p` toward `q`.
///
/// `e_p` is the unit tangent at `p`; `theta` the angle between the points.
/// `theta == 0` encodes the coincident case.
pub struct GeodesicFrame {
    pub theta: f64,
    pub e_p: Vec<f64>,
}

/// Project an ambient vector onto the tangent space at `p`.
pub fn project_tangent(p: &[f64], v: &[f64]) -> Vec<f64> {
    axpy(v, -dot(p, v), p)
}

pub fn frame(p: &[f64], q: &[f64]) -> Result<GeodesicFrame, GeometryError> {
    let c = dot(p, q).clamp(-1.0, 1.0);
    let u = axpy(q, -c, p);
    let n = norm(&u);
    if n < DEGENERATE_TOL {
        if c > 0.0 {
            return Ok(GeodesicFrame {
                theta: 0.0,
                e_p: vec![0.0; p.len()],
            });
        }
        return Err(GeometryError::Antipodal);
    }
    let theta = n.atan2(c);
    if theta >= std::f64::consts::PI - ANTIPODAL_MARGIN {
        return Err(GeometryError::Antipodal);
    }
    Ok(GeodesicFrame {
        theta,
        e_p: scale(&u, 1.0 / n),
    })
}

/// Point of the geodesic at arc-length `s * theta` from `p`, i.e. `γ(s; p, q)`.
pub fn frame_point(p: &[f64], f: &GeodesicFrame, s: f64) -> Vec<f64> {
    if f.theta == 0.0 {
        return p.to_vec();
    }
    let a = s * f.theta;
    let mut out = scale(p, a.cos());
    axpy_in_place(&mut out, a.sin(), &f.e_p);
    normalize(&out).expect("geodesic point has unit norm")
}

/// Unit tangent of the geodesic at parameter `s` (direction of travel).
pub fn frame_direction(p: &[f64], f: &GeodesicFrame, s: f64) -> Vec<f64> {
    let a = s * f.theta;
    let mut out = scale(p, -a.sin());
    axpy_in_place(&mut out, a.cos(), &f.e_p);
    out
}

pub fn dist(p: &[f64], q: &[f64]) -> f64 {
    let c = dot(p, q).clamp(-1.0, 1.0);
    let u = axpy(q, -c, p);
    norm(&u).atan2(c)
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-9 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

pub fn exp(p: &[f64], v: &[f64]) -> Vec<f64> {
    let v = project_tangent(p, v);
    let theta = norm(&v);
    let mut out = scale(p, theta.cos());
    axpy_in_place(&mut out, sinc(theta), &v);
    normalize(&out).expect("exp output has unit norm")
}

pub fn log(p: &[f64], q: &[f64]) -> Result<Vec<f64>, GeometryError> {
    let f = frame(p, q)?;
    Ok(scale(&f.e_p, f.theta))
}

pub fn geodesic(p: &[f64], q: &[f64], t: f64) -> Result<Vec<f64>, GeometryError> {
    let f = frame(p, q)?;
    Ok(frame_point(p, &f, t))
}

/// Parallel transport of `v ∈ T_pS` along the geodesic from `p` to `q`.
///
/// The component along the geodesic rotates with it; components orthogonal
/// to the great-circle plane are unchanged in ambient coordinates.
pub fn transport(p: &[f64], q: &[f64], v: &[f64]) -> Result<Vec<f64>, GeometryError> {
    let f = frame(p, q)?;
    if f.theta == 0.0 {
        return Ok(project_tangent(q, v));
    }
    let a = dot(v, &f.e_p);
    let e_q = frame_direction(p, &f, 1.0);
    let mut out = axpy(v, -a, &f.e_p);
    axpy_in_place(&mut out, a, &e_q);
    Ok(project_tangent(q, &out))
}

/// R(x, y)z = <y, z> x − <x, z> y for the unit sphere.
pub fn curvature(x: &[f64], y: &[f64], z: &[f64]) -> Vec<f64> {
    let mut out = scale(x, dot(y, z));
    axpy_in_place(&mut out, -dot(x, z), y);
    out
}

/// Differential of `exp_p` at `v`, applied to `w ∈ T_pS`.
///
/// The component of `w` parallel to `v` is transported; the orthogonal
/// component is scaled by `sin‖v‖ / ‖v‖` and transported.
pub fn dexp(p: &[f64], v: &[f64], w: &[f64]) -> Result<Vec<f64>, GeometryError> {
    let theta = norm(v);
    if theta >= std::f64::consts::PI {
        return Err(GeometryError::OutsideInjectivityRadius { norm: theta });
    }
    let q = exp(p, v);
    if theta < DEGENERATE_TOL {
        return Ok(project_tangent(&q, w));
    }
    let e = scale(v, 1.0 / theta);
    let a = dot(w, &e);
    let w_perp = axpy(w, -a, &e);
    // transported e at q
    let mut e_q = scale(p, -theta.sin());
    axpy_in_place(&mut e_q, theta.cos(), &e);
    let mut out = scale(&e_q, a);
    axpy_in_place(&mut out, sinc(theta), &w_perp);
    Ok(project_tangent(&q, &out))
}

/// Inverse of [`dexp`]: takes `u ∈ T_{exp_p(v)}S` back to `T_pS`.
pub fn dexp_inverse(p: &[f64], v: &[f64], u: &[f64]) -> Result<Vec<f64>, GeometryError> {
    let theta = norm(v);
    if theta >= std::f64::consts::PI - ANTIPODAL_MARGIN {
        return Err(GeometryError::OutsideInjectivityRadius { norm: theta });
    }
    if theta < DEGENERATE_TOL {
        return Ok(project_tangent(p, u));
    }
    let e = scale(v, 1.0 / theta);
    let mut e_q = scale(p, -theta.sin());
    axpy_in_place(&mut e_q, theta.cos(), &e);
    let b = dot(u, &e_q);
    let u_perp = axpy(u, -b, &e_q);
    let mut out = scale(&e, b);
    axpy_in_place(&mut out, theta / theta.sin(), &u_perp);
    Ok(project_tangent(p, &out))
}

/// Derivative of `γ(t; p, q)` with respect to the start point, applied to
/// `v ∈ T_pS`. Valid for any real `t` (the Jacobi field extends).
pub fn dgeodesic_start(p: &[f64], q: &[f64], t: f64, v: &[f64]) -> Result<Vec<f64>, GeometryError> {
    let f = frame(p, q)?;
    let gt = frame_point(p, &f, t);
    if f.theta == 0.0 {
        return Ok(scale(&project_tangent(&gt, v), 1.0 - t));
    }
    let a = dot(v, &f.e_p);
    let v_perp = axpy(v, -a, &f.e_p);
    let e_t = frame_direction(p, &f, t);
    let c_perp = ((1.0 - t) * f.theta).sin() / f.theta.sin();
    let mut out = scale(&e_t, (1.0 - t) * a);
    axpy_in_place(&mut out, c_perp, &v_perp);
    Ok(project_tangent(&gt, &out))
}

/// Adjoint of [`dgeodesic_start`]: takes `z ∈ T_{γ(t)}S` to `T_pS`.
pub fn dgeodesic_start_adjoint(
    p: &[f64],
    q: &[f64],
    t: f64,
    z: &[f64],
) -> Result<Vec<f64>, GeometryError> {
    let f = frame(p, q)?;
    if f.theta == 0.0 {
        return Ok(scale(&project_tangent(p, z), 1.0 - t));
    }
    let e_t = frame_direction(p, &f, t);
    let b = dot(z, &e_t);
    let z_perp = axpy(z, -b, &e_t);
    let c_perp = ((1.0 - t) * f.theta).sin() / f.theta.sin();
    let mut out = scale(&f.e_p, (1.0 - t) * b);
    axpy_in_place(&mut out, c_perp, &z_perp);
    Ok(project_tangent(p, &out))
}

/// J(1) for the Jacobi field along `s ↦ exp_p(s x)` with initial value `j0`
/// and initial covariant derivative `dj0`.
pub fn jacobi_ivp(
    p: &[f64],
    x: &[f64],
    j0: &[f64],
    dj0: &[f64],
) -> Result<Vec<f64>, GeometryError> {
    let theta = norm(x);
    let q = exp(p, x);
    if theta < DEGENERATE_TOL {
        let sum = axpy(j0, 1.0, dj0);
        return Ok(project_tangent(&q, &sum));
    }
    let e = scale(x, 1.0 / theta);
    let a0 = dot(j0, &e);
    let b0 = dot(dj0, &e);
    let j0_perp = axpy(j0, -a0, &e);
    let dj0_perp = axpy(dj0, -b0, &e);
    let mut e_q = scale(p, -theta.sin());
    axpy_in_place(&mut e_q, theta.cos(), &e);
    // tangential part is affine in arclength, normal part solves g'' = −θ² g
    let mut out = scale(&e_q, a0 + b0);
    axpy_in_place(&mut out, theta.cos(), &j0_perp);
    axpy_in_place(&mut out, sinc(theta), &dj0_perp);
    Ok(project_tangent(&q, &out))
}

pub fn on_manifold_deviation(coords: &[f64]) -> f64 {
    (norm(coords) - 1.0).abs()
}
