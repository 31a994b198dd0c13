use std::fmt;

use crate::error::GeometryError;
use crate::guard::ConvexityGuard;
use crate::linalg::{self, dot};
use crate::point::{Point, Tangent, ON_MANIFOLD_TOL};
use crate::{euclidean, sphere, GUARD_MARGIN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ManifoldKind {
    Euclidean,
    Sphere,
}

/// A tagged manifold: Euclidean `ℝ^d` or the unit sphere `S^d`.
///
/// `dim` is the intrinsic dimension; sphere points live in `ℝ^{d+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Manifold {
    kind: ManifoldKind,
    dim: usize,
}

impl fmt::Display for Manifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ManifoldKind::Euclidean => write!(f, "euclidean:{}", self.dim),
            ManifoldKind::Sphere => write!(f, "sphere:{}", self.dim),
        }
    }
}

impl Manifold {
    pub fn euclidean(dim: usize) -> Self {
        assert!(dim >= 1, "manifold dimension must be at least 1");
        Self {
            kind: ManifoldKind::Euclidean,
            dim,
        }
    }

    pub fn sphere(dim: usize) -> Self {
        assert!(dim >= 1, "manifold dimension must be at least 1");
        Self {
            kind: ManifoldKind::Sphere,
            dim,
        }
    }

    pub fn kind(&self) -> ManifoldKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            ManifoldKind::Euclidean => self.dim,
            ManifoldKind::Sphere => self.dim + 1,
        }
    }

    pub fn is_sphere(&self) -> bool {
        self.kind == ManifoldKind::Sphere
    }

    /// Default convexity guard: a geodesic ball of radius `π/2 − 1e-6` on the
    /// sphere, unbounded on Euclidean space.
    pub fn default_guard(&self) -> ConvexityGuard {
        match self.kind {
            ManifoldKind::Euclidean => ConvexityGuard::unbounded(),
            ManifoldKind::Sphere => {
                ConvexityGuard::with_radius(std::f64::consts::FRAC_PI_2 - GUARD_MARGIN)
            }
        }
    }

    /// Validate ambient coordinates and build a point.
    pub fn point(&self, coords: Vec<f64>) -> Result<Point, GeometryError> {
        if coords.len() != self.ambient_dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.ambient_dim(),
                got: coords.len(),
            });
        }
        if !linalg::all_finite(&coords) {
            return Err(GeometryError::NonFinite);
        }
        if self.is_sphere() {
            let deviation = sphere::on_manifold_deviation(&coords);
            if deviation > ON_MANIFOLD_TOL {
                return Err(GeometryError::NotOnManifold { deviation });
            }
        }
        Ok(Point::new_unchecked(*self, coords))
    }

    /// Build a sphere point from arbitrary nonzero coordinates by projection.
    pub fn point_normalized(&self, coords: Vec<f64>) -> Result<Point, GeometryError> {
        if !self.is_sphere() {
            return self.point(coords);
        }
        if coords.len() != self.ambient_dim() {
            return Err(GeometryError::DimensionMismatch {
                expected: self.ambient_dim(),
                got: coords.len(),
            });
        }
        if !linalg::all_finite(&coords) {
            return Err(GeometryError::NonFinite);
        }
        let unit = linalg::normalize(&coords).ok_or(GeometryError::NonFinite)?;
        Ok(Point::new_unchecked(*self, unit))
    }

    fn check_point(&self, p: &Point) -> Result<(), GeometryError> {
        if p.manifold() != *self {
            return Err(GeometryError::ManifoldMismatch(*self, p.manifold()));
        }
        Ok(())
    }

    fn check_pair(&self, p: &Point, q: &Point) -> Result<(), GeometryError> {
        self.check_point(p)?;
        self.check_point(q)
    }

    fn check_base(&self, v: &Tangent, p: &Point) -> Result<(), GeometryError> {
        self.check_point(p)?;
        if !v.base().approx_eq(p, 1e-9) {
            return Err(GeometryError::BaseMismatch);
        }
        Ok(())
    }

    /// Exponential map: endpoint of the geodesic leaving `v.base()` with
    /// velocity `v`.
    pub fn exp(&self, v: &Tangent) -> Result<Point, GeometryError> {
        self.check_point(v.base())?;
        if !linalg::all_finite(v.vec()) {
            return Err(GeometryError::NonFinite);
        }
        let coords = match self.kind {
            ManifoldKind::Euclidean => euclidean::exp(v.base().coords(), v.vec()),
            ManifoldKind::Sphere => sphere::exp(v.base().coords(), v.vec()),
        };
        Ok(Point::new_unchecked(*self, coords))
    }

    /// Logarithm: initial velocity of the geodesic from `p` to `q`.
    pub fn log(&self, p: &Point, q: &Point) -> Result<Tangent, GeometryError> {
        self.check_pair(p, q)?;
        let vec = match self.kind {
            ManifoldKind::Euclidean => euclidean::log(p.coords(), q.coords()),
            ManifoldKind::Sphere => sphere::log(p.coords(), q.coords())?,
        };
        Ok(Tangent::new_unchecked(p.clone(), vec))
    }

    pub fn distance(&self, p: &Point, q: &Point) -> Result<f64, GeometryError> {
        self.check_pair(p, q)?;
        Ok(match self.kind {
            ManifoldKind::Euclidean => euclidean::dist(p.coords(), q.coords()),
            ManifoldKind::Sphere => sphere::dist(p.coords(), q.coords()),
        })
    }

    /// `γ(t; p, q)`, the unique geodesic with `γ(0) = p`, `γ(1) = q`.
    ///
    /// `t` may lie outside `[0, 1]`; the geodesic is extended affinely.
    pub fn geodesic_point(&self, p: &Point, q: &Point, t: f64) -> Result<Point, GeometryError> {
        self.check_pair(p, q)?;
        if !t.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        let coords = match self.kind {
            ManifoldKind::Euclidean => euclidean::geodesic(p.coords(), q.coords(), t),
            ManifoldKind::Sphere => sphere::geodesic(p.coords(), q.coords(), t)?,
        };
        Ok(Point::new_unchecked(*self, coords))
    }

    /// Parallel transport of `v` along the geodesic from `v.base()` to `q`.
    pub fn transport(&self, v: &Tangent, q: &Point) -> Result<Tangent, GeometryError> {
        self.check_pair(v.base(), q)?;
        let vec = match self.kind {
            ManifoldKind::Euclidean => v.vec().to_vec(),
            ManifoldKind::Sphere => sphere::transport(v.base().coords(), q.coords(), v.vec())?,
        };
        Ok(Tangent::new_unchecked(q.clone(), vec))
    }

    /// Riemannian curvature tensor `R(x, y)z` at the common base point.
    pub fn curvature_tensor(
        &self,
        x: &Tangent,
        y: &Tangent,
        z: &Tangent,
    ) -> Result<Tangent, GeometryError> {
        self.check_base(y, x.base())?;
        self.check_base(z, x.base())?;
        let vec = match self.kind {
            ManifoldKind::Euclidean => vec![0.0; self.ambient_dim()],
            ManifoldKind::Sphere => sphere::curvature(x.vec(), y.vec(), z.vec()),
        };
        Ok(Tangent::new_unchecked(x.base().clone(), vec))
    }

    /// `(d exp_p)_v (w)`: derivative of the exponential, a vector at
    /// `exp_p(v)`.
    pub fn dexp(&self, v: &Tangent, w: &Tangent) -> Result<Tangent, GeometryError> {
        self.check_base(w, v.base())?;
        match self.kind {
            ManifoldKind::Euclidean => {
                let q = self.exp(v)?;
                Ok(Tangent::new_unchecked(q, w.vec().to_vec()))
            }
            ManifoldKind::Sphere => {
                let vec = sphere::dexp(v.base().coords(), v.vec(), w.vec())?;
                let q = self.exp(v)?;
                Ok(Tangent::new_unchecked(q, vec))
            }
        }
    }

    /// Inverse of [`Manifold::dexp`]: takes `u ∈ T_{exp_p(v)}M` back to `T_pM`.
    pub fn dexp_inverse(&self, v: &Tangent, u: &Tangent) -> Result<Tangent, GeometryError> {
        self.check_point(v.base())?;
        self.check_point(u.base())?;
        match self.kind {
            ManifoldKind::Euclidean => {
                Ok(Tangent::new_unchecked(v.base().clone(), u.vec().to_vec()))
            }
            ManifoldKind::Sphere => {
                let vec = sphere::dexp_inverse(v.base().coords(), v.vec(), u.vec())?;
                Ok(Tangent::new_unchecked(v.base().clone(), vec))
            }
        }
    }

    /// Derivative of `γ(t; p, q)` in the start point, applied to `v ∈ T_pM`.
    pub fn dgeodesic_start(
        &self,
        p: &Point,
        q: &Point,
        t: f64,
        v: &Tangent,
    ) -> Result<Tangent, GeometryError> {
        self.check_base(v, p)?;
        self.check_point(q)?;
        let gt = self.geodesic_point(p, q, t)?;
        let vec = match self.kind {
            ManifoldKind::Euclidean => euclidean::dgeodesic_start(t, v.vec()),
            ManifoldKind::Sphere => sphere::dgeodesic_start(p.coords(), q.coords(), t, v.vec())?,
        };
        Ok(Tangent::new_unchecked(gt, vec))
    }

    /// Derivative of `γ(t; p, q)` in the end point, applied to `w ∈ T_qM`.
    pub fn dgeodesic_end(
        &self,
        p: &Point,
        q: &Point,
        t: f64,
        w: &Tangent,
    ) -> Result<Tangent, GeometryError> {
        // γ(t; p, q) = γ(1 − t; q, p)
        self.dgeodesic_start(q, p, 1.0 - t, w)
    }

    /// Adjoint of [`Manifold::dgeodesic_start`]: takes `z ∈ T_{γ(t)}M` to `T_pM`.
    pub fn dgeodesic_start_adjoint(
        &self,
        p: &Point,
        q: &Point,
        t: f64,
        z: &Tangent,
    ) -> Result<Tangent, GeometryError> {
        self.check_pair(p, q)?;
        let vec = match self.kind {
            ManifoldKind::Euclidean => euclidean::dgeodesic_start(t, z.vec()),
            ManifoldKind::Sphere => {
                sphere::dgeodesic_start_adjoint(p.coords(), q.coords(), t, z.vec())?
            }
        };
        Ok(Tangent::new_unchecked(p.clone(), vec))
    }

    /// Adjoint of [`Manifold::dgeodesic_end`]: takes `z ∈ T_{γ(t)}M` to `T_qM`.
    pub fn dgeodesic_end_adjoint(
        &self,
        p: &Point,
        q: &Point,
        t: f64,
        z: &Tangent,
    ) -> Result<Tangent, GeometryError> {
        self.dgeodesic_start_adjoint(q, p, 1.0 - t, z)
    }

    /// Endpoint value `J(1)` of the Jacobi field along `s ↦ exp_p(s·x)` with
    /// `J(0) = j0` and covariant derivative `J'(0) = dj0`.
    pub fn jacobi_ivp(
        &self,
        x: &Tangent,
        j0: &Tangent,
        dj0: &Tangent,
    ) -> Result<Tangent, GeometryError> {
        self.check_base(j0, x.base())?;
        self.check_base(dj0, x.base())?;
        let q = self.exp(x)?;
        let vec = match self.kind {
            ManifoldKind::Euclidean => euclidean::jacobi_ivp(j0.vec(), dj0.vec()),
            ManifoldKind::Sphere => {
                sphere::jacobi_ivp(x.base().coords(), x.vec(), j0.vec(), dj0.vec())?
            }
        };
        Ok(Tangent::new_unchecked(q, vec))
    }

    /// Metric inner product of two vectors at `p` (ambient dot product for
    /// both supported manifolds).
    pub fn inner(&self, u: &Tangent, v: &Tangent) -> Result<f64, GeometryError> {
        self.check_base(v, u.base())?;
        Ok(dot(u.vec(), v.vec()))
    }

    /// Deterministic orthonormal basis of the tangent space at `p`.
    pub fn tangent_basis(&self, p: &Point) -> Result<Vec<Tangent>, GeometryError> {
        self.check_point(p)?;
        let ambient = self.ambient_dim();
        match self.kind {
            ManifoldKind::Euclidean => Ok((0..self.dim)
                .map(|i| {
                    let mut v = vec![0.0; ambient];
                    v[i] = 1.0;
                    Tangent::new_unchecked(p.clone(), v)
                })
                .collect()),
            ManifoldKind::Sphere => {
                // Gram-Schmidt with pivoting over the projected ambient basis.
                let mut candidates: Vec<Vec<f64>> = (0..ambient)
                    .map(|i| {
                        let mut v = vec![0.0; ambient];
                        v[i] = 1.0;
                        sphere::project_tangent(p.coords(), &v)
                    })
                    .collect();
                let mut basis: Vec<Vec<f64>> = Vec::with_capacity(self.dim);
                while basis.len() < self.dim {
                    let (best, best_norm) = candidates
                        .iter()
                        .enumerate()
                        .map(|(i, c)| (i, linalg::norm(c)))
                        .max_by(|a, b| a.1.total_cmp(&b.1))
                        .expect("candidate list is nonempty");
                    if best_norm < 1e-12 {
                        return Err(GeometryError::NonFinite);
                    }
                    let unit = linalg::scale(&candidates[best], 1.0 / best_norm);
                    candidates.remove(best);
                    for c in candidates.iter_mut() {
                        let proj = dot(c, &unit);
                        linalg::axpy_in_place(c, -proj, &unit);
                    }
                    basis.push(unit);
                }
                Ok(basis
                    .into_iter()
                    .map(|v| Tangent::new_unchecked(p.clone(), v))
                    .collect())
            }
        }
    }
}
