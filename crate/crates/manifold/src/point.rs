use crate::error::GeometryError;
use crate::linalg;
use crate::manifold::Manifold;

/// A point of a manifold, stored in ambient coordinates.
///
/// Euclidean points carry `d` coordinates, sphere points `d + 1` unit-norm
/// coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    manifold: Manifold,
    coords: Vec<f64>,
}

/// Tolerance on `|‖x‖ − 1|` for sphere points.
pub(crate) const ON_MANIFOLD_TOL: f64 = 1e-9;

/// Tolerance on `⟨p, v⟩` for sphere tangent vectors.
pub(crate) const TANGENCY_TOL: f64 = 1e-9;

impl Point {
    pub(crate) fn new_unchecked(manifold: Manifold, coords: Vec<f64>) -> Self {
        Self { manifold, coords }
    }

    pub fn manifold(&self) -> Manifold {
        self.manifold
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    /// Coordinate-wise closeness in the ambient space.
    pub fn approx_eq(&self, other: &Point, tol: f64) -> bool {
        self.manifold == other.manifold
            && linalg::norm(&linalg::sub(&self.coords, &other.coords)) <= tol
    }

    /// Zero tangent vector at this point.
    pub fn zero_tangent(&self) -> Tangent {
        Tangent {
            base: self.clone(),
            vec: vec![0.0; self.coords.len()],
        }
    }

    /// Build a tangent vector at this point, checking tangency.
    pub fn tangent(&self, vec: Vec<f64>) -> Result<Tangent, GeometryError> {
        Tangent::new(self.clone(), vec)
    }
}

/// A tangent vector attached to its base point, in ambient coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Tangent {
    base: Point,
    vec: Vec<f64>,
}

impl Tangent {
    pub fn new(base: Point, vec: Vec<f64>) -> Result<Self, GeometryError> {
        let expected = base.manifold().ambient_dim();
        if vec.len() != expected {
            return Err(GeometryError::DimensionMismatch {
                expected,
                got: vec.len(),
            });
        }
        if !linalg::all_finite(&vec) {
            return Err(GeometryError::NonFinite);
        }
        if base.manifold().is_sphere() {
            let inner = linalg::dot(base.coords(), &vec);
            if inner.abs() > TANGENCY_TOL {
                return Err(GeometryError::NotTangent { inner });
            }
        }
        Ok(Self { base, vec })
    }

    pub(crate) fn new_unchecked(base: Point, vec: Vec<f64>) -> Self {
        Self { base, vec }
    }

    /// Build a tangent vector by orthogonal projection of `vec` onto the
    /// tangent space at `base`. Identity on Euclidean space.
    pub fn projected(base: Point, vec: Vec<f64>) -> Self {
        let vec = if base.manifold().is_sphere() {
            crate::sphere::project_tangent(base.coords(), &vec)
        } else {
            vec
        };
        Self { base, vec }
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn vec(&self) -> &[f64] {
        &self.vec
    }

    pub fn norm(&self) -> f64 {
        linalg::norm(&self.vec)
    }

    /// Riemannian inner product with another vector at the same base.
    ///
    /// The induced metric equals the ambient dot product on both supported
    /// manifolds.
    pub fn inner(&self, other: &Tangent) -> f64 {
        debug_assert!(self.base.approx_eq(&other.base, 1e-6));
        linalg::dot(&self.vec, &other.vec)
    }

    pub fn scaled(&self, s: f64) -> Tangent {
        Tangent {
            base: self.base.clone(),
            vec: linalg::scale(&self.vec, s),
        }
    }

    /// Sum of two vectors at the same base point.
    pub fn add(&self, other: &Tangent) -> Result<Tangent, GeometryError> {
        if !self.base.approx_eq(&other.base, 1e-9) {
            return Err(GeometryError::BaseMismatch);
        }
        Ok(Tangent {
            base: self.base.clone(),
            vec: linalg::add(&self.vec, &other.vec),
        })
    }

    pub fn sub(&self, other: &Tangent) -> Result<Tangent, GeometryError> {
        self.add(&other.scaled(-1.0))
    }
}

#[cfg(test)]
mod tests {
    use crate::Manifold;

    #[test]
    fn sphere_point_must_be_unit() {
        let s2 = Manifold::sphere(2);
        assert!(s2.point(vec![1.0, 0.0, 0.0]).is_ok());
        assert!(s2.point(vec![1.1, 0.0, 0.0]).is_err());
    }

    #[test]
    fn tangency_is_enforced() {
        let s2 = Manifold::sphere(2);
        let p = s2.point(vec![1.0, 0.0, 0.0]).unwrap();
        assert!(p.tangent(vec![0.0, 1.0, 0.5]).is_ok());
        assert!(p.tangent(vec![0.1, 1.0, 0.0]).is_err());
    }
}
