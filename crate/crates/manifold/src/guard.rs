use crate::error::GeometryError;
use crate::linalg;
use crate::manifold::Manifold;
use crate::point::Point;

/// Convexity guard for multi-point constructions.
///
/// Every point handed to a construction that averages or connects several
/// points must lie in a common open geodesic ball of this radius, so that
/// all involved geodesics are unique and stay inside the ball. The check
/// uses the normalized ambient mean as candidate center, which is slightly
/// conservative but deterministic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexityGuard {
    radius_bound: f64,
}

impl ConvexityGuard {
    pub fn unbounded() -> Self {
        Self {
            radius_bound: f64::INFINITY,
        }
    }

    pub fn with_radius(radius_bound: f64) -> Self {
        Self { radius_bound }
    }

    pub fn radius_bound(&self) -> f64 {
        self.radius_bound
    }

    /// Check that a pair of points spans a unique minimizing geodesic that
    /// fits in some ball of the guard radius.
    pub fn check_pair(
        &self,
        manifold: &Manifold,
        p: &Point,
        q: &Point,
    ) -> Result<(), GeometryError> {
        if !self.radius_bound.is_finite() {
            return Ok(());
        }
        let d = manifold.distance(p, q)?;
        if d >= 2.0 * self.radius_bound {
            return Err(GeometryError::GuardViolation {
                radius: self.radius_bound,
                index: 1,
                distance: d,
            });
        }
        Ok(())
    }

    /// Check that all points lie in one open geodesic ball of the guard
    /// radius around the normalized ambient mean.
    pub fn check_points<'a, I>(&self, manifold: &Manifold, points: I) -> Result<(), GeometryError>
    where
        I: IntoIterator<Item = &'a Point>,
    {
        let points: Vec<&Point> = points.into_iter().collect();
        if points.is_empty() {
            return Err(GeometryError::EmptyInput);
        }
        if !self.radius_bound.is_finite() {
            return Ok(());
        }
        let ambient = manifold.ambient_dim();
        let mut mean = vec![0.0; ambient];
        for p in &points {
            linalg::axpy_in_place(&mut mean, 1.0 / points.len() as f64, p.coords());
        }
        let center = manifold
            .point_normalized(mean)
            .map_err(|_| GeometryError::GuardViolation {
                radius: self.radius_bound,
                index: 0,
                distance: f64::INFINITY,
            })?;
        for (index, p) in points.iter().enumerate() {
            let distance = manifold.distance(&center, p)?;
            if distance >= self.radius_bound {
                return Err(GeometryError::GuardViolation {
                    radius: self.radius_bound,
                    index,
                    distance,
                });
            }
        }
        Ok(())
    }
}
