use crate::error::GeometryError;
use crate::linalg;
use crate::manifold::{Manifold, ManifoldKind};
use crate::point::Point;

/// Options for the Fréchet-mean fixed-point iteration.
#[derive(Debug, Clone, Copy)]
pub struct FrechetOptions {
    /// Stop once the applied update step has norm below this.
    pub step_tol: f64,
    pub max_iter: usize,
}

impl Default for FrechetOptions {
    fn default() -> Self {
        Self {
            step_tol: 1e-10,
            max_iter: 200,
        }
    }
}

impl Manifold {
    /// Weighted sample Fréchet mean, the minimizer of the weighted sum of
    /// squared geodesic distances.
    ///
    /// Solved by the fixed-point iteration `m ← exp_m(Σ wᵢ log_m(qᵢ) / Σ wᵢ)`.
    /// Points must satisfy the default convexity guard.
    pub fn frechet_mean(
        &self,
        points: &[Point],
        weights: Option<&[f64]>,
        opts: FrechetOptions,
    ) -> Result<Point, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::EmptyInput);
        }
        for p in points {
            if p.manifold() != *self {
                return Err(GeometryError::ManifoldMismatch(*self, p.manifold()));
            }
        }
        let uniform = vec![1.0; points.len()];
        let weights = weights.unwrap_or(&uniform);
        if weights.len() != points.len() {
            return Err(GeometryError::DimensionMismatch {
                expected: points.len(),
                got: weights.len(),
            });
        }
        let total: f64 = weights.iter().sum();
        if weights.iter().any(|w| *w < 0.0 || !w.is_finite()) || total <= 0.0 {
            return Err(GeometryError::BadWeights);
        }
        self.default_guard().check_points(self, points.iter())?;

        let coord_refs: Vec<&[f64]> = points.iter().map(|p| p.coords()).collect();
        if self.kind() == ManifoldKind::Euclidean {
            let mean = crate::euclidean::frechet(&coord_refs, weights);
            return self.point(mean);
        }

        let ambient_mean = crate::euclidean::frechet(&coord_refs, weights);
        let mut mean = self.point_normalized(ambient_mean)?;
        let mut last_step = f64::INFINITY;
        for _ in 0..opts.max_iter {
            let mut update = vec![0.0; self.ambient_dim()];
            for (p, w) in points.iter().zip(weights) {
                let lg = self.log(&mean, p)?;
                linalg::axpy_in_place(&mut update, w / total, lg.vec());
            }
            last_step = linalg::norm(&update);
            mean = self.exp(&crate::point::Tangent::new_unchecked(mean.clone(), update))?;
            if last_step <= opts.step_tol {
                return Ok(mean);
            }
        }
        Err(GeometryError::NoConvergence {
            max_iter: opts.max_iter,
            last_step,
        })
    }
}
