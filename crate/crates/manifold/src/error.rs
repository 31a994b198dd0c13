use thiserror::Error;

use crate::manifold::Manifold;

/// Errors raised by geometric primitives.
#[derive(Debug, Clone, Error)]
pub enum GeometryError {
    #[error("manifold mismatch: {0} vs {1}")]
    ManifoldMismatch(Manifold, Manifold),

    #[error("tangent vector is based at a different point than required")]
    BaseMismatch,

    #[error("expected {expected} ambient coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite coordinate data")]
    NonFinite,

    #[error("point is off the unit sphere by {deviation:.3e}")]
    NotOnManifold { deviation: f64 },

    #[error("vector is not tangent: <p, v> = {inner:.3e}")]
    NotTangent { inner: f64 },

    #[error("points are antipodal or beyond the geodesic uniqueness range")]
    Antipodal,

    #[error("tangent norm {norm:.6} is outside the invertibility radius pi")]
    OutsideInjectivityRadius { norm: f64 },

    #[error(
        "points do not fit in a convex ball of radius {radius:.6}: \
         point {index} lies at distance {distance:.6} from the candidate center"
    )]
    GuardViolation {
        radius: f64,
        index: usize,
        distance: f64,
    },

    #[error("empty point list")]
    EmptyInput,

    #[error("weights must be nonnegative with a positive sum")]
    BadWeights,

    #[error("no convergence after {max_iter} iterations (last step {last_step:.3e})")]
    NoConvergence { max_iter: usize, last_step: f64 },
}
