//! Closed-form Riemannian geometry for geospline.
//!
//! Two constant-curvature spaces are provided: Euclidean space `ℝ^d` and the
//! unit sphere `S^d` embedded in `ℝ^{d+1}`. Both admit closed forms for the
//! exponential and logarithm maps, geodesics, parallel transport, the
//! curvature tensor and the Jacobi-field operators that differentiate these
//! maps. All values are plain `f64` ambient coordinates.
//!
//! Operations are pure functions of immutable inputs; every type here is
//! freely shareable across threads.

mod error;
mod euclidean;
mod frechet;
mod guard;
mod manifold;
mod point;
mod sphere;

pub mod linalg;
pub mod sampling;

pub use error::GeometryError;
pub use frechet::FrechetOptions;
pub use guard::ConvexityGuard;
pub use manifold::{Manifold, ManifoldKind};
pub use point::{Point, Tangent};

/// Tolerance under which two points are considered coincident.
pub const COINCIDENCE_TOL: f64 = 1e-12;

/// Margin subtracted from the sphere guard radius `π/2`.
pub const GUARD_MARGIN: f64 = 1e-6;
