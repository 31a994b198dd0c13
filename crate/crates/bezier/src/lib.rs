//! Generalized Bézier curves and C1 Bézier splines on manifolds.
//!
//! Curves are evaluated with the geodesic de Casteljau recursion. Splines
//! join segments with the geometric C1 conditions on control points, so only
//! an independent subset of the control points is free; the rest (connecting
//! points and their successors) are derived. Differentials of the curve with
//! respect to free control points are propagated through the recursion with
//! closed-form Jacobi operators, together with their adjoints for gradient
//! computations.

mod bernstein;
mod boundary;
mod cubic;
mod decasteljau;
mod differential;
mod error;
mod spec;
mod spline;

pub use bernstein::bernstein_eval;
pub use boundary::{boundary_derivatives, control_from_boundary, BoundaryDerivatives, RecoveredControls};
pub use cubic::{cubic_decode, cubic_encode, CubicBoundaryData};
pub use decasteljau::decasteljau;
pub use error::BezierError;
pub use spec::SplineSpec;
pub use spline::BezierSpline;
