use thiserror::Error;

use geospline_manifold::GeometryError;

#[derive(Debug, Clone, Error)]
pub enum BezierError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),

    #[error("invalid spline spec: {0}")]
    InvalidSpec(String),

    #[error("expected {expected} free control points, got {got}")]
    FreePointCount { expected: usize, got: usize },

    #[error(
        "the C1 conditions of this closed spec couple cyclically through \
         low-degree segments and cannot be resolved explicitly"
    )]
    CyclicDependency,

    #[error("operation requires an all-cubic spec")]
    NotCubic,

    #[error("parameter {t} outside the spline domain [0, {len}]")]
    OutOfDomain { t: f64, len: f64 },

    #[error("free-point index {index} out of range ({count} free points)")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("control points live on different manifolds")]
    MixedManifolds,

    #[error("need at least {needed} control points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
}
