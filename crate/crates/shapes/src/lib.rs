//! Exact planar geometry for metrized cells.
//!
//! [`Quad`] is the number field Q(sqrt2, sqrt3); [`ShapeTemplate`] holds the
//! catalog polygons with their model direction anchors; [`chord`] and
//! [`billiard_trace`] follow straight segments inside a single polygon.

mod billiard;
mod point;
mod quad;
mod shape;

pub use billiard::{billiard_trace, chord, ChordSegment, Trace};
pub use point::Pt;
pub use quad::Quad;
pub use shape::{shape_catalog, Anchor, ShapeKind, ShapeTemplate, SideMap};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse scalar {input:?} at byte {pos}: {reason}")]
pub struct ParseScalarError {
    pub input: String,
    pub pos: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("unknown shape name {0:?}")]
    UnknownShape(String),
    #[error("Gon(2n) needs n >= 2, got {0}")]
    GonTooSmall(u32),
    #[error("Gon({0}) has no exact model in Q(sqrt2, sqrt3); use 4, 6 or 12")]
    GonNotExact(u32),
    #[error("chord from side {side} hits a polygon vertex")]
    VertexHit { side: usize },
    #[error("direction at side {side} does not point into the polygon")]
    NotInward { side: usize },
    #[error("anchor position must lie strictly inside side {side}")]
    BadPosition { side: usize },
}
