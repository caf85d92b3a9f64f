//! Finite polygonal 2-complexes with metric shape tags.
//!
//! A [`Complex`] is validated on construction: every face boundary is a
//! closed cycle of directed edges, and tagged faces match their catalog
//! shape side for side.

mod format;
pub mod fixtures;
mod homology;
mod ops;
mod subdivide;
mod surgery;
mod wise;

pub use format::{validate_complex, RawComplex, RawEdge, RawFace};
pub use homology::{betti_numbers, rank_over_q, Betti};
pub use ops::{Classification, GalleryClass, GalleryComponent};
pub use subdivide::SubdivisionMode;
pub use surgery::CollapseReport;
pub use wise::WiseNerve;

use recur_shapes::{Quad, ShapeKind, SideMap};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    /// Vertex indices of the start and end.
    pub ends: [usize; 2],
    pub length: Quad,
}

/// A directed edge reference in a face boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

impl Dart {
    pub fn new(edge: usize, forward: bool) -> Self {
        Dart { edge, forward }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeRef {
    pub kind: ShapeKind,
    pub scale: Quad,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub boundary: Vec<Dart>,
    pub shape: Option<ShapeRef>,
    pub sides: SideMap,
}

/// A validated finite 2-complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Complex {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    DuplicateId,
    UnknownVertex,
    DanglingEdgeReference,
    BadOrientationFlag,
    OpenBoundary,
    EmptyBoundary,
    UnknownShape,
    ShapeSideCount,
    BadSideMap,
    SideLengthMismatch,
    BadScalar,
    NonPositiveLength,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location}: {kind:?}: {detail}")]
pub struct Violation {
    pub location: String,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("invalid complex ({} violation(s)): {}", .0.len(), .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("malformed complex file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unknown edge id {0:?}")]
    UnknownEdge(String),
    #[error("sphere component {component} not coning-eligible: edge {edge} has degree {degree}")]
    SphereNotConable { component: usize, edge: String, degree: usize },
    #[error("altitude subdivision needs right triangles; face {0} is not one")]
    NotRightTriangle(String),
    #[error("altitude subdivision: faces disagree on edge {0}")]
    AltitudeConflict(String),
}

impl Complex {
    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn face_index(&self, id: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.id == id)
    }

    pub fn dart_start(&self, d: Dart) -> usize {
        let e = &self.edges[d.edge];
        if d.forward {
            e.ends[0]
        } else {
            e.ends[1]
        }
    }

    pub fn dart_end(&self, d: Dart) -> usize {
        let e = &self.edges[d.edge];
        if d.forward {
            e.ends[1]
        } else {
            e.ends[0]
        }
    }

    /// Vertices of a face, in boundary order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].boundary.iter().map(|&d| self.dart_start(d)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Complex vertex at each model vertex of a tagged face.
    pub fn model_vertices(&self, f: usize) -> Vec<usize> {
        let face = &self.faces[f];
        let n = face.boundary.len();
        let mut out = vec![usize::MAX; n];
        for (k, &d) in face.boundary.iter().enumerate() {
            let side = face.sides.side(k);
            let v = if face.sides.forward() { self.dart_start(d) } else { self.dart_end(d) };
            out[side] = v;
        }
        out
    }
}
