//! Presentations, pieces and small-cancellation checks, planar van Kampen
//! diagrams with their strip structure, and bounded disc-diagram search.

pub mod diagram;
pub mod dihedral;
pub mod dot;
pub mod fixtures;
pub mod pieces;
pub mod presentation;
pub mod search;
pub mod strips;
pub mod word;

pub use diagram::{validate_diagram, DEdge, DiagramVerdict, MirrorPair, PlanarDiagram, RawDiagram, Region};
pub use dihedral::{corner_subwords, dihedral_presentation, p_m, separating_vertices, CornerSubwords, Separation};
pub use pieces::{check_small_cancellation, compute_pieces, Condition, PieceMode, PieceTable, ScVerdict, Witness};
pub use presentation::{Presentation, RawPresentation};
pub use search::{complex_presentation, search_complex, search_disc_diagram, SearchOutcome};
pub use strips::{find_strips, StripReport, Trichotomy};
pub use word::{Alphabet, Letter, Word};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("cannot parse word {word:?} at {pos}: {reason}")]
    BadWord { word: String, pos: usize, reason: String },
    #[error("unknown {kind} {id:?}")]
    Unknown { kind: &'static str, id: String },
    #[error("region {region} label {label} is not a dihedral relator reading")]
    NotDihedral { region: String, label: String },
    #[error("no diagram within area {0}")]
    BoundExhausted(usize),
    #[error("diagram is not a planar disc: {0}")]
    Malformed(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Complex(#[from] recur_complex::ComplexError),
}
