//! Direction sets over shaped complexes and their transition digraphs.

mod digraph;
mod export;
mod report;
mod tokens;

pub use digraph::{build_markov, check_stationary_uniform, find_recurrent_cycle, Stationarity, TransitionDigraph};
pub use export::{digraph_dot, digraph_text};
pub use report::{check_recurrence, Reachability, RecurrenceReport, VVerdict};
pub use tokens::{DirectionSet, Token};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("face {0} has no shape tag")]
    UntaggedFace(String),
    #[error("token {0} is not in A")]
    UnknownToken(String),
    #[error("{b} is not a continuation of {a}")]
    NotContinuation { a: String, b: String },
    #[error("I is undefined at {0}")]
    NoChord(String),
    #[error("not recurrent: no cycle through {from} -> {to}")]
    NotRecurrent { from: String, to: String },
}
