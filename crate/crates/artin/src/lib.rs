//! Artin and Coxeter groups of labeled graphs: presentations, word problems, Cayley
//! balls, dual hypergraphs, the twelve region counterexample and wall probes.

pub mod ball;
pub mod blocks;
pub mod dihedral;
pub mod example;
pub mod graph;
pub mod hypergraph;
pub mod probe;
pub mod tits;

pub use ball::{build_cayley_ball, build_cayley_ball_capped, project_edges, project_vertices, CayleyBall, DEFAULT_CAP};
pub use blocks::{block_factorization, BlockRun, Form};
pub use dihedral::{dihedral_word_problem, CoxeterElement, GarsideForm, NormalForm, WordVerdict};
pub use example::{a2_graph, example_a2_diagram, example_a2_report, A2Report};
pub use graph::{classify_graph, standard_presentation, GraphFlags, LabeledGraph, Target};
pub use hypergraph::{all_hypergraphs, hypergraph_dot, trace_hypergraph, HyperEdge, Hypergraph, Meeting};
pub use probe::{coxeter_wall_probe, probe_all, Candidate, ProbeOutcome, ProbeSummary};
pub use tits::{tits_coxeter_word_problem, CoxeterOracle};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArtinError {
    #[error("bad graph: {0}")]
    BadGraph(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("label {0} is below 2")]
    BadLabel(u32),
    #[error("element count passed the cap of {0}")]
    CapExceeded(usize),
    #[error("face {0} has an odd number of sides")]
    OddFace(String),
    #[error("no edge {0}")]
    BadEdge(String),
    #[error("faces {0} and {1} share no edge")]
    NotAdjacent(String, String),
    #[error("the wall does not meet face {0}")]
    WallMissesSigma(String),
    #[error("{0}")]
    Malformed(String),
    #[error(transparent)]
    Diagram(#[from] recur_diagrams::DiagramError),
    #[error(transparent)]
    Complex(#[from] recur_complex::ComplexError),
}

pub(crate) fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}
