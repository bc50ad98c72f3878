//! Boolean colourings of rays in 3-space under orthogonality constraints.
//!
//! A finite set of rays (directions through the origin, with coordinates
//! in Z[sqrt 2]) is *colourable* if each ray can be painted green or red
//! so that no two orthogonal rays are both green and every mutually
//! orthogonal triple has exactly one green member. The solver decides
//! colourability by unit-style propagation plus case splits, and — the
//! point of the exercise — emits a certificate either way: a total
//! colouring, or a refutation tree whose every inference an independent
//! checker replays against raw dot products.

mod certificate;
mod checker;
mod emit;
mod graph;
mod solver;
mod vec3;

pub use certificate::{
    BranchTree, Certificate, CertificateDoc, Colour, ContradictionWitness, DeductionStep, RayDoc,
    Rule,
};
pub use checker::{check_certificate, CheckFailure};
pub use emit::{emit, emit_doc, emit_inconclusive, EmitFormat};
pub use graph::{
    parse_assumption_file, parse_vector_file, peres33, peres33_compact, peres_graph,
    wlog_assumptions, OrthGraph, Ray,
};
pub use solver::{greedy, propagate, search, GreedyOutcome, PartialColoring, PropagationOutcome};
pub use vec3::Vec3;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KsError {
    #[error("input {position} is the zero vector, which spans no ray")]
    ZeroVector { position: usize },
    #[error("duplicate ray: inputs {first} and {second} span the same line")]
    DuplicateRay { first: String, second: String },
    #[error("no ray in the graph matches the vector {vector}")]
    UnknownRay { vector: String },
    #[error("ray {ray} is assumed more than once")]
    RepeatedAssumption { ray: String },
    #[error("ray index {index} out of range (graph has {size} rays)")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed certificate document: {0}")]
    Document(String),
}
