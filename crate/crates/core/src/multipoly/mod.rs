//! Sparse multivariate polynomials over the rationals, with the three
//! classical monomial orders, multivariate division, Buchberger completion,
//! and ideal-membership tests that return cofactor witnesses.
//!
//! The witness is the point: `ideal_member` does not just answer yes/no,
//! it hands back polynomials c_i with goal = sum c_i * g_i over the
//! *original* generators, so the verdict can be re-proved by expanding the
//! combination — no Groebner theory needed to check it.

mod buchberger;
mod divide;
mod monomial;
mod parse;
mod poly;
mod vartable;

pub use buchberger::{
    buchberger, groebner_basis, ideal_member, is_groebner_basis, GroebnerBasis,
    MembershipWitness,
};
pub use divide::{divide, s_polynomial, DivisionResult};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::Poly;
pub use vartable::VarTable;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiPolyError {
    #[error("variable tables differ: [{0}] vs [{1}]")]
    TableMismatch(String, String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("empty generator list")]
    NoGenerators,
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid variable table: {0}")]
    BadVarTable(String),
    #[error("variable index {0} out of range")]
    VarOutOfRange(usize),
}
