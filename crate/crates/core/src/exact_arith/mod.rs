//! Exact arithmetic substrate: arbitrary-precision rationals and the ring
//! Z[sqrt 2]. Everything downstream computes verdicts over these types;
//! floating point appears only in tests, as a cross-check.

mod quadint;
mod rational;

pub use quadint::{QuadInt, Sign};
pub use rational::{checked_div, parse_rational, rational, Rational};

use thiserror::Error;

/// Errors from parsing or partial operations in this module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
}
