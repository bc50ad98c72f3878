//! Exact decision procedures that emit certificates a sceptic can replay.
//!
//! Three independent procedures share one discipline — decide, then hand
//! back evidence that is cheaper to check than the decision was to make:
//!
//! * [`unitfrac`] enumerates bounded sums of unit fractions by interval
//!   splitting, with every emitted tuple re-verifiable by exact rational
//!   arithmetic.
//! * [`ks`] colours finite sets of rays in 3-space subject to
//!   orthogonality constraints, producing either a total colouring or a
//!   branch-and-deduce refutation tree that an independent checker replays
//!   against raw dot products.
//! * [`multipoly`] / [`chebyshev`] decide polynomial ideal membership by
//!   Buchberger completion, returning cofactor witnesses whose expansion
//!   reproves the membership by multiplication alone.
//!
//! All arithmetic is exact ([`exact_arith`]): arbitrary-precision rationals
//! and the ring Z[sqrt 2]. No floating point participates in any verdict.

pub mod chebyshev;
pub mod cli;
pub mod exact_arith;
pub mod ks;
pub mod multipoly;
pub mod selftest;
pub mod unitfrac;
