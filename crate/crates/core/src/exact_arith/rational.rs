//! Arbitrary-precision rationals.
//!
//! Backed by `num_rational::BigRational`, which already maintains the
//! canonical form we rely on everywhere (lowest terms, positive
//! denominator). This module adds the two pieces the backing crate leaves
//! to callers: parsing that reports zero denominators as errors instead of
//! panicking, and checked division.

use super::ExactArithError;
use num_bigint::BigInt;
use num_traits::Zero;
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Convenience constructor from machine integers. Panics on `d == 0`,
/// like `Rational::new`; use [`parse_rational`] for untrusted input.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"n"` or `"n/d"` with optional sign, e.g. `-3/4`.
/// Unlike `Rational::from_str`, a zero denominator is an error, not a panic.
pub fn parse_rational(input: &str) -> Result<Rational, ExactArithError> {
    let s = input.trim();
    let parse_err = |reason: &str| ExactArithError::Parse {
        what: "rational",
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n = BigInt::from_str(numer).map_err(|e| parse_err(&format!("bad numerator: {e}")))?;
    let d = match denom {
        Some(d) => BigInt::from_str(d).map_err(|e| parse_err(&format!("bad denominator: {e}")))?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(ExactArithError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// Exact division, rejecting a zero divisor instead of panicking.
pub fn checked_div(x: &Rational, y: &Rational) -> Result<Rational, ExactArithError> {
    if y.is_zero() {
        Err(ExactArithError::DivisionByZero)
    } else {
        Ok(x / y)
    }
}
