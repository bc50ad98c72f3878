//! The ring Z[sqrt 2]: numbers a + b*sqrt(2) with integer a, b.
//!
//! The representation (a, b) is unique because sqrt 2 is irrational, so
//! equality, zero tests and sign are all exact. Sign is decided without
//! leaving the integers: for mixed-sign components, a + b*sqrt2 > 0 iff
//! a^2 compares the right way against 2*b^2.

use super::ExactArithError;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Sign of a ring element, decided exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An element a + b*sqrt(2) of Z[sqrt 2].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadInt {
    /// Rational (integer) part.
    pub a: BigInt,
    /// Coefficient of sqrt 2.
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        QuadInt::new(0, 0)
    }

    pub fn one() -> Self {
        QuadInt::new(1, 0)
    }

    pub fn sqrt2() -> Self {
        QuadInt::new(0, 1)
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        QuadInt::new(a, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate a - b*sqrt(2).
    pub fn conj(&self) -> QuadInt {
        QuadInt { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm N(a + b*sqrt2) = a^2 - 2*b^2, an ordinary integer.
    /// Zero only for the zero element.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    /// Exact sign of the real number a + b*sqrt(2).
    pub fn sign(&self) -> Sign {
        use std::cmp::Ordering::*;
        let (sa, sb) = (self.a.sign(), self.b.sign());
        let from_bigint = |s: num_bigint::Sign| match s {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        };
        match (sa, sb) {
            (num_bigint::Sign::NoSign, _) => from_bigint(sb),
            (_, num_bigint::Sign::NoSign) => from_bigint(sa),
            (num_bigint::Sign::Plus, num_bigint::Sign::Plus) => Sign::Positive,
            (num_bigint::Sign::Minus, num_bigint::Sign::Minus) => Sign::Negative,
            // Mixed signs: |a| vs |b|*sqrt2 decided by a^2 vs 2*b^2.
            // Equality is impossible here (sqrt 2 is irrational).
            (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
                match (&self.a * &self.a).cmp(&(BigInt::from(2) * &self.b * &self.b)) {
                    Greater => Sign::Positive,
                    Less => Sign::Negative,
                    Equal => unreachable!("a^2 == 2 b^2 with a, b nonzero"),
                }
            }
            (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => {
                match (BigInt::from(2) * &self.b * &self.b).cmp(&(&self.a * &self.a)) {
                    Greater => Sign::Positive,
                    Less => Sign::Negative,
                    Equal => unreachable!("a^2 == 2 b^2 with a, b nonzero"),
                }
            }
        }
    }

    /// Approximate real value; for diagnostics and test cross-checks only.
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN)
            + std::f64::consts::SQRT_2 * self.b.to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + a2 b1) s
        QuadInt {
            a: &self.a * &rhs.a + BigInt::from(2) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { a: -self.a.clone(), b: -self.b.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: QuadInt) -> QuadInt {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        -&self
    }
}

/// Printed normal form is always `a+b*s2`, e.g. `2-1*s2`, `0+0*s2`.
impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}*s2", self.a, self.b.magnitude())
        } else {
            write!(f, "{}+{}*s2", self.a, self.b)
        }
    }
}

/// Accepts `a`, `s2`, `b*s2`, and `a+b*s2` (each part with optional sign):
/// `3`, `-s2`, `2*s2`, `1-1*s2`, `-2+3*s2`.
impl FromStr for QuadInt {
    type Err = ExactArithError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| ExactArithError::Parse {
            what: "quadratic integer",
            input: input.to_string(),
            reason,
        };
        let s = input.trim();
        if s.is_empty() {
            return Err(err("empty input".into()));
        }
        // Split into at most two signed terms; the sign of a later term is
        // the '+'/'-' that separates it (never inside an integer literal,
        // whose sign can only be the leading character of a term).
        let mut terms: Vec<&str> = Vec::new();
        let mut start = 0;
        for (i, c) in s.char_indices().skip(1) {
            if c == '+' || c == '-' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);

        let mut a: Option<BigInt> = None;
        let mut b: Option<BigInt> = None;
        for term in terms {
            let term = term.trim();
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest.trim_start()),
                None => (1, term.strip_prefix('+').unwrap_or(term).trim_start()),
            };
            let (slot, text): (&mut Option<BigInt>, &str) = if body == "s2" {
                (&mut b, "1")
            } else if let Some(coeff) = body.strip_suffix("s2") {
                let coeff = coeff
                    .trim_end()
                    .strip_suffix('*')
                    .ok_or_else(|| err(format!("expected `*` before s2 in {term:?}")))?
                    .trim_end();
                (&mut b, coeff)
            } else {
                (&mut a, body)
            };
            let value = BigInt::from_str(text)
                .map_err(|e| err(format!("bad integer in {term:?}: {e}")))?;
            if slot.replace(BigInt::from(sign) * value).is_some() {
                return Err(err(format!("repeated {} part", if body.ends_with("s2") { "s2" } else { "integer" })));
            }
        }
        Ok(QuadInt {
            a: a.unwrap_or_else(BigInt::zero),
            b: b.unwrap_or_else(BigInt::zero),
        })
    }
}
