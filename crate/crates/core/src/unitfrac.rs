//! Enumeration of bounded sums of unit fractions.
//!
//! Problem: find all nondecreasing tuples (x1 <= ... <= xk) of integers,
//! all >= a given minimum, with 1/x1 + ... + 1/xk equal to a target
//! rational exactly. The decision that makes this finite is the interval
//! split: once x1 <= ... <= x_{i-1} are fixed and r is the remaining
//! target, the next denominator x must satisfy
//!
//! * 1/x < r when at least two terms remain (later terms are strictly
//!   positive), or 1/x <= r for the final term, and
//! * (terms_left)/x >= r, else even terms_left copies of 1/x fall short.
//!
//! Both bounds are computed by exact rational arithmetic, so recursion on
//! the finitely many admissible x enumerates every solution exactly once.

use crate::exact_arith::Rational;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitfracError {
    #[error("target (or remaining target) must be positive")]
    NonPositiveTarget,
    #[error("number of terms must be at least 1")]
    NoTerms,
    #[error("denominator bound does not fit in u64")]
    DenominatorOverflow,
}

/// Admissible closed interval `[lo, hi]` for the next denominator, given
/// the remaining target, how many terms are still to be chosen (including
/// this one), and the nondecreasing floor from the previous denominator.
/// The interval is empty exactly when `lo > hi`; every empty interval is
/// returned as the canonical `(1, 0)`.
pub fn next_range(
    remaining: &Rational,
    terms_left: u32,
    lower: u64,
) -> Result<(u64, u64), UnitfracError> {
    if remaining <= &Rational::zero() {
        return Err(UnitfracError::NonPositiveTarget);
    }
    if terms_left == 0 {
        return Err(UnitfracError::NoTerms);
    }
    let recip = remaining.recip(); // 1/r > 0
    let fit = if terms_left >= 2 {
        // smallest x with 1/x < r, i.e. x > 1/r
        recip.floor().to_integer() + 1
    } else {
        // final term: smallest x with 1/x <= r
        recip.ceil().to_integer()
    };
    let lo = fit.max(BigInt::from(lower)).max(BigInt::one());
    let hi = (Rational::from_integer(BigInt::from(terms_left)) / remaining)
        .floor()
        .to_integer();
    if lo > hi {
        return Ok((1, 0)); // canonical empty interval
    }
    let lo = lo.to_u64().ok_or(UnitfracError::DenominatorOverflow)?;
    let hi = hi.to_u64().ok_or(UnitfracError::DenominatorOverflow)?;
    Ok((lo, hi))
}

/// All solutions, sorted lexicographically (each tuple nondecreasing).
pub fn enumerate(
    terms: u32,
    target: &Rational,
    min_denom: u64,
) -> Result<Vec<Vec<u64>>, UnitfracError> {
    if terms == 0 {
        return Err(UnitfracError::NoTerms);
    }
    if target <= &Rational::zero() {
        return Err(UnitfracError::NonPositiveTarget);
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(terms as usize);
    split(target.clone(), terms, min_denom.max(1), &mut prefix, &mut out)?;
    Ok(out)
}

fn split(
    remaining: Rational,
    terms_left: u32,
    lower: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) -> Result<(), UnitfracError> {
    if terms_left == 1 {
        // The last denominator is forced: remaining must itself be a unit
        // fraction 1/x with x at least the nondecreasing floor.
        if remaining.numer().is_one() && *remaining.denom() >= BigInt::from(lower) {
            let x = remaining
                .denom()
                .to_u64()
                .ok_or(UnitfracError::DenominatorOverflow)?;
            let mut tuple = prefix.clone();
            tuple.push(x);
            out.push(tuple);
        }
        return Ok(());
    }
    let (lo, hi) = next_range(&remaining, terms_left, lower)?;
    for x in lo..=hi {
        let rest = &remaining - unit(x);
        prefix.push(x);
        split(rest, terms_left - 1, x, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

fn unit(x: u64) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(x))
}

/// Exact re-verification of a candidate tuple against the target.
pub fn tuple_sums_to(denoms: &[u64], target: &Rational) -> bool {
    let sum = denoms
        .iter()
        .map(|&x| unit(x))
        .fold(Rational::zero(), |acc, u| acc + u);
    sum == *target
}

/// Independent oracle: scan all nondecreasing tuples with denominators up
/// to `cap`, keeping those that sum exactly to the target. Shares no logic
/// with [`enumerate`] beyond two self-evident prunes (a term may not
/// overshoot the remaining target, and once even `terms_left` copies of
/// 1/x fall short of it, no larger x can ever work).
pub fn brute_force(
    terms: u32,
    target: &Rational,
    min_denom: u64,
    cap: u64,
) -> Result<Vec<Vec<u64>>, UnitfracError> {
    if terms == 0 {
        return Err(UnitfracError::NoTerms);
    }
    if target <= &Rational::zero() {
        return Err(UnitfracError::NonPositiveTarget);
    }
    fn scan(
        remaining: &Rational,
        terms_left: u32,
        lower: u64,
        cap: u64,
        prefix: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if terms_left == 0 {
            if remaining.is_zero() {
                out.push(prefix.clone());
            }
            return;
        }
        for x in lower..=cap {
            let u = unit(x);
            if Rational::from_integer(BigInt::from(terms_left)) * &u < *remaining {
                break; // all further x are smaller still
            }
            if u > *remaining {
                continue; // overshoots; larger x may still fit
            }
            prefix.push(x);
            scan(&(remaining - u), terms_left - 1, x, cap, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    scan(target, terms, min_denom.max(1), cap, &mut Vec::new(), &mut out);
    Ok(out)
}
