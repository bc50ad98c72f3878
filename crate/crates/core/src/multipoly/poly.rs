//! Sparse polynomials with rational coefficients.
//!
//! Canonical form is maintained by construction: a term map from monomial
//! to nonzero coefficient. Equality is therefore structural, and printing
//! is deterministic (terms descending in a chosen monomial order).

use super::monomial::{Monomial, MonomialOrder};
use super::vartable::VarTable;
use super::MultiPolyError;
use crate::exact_arith::Rational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Poly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other) && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl Poly {
    pub fn zero(vars: &Arc<VarTable>) -> Poly {
        Poly { vars: Arc::clone(vars), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarTable>) -> Poly {
        Poly::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars.len()), c);
        }
        Poly { vars: Arc::clone(vars), terms }
    }

    /// The variable with the given table index, as a polynomial.
    pub fn var(vars: &Arc<VarTable>, i: usize) -> Result<Poly, MultiPolyError> {
        if i >= vars.len() {
            return Err(MultiPolyError::VarOutOfRange(i));
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(vars.len(), i, 1), Rational::one());
        Ok(Poly { vars: Arc::clone(vars), terms })
    }

    /// Sum of explicit terms; like coefficients are combined and zeros
    /// dropped, so the result is canonical whatever the input.
    pub fn from_terms<I>(vars: &Arc<VarTable>, terms: I) -> Result<Poly, MultiPolyError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != vars.len() {
                return Err(MultiPolyError::ArityMismatch {
                    expected: vars.len(),
                    got: m.nvars(),
                });
            }
            let slot = map.entry(m).or_insert_with(Rational::zero);
            *slot += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Poly { vars: Arc::clone(vars), terms: map })
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exps()[i]).max()
    }

    /// Maximal term under the given order; `None` for the zero polynomial.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    fn compatible(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn require_compatible(&self, other: &Poly) -> Result<(), MultiPolyError> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(MultiPolyError::TableMismatch(
                self.vars.display(),
                other.vars.display(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, MultiPolyError> {
        self.require_compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(m);
            }
        }
        Ok(Poly { vars: Arc::clone(&self.vars), terms })
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, MultiPolyError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, MultiPolyError> {
        self.require_compatible(other)?;
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let slot = terms.entry(m).or_insert_with(Rational::zero);
                *slot += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Poly { vars: Arc::clone(&self.vars), terms })
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiply by the single term c * m.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same table");
        }
        acc
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, MultiPolyError> {
        if point.len() != self.vars.len() {
            return Err(MultiPolyError::ArityMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Substitute a polynomial image for every variable. The images fix
    /// the result's variable table (they must all share one).
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly, MultiPolyError> {
        if images.len() != self.vars.len() {
            return Err(MultiPolyError::ArityMismatch {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.vars(),
            None => return Err(MultiPolyError::NoGenerators),
        };
        for img in images {
            images[0].require_compatible(img)?;
        }
        let mut total = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut v = Poly::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = v.checked_mul(&images[i].pow(e))?;
                }
            }
            total = total.checked_add(&v)?;
        }
        Ok(total)
    }

    /// Render with terms descending in the given order; output parses back
    /// via `parse_poly`.
    pub fn to_string_with(&self, order: MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| order.cmp(b, a));
        let mut out = String::new();
        for (pos, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&term_body(&self.vars, m, &mag));
        }
        out
    }
}

fn term_body(vars: &VarTable, m: &Monomial, mag: &Rational) -> String {
    if m.is_one() {
        return mag.to_string();
    }
    let mono = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars.name(i).to_string()
            } else {
                format!("{}^{}", vars.name(i), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*");
    if mag.is_one() {
        mono
    } else {
        format!("{mag}*{mono}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(MonomialOrder::GrevLex))
    }
}

// Operator sugar for code paths that already guarantee matching tables;
// panics on a mismatch (use the checked_* methods at trust boundaries).
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("variable table mismatch")
    }
}
impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("variable table mismatch")
    }
}
impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("variable table mismatch")
    }
}
impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}
