//! Multivariate division with remainder, made deterministic: at each step
//! reduce the order-maximal monomial that any divisor's leading monomial
//! divides, using the first such divisor in list order. The remainder
//! contains no monomial divisible by any divisor's leading monomial, and
//! the quotients reassemble the dividend exactly.

use super::monomial::MonomialOrder;
use super::poly::Poly;
use super::MultiPolyError;
use crate::exact_arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    /// One quotient per divisor: f = sum quotients[i] * divisors[i] + remainder.
    pub quotients: Vec<Poly>,
    pub remainder: Poly,
}

pub fn divide(
    f: &Poly,
    divisors: &[Poly],
    order: MonomialOrder,
) -> Result<DivisionResult, MultiPolyError> {
    if divisors.is_empty() {
        return Err(MultiPolyError::NoGenerators);
    }
    let mut leads = Vec::with_capacity(divisors.len());
    for d in divisors {
        let _ = f.checked_add(d)?; // table compatibility check
        let (m, c) = d
            .leading_term(order)
            .ok_or(MultiPolyError::ZeroPolynomial)?;
        leads.push((m.clone(), c.clone()));
    }

    let mut work = f.clone();
    let mut quotients = vec![Poly::zero(f.vars()); divisors.len()];
    loop {
        // Order-maximal reducible monomial of the working polynomial.
        let target = work
            .terms()
            .filter(|(m, _)| leads.iter().any(|(lm, _)| lm.divides(m)))
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = target else { break };
        let j = leads
            .iter()
            .position(|(lm, _)| lm.divides(&m))
            .expect("a divisor matched above");
        let (lm, lc) = &leads[j];
        let t = m.try_div(lm).expect("divisibility checked");
        let q: Rational = &c / lc;
        work = work.checked_sub(&divisors[j].mul_term(&t, &q))?;
        quotients[j] = quotients[j].checked_add(&Poly::from_terms(
            f.vars(),
            [(t, q)],
        )?)?;
    }
    Ok(DivisionResult { quotients, remainder: work })
}

/// S-polynomial: cancel the leading terms of f and g against their lcm.
pub fn s_polynomial(
    f: &Poly,
    g: &Poly,
    order: MonomialOrder,
) -> Result<Poly, MultiPolyError> {
    let _ = f.checked_add(g)?; // table compatibility check
    let (mf, cf) = f.leading_term(order).ok_or(MultiPolyError::ZeroPolynomial)?;
    let (mg, cg) = g.leading_term(order).ok_or(MultiPolyError::ZeroPolynomial)?;
    let lcm = mf.lcm(mg);
    let tf = lcm.try_div(mf).expect("lcm divisible by both");
    let tg = lcm.try_div(mg).expect("lcm divisible by both");
    let sf = f.mul_term(&tf, &cf.recip());
    let sg = g.mul_term(&tg, &cg.recip());
    sf.checked_sub(&sg)
}
