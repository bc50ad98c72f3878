//! Buchberger completion with representation tracking, and the membership
//! test built on it.
//!
//! Every polynomial that enters the basis carries its own expression as a
//! combination of the *original* generators. Completion, reduction and
//! inter-reduction all update these expressions, so a membership verdict
//! can return cofactors over the input ideal — the part of the computation
//! worth keeping after the Groebner machinery is thrown away.

use super::divide::divide;
use super::monomial::MonomialOrder;
use super::poly::Poly;
use super::MultiPolyError;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// A reduced Groebner basis together with one cofactor row per basis
/// element: `basis[i] == sum_j cofactors[i][j] * generators[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub basis: Vec<Poly>,
    pub cofactors: Vec<Vec<Poly>>,
    pub order: MonomialOrder,
}

impl GroebnerBasis {
    /// Re-expand every cofactor row; an independent audit of the
    /// bookkeeping done during completion.
    pub fn representations_valid(&self, generators: &[Poly]) -> Result<bool, MultiPolyError> {
        for (b, row) in self.basis.iter().zip(&self.cofactors) {
            if row.len() != generators.len() {
                return Ok(false);
            }
            let mut sum = Poly::zero(b.vars());
            for (c, g) in row.iter().zip(generators) {
                sum = sum.checked_add(&c.checked_mul(g)?)?;
            }
            if &sum != b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Cofactors c_j with goal = sum_j c_j * generators[j]; checking the
/// witness needs only polynomial multiplication and addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipWitness {
    pub cofactors: Vec<Poly>,
}

impl MembershipWitness {
    pub fn verify(&self, goal: &Poly, generators: &[Poly]) -> Result<bool, MultiPolyError> {
        if self.cofactors.len() != generators.len() {
            return Ok(false);
        }
        let mut sum = Poly::zero(goal.vars());
        for (c, g) in self.cofactors.iter().zip(generators) {
            sum = sum.checked_add(&c.checked_mul(g)?)?;
        }
        Ok(&sum == goal)
    }
}

#[derive(Debug, Clone)]
struct Tracked {
    poly: Poly,
    rep: Vec<Poly>,
}

impl Tracked {
    fn make_monic(&mut self, order: MonomialOrder) {
        let lc = self
            .poly
            .leading_term(order)
            .expect("nonzero polynomial")
            .1
            .clone();
        let inv = lc.recip();
        self.poly = self.poly.scale(&inv);
        for r in &mut self.rep {
            *r = r.scale(&inv);
        }
    }
}

/// Fully reduce `f` modulo the polynomials in `basis`, keeping the
/// representation over the original generators in sync.
fn reduce_tracked(
    f: &Tracked,
    basis: &[Tracked],
    order: MonomialOrder,
) -> Result<Tracked, MultiPolyError> {
    if basis.is_empty() {
        return Ok(f.clone());
    }
    let polys: Vec<Poly> = basis.iter().map(|t| t.poly.clone()).collect();
    let res = divide(&f.poly, &polys, order)?;
    let mut rep = f.rep.clone();
    for (q, b) in res.quotients.iter().zip(basis) {
        if q.is_zero() {
            continue;
        }
        for (slot, br) in rep.iter_mut().zip(&b.rep) {
            *slot = slot.checked_sub(&q.checked_mul(br)?)?;
        }
    }
    Ok(Tracked { poly: res.remainder, rep })
}

fn s_poly_tracked(
    f: &Tracked,
    g: &Tracked,
    order: MonomialOrder,
) -> Result<Tracked, MultiPolyError> {
    let (mf, cf) = f
        .poly
        .leading_term(order)
        .ok_or(MultiPolyError::ZeroPolynomial)?;
    let (mg, cg) = g
        .poly
        .leading_term(order)
        .ok_or(MultiPolyError::ZeroPolynomial)?;
    let lcm = mf.lcm(mg);
    let tf = lcm.try_div(mf).expect("lcm divisible");
    let tg = lcm.try_div(mg).expect("lcm divisible");
    let (icf, icg) = (cf.recip(), cg.recip());
    let poly = f
        .poly
        .mul_term(&tf, &icf)
        .checked_sub(&g.poly.mul_term(&tg, &icg))?;
    let rep = f
        .rep
        .iter()
        .zip(&g.rep)
        .map(|(rf, rg)| rf.mul_term(&tf, &icf).checked_sub(&rg.mul_term(&tg, &icg)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Tracked { poly, rep })
}

/// Buchberger completion to a *reduced* Groebner basis: monic elements,
/// no term of any element divisible by the leading monomial of another,
/// sorted by leading monomial descending. Deterministic: pairs are
/// processed lowest lcm-degree first (ties by index), and pairs with
/// coprime leading monomials are skipped (Buchberger's first criterion).
pub fn groebner_basis(
    generators: &[Poly],
    order: MonomialOrder,
) -> Result<GroebnerBasis, MultiPolyError> {
    if generators.is_empty() {
        return Err(MultiPolyError::NoGenerators);
    }
    for g in generators {
        let _ = generators[0].checked_add(g)?; // table compatibility
    }
    let vars = generators[0].vars();
    let n = generators.len();
    let unit_rep = |i: usize| -> Vec<Poly> {
        (0..n)
            .map(|j| if i == j { Poly::one(vars) } else { Poly::zero(vars) })
            .collect()
    };

    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut t = Tracked { poly: g.clone(), rep: unit_rep(i) };
        t.make_monic(order);
        basis.push(t);
    }

    let mut pairs: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let lcm_degree = |a: &Tracked, b: &Tracked, order: MonomialOrder| -> u64 {
        a.poly
            .leading_monomial(order)
            .expect("nonzero")
            .lcm(b.poly.leading_monomial(order).expect("nonzero"))
            .total_degree()
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push(Reverse((lcm_degree(&basis[i], &basis[j], order), i, j)));
        }
    }

    while let Some(Reverse((_, i, j))) = pairs.pop() {
        let (mi, mj) = (
            basis[i].poly.leading_monomial(order).expect("nonzero"),
            basis[j].poly.leading_monomial(order).expect("nonzero"),
        );
        // First criterion: coprime leading monomials reduce to zero anyway.
        if mi.lcm(mj) == mi.mul(mj) {
            continue;
        }
        let s = s_poly_tracked(&basis[i], &basis[j], order)?;
        if s.poly.is_zero() {
            continue;
        }
        let mut r = reduce_tracked(&s, &basis, order)?;
        if r.poly.is_zero() {
            continue;
        }
        r.make_monic(order);
        let idx = basis.len();
        for k in 0..idx {
            pairs.push(Reverse((lcm_degree(&basis[k], &r, order), k, idx)));
        }
        basis.push(r);
    }

    // Minimise: drop elements whose leading monomial another's divides.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        let mi = basis[i].poly.leading_monomial(order).expect("nonzero");
        for (j, t) in basis.iter().enumerate() {
            if i != j && keep[j] {
                let mj = t.poly.leading_monomial(order).expect("nonzero");
                if mj.divides(mi) && (mj != mi || j > i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let mut minimal: Vec<Tracked> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(t, k)| k.then_some(t))
        .collect();

    // Inter-reduce: every element fully reduced against the others. Leading
    // monomials are untouched (they are mutually irreducible after
    // minimisation), so one pass in index order suffices.
    for i in 0..minimal.len() {
        let others: Vec<Tracked> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, t)| (j != i).then(|| t.clone()))
            .collect();
        if others.is_empty() {
            continue;
        }
        let mut r = reduce_tracked(&minimal[i], &others, order)?;
        debug_assert!(!r.poly.is_zero());
        r.make_monic(order);
        minimal[i] = r;
    }

    minimal.sort_by(|a, b| {
        let (ma, mb) = (
            a.poly.leading_monomial(order).expect("nonzero"),
            b.poly.leading_monomial(order).expect("nonzero"),
        );
        order.cmp(mb, ma)
    });

    Ok(GroebnerBasis {
        basis: minimal.iter().map(|t| t.poly.clone()).collect(),
        cofactors: minimal.into_iter().map(|t| t.rep).collect(),
        order,
    })
}

/// Convenience wrapper returning just the reduced basis.
pub fn buchberger(
    generators: &[Poly],
    order: MonomialOrder,
) -> Result<Vec<Poly>, MultiPolyError> {
    Ok(groebner_basis(generators, order)?.basis)
}

/// Definitional check: every S-polynomial of the set reduces to zero
/// against the set. This certifies a completed basis without rerunning
/// (or trusting) the completion.
pub fn is_groebner_basis(basis: &[Poly], order: MonomialOrder) -> Result<bool, MultiPolyError> {
    for p in basis {
        if p.is_zero() {
            return Err(MultiPolyError::ZeroPolynomial);
        }
    }
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = super::divide::s_polynomial(&basis[i], &basis[j], order)?;
            if s.is_zero() {
                continue;
            }
            let r = divide(&s, basis, order)?.remainder;
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Decide whether `goal` lies in the ideal generated by `generators`
/// (all in the same variable table), optionally with a cofactor witness
/// over the original generators.
pub fn ideal_member(
    goal: &Poly,
    generators: &[Poly],
    order: MonomialOrder,
    want_witness: bool,
) -> Result<(bool, Option<MembershipWitness>), MultiPolyError> {
    let _ = goal.checked_add(&generators.first().cloned().unwrap_or_else(|| goal.clone()))?;
    let gb = groebner_basis(generators, order)?;
    if gb.basis.is_empty() {
        // all generators were zero: the ideal is {0}
        let member = goal.is_zero();
        let witness = (member && want_witness).then(|| MembershipWitness {
            cofactors: vec![Poly::zero(goal.vars()); generators.len()],
        });
        return Ok((member, witness));
    }
    let res = divide(goal, &gb.basis, order)?;
    if !res.remainder.is_zero() {
        return Ok((false, None));
    }
    if !want_witness {
        return Ok((true, None));
    }
    let mut cofactors = vec![Poly::zero(goal.vars()); generators.len()];
    for (q, row) in res.quotients.iter().zip(&gb.cofactors) {
        if q.is_zero() {
            continue;
        }
        for (slot, c) in cofactors.iter_mut().zip(row) {
            *slot = slot.checked_add(&q.checked_mul(c)?)?;
        }
    }
    Ok((true, Some(MembershipWitness { cofactors })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rational, Rational};
    use crate::multipoly::{parse_poly, VarTable};
    use num_traits::{One, Zero};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn xy() -> Arc<VarTable> {
        VarTable::new(["x", "y"]).unwrap()
    }

    fn p(src: &str) -> Poly {
        parse_poly(src, &xy()).unwrap()
    }

    fn assert_reduced(basis: &[Poly], order: MonomialOrder) {
        for (i, b) in basis.iter().enumerate() {
            let (_, lc) = b.leading_term(order).unwrap();
            assert!(lc.is_one(), "basis element {i} is not monic: {b}");
            for (j, other) in basis.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lm = other.leading_monomial(order).unwrap();
                for (m, _) in b.terms() {
                    assert!(
                        !lm.divides(m),
                        "term {m:?} of element {i} reducible by element {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn already_a_groebner_basis() {
        let gens = [p("x^2 - y"), p("y^2 - 1")];
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let gb = groebner_basis(&gens, order).unwrap();
            assert_eq!(gb.basis, vec![p("x^2 - y"), p("y^2 - 1")]);
            assert!(is_groebner_basis(&gb.basis, order).unwrap());
            assert!(gb.representations_valid(&gens).unwrap());
            assert_reduced(&gb.basis, order);
        }
    }

    #[test]
    fn completion_adds_the_missing_elements() {
        // Classic grlex example: completing [x^3 - 2xy, x^2 y - 2y^2 + x]
        // collapses to the reduced basis [x^2, xy, y^2 - x/2].
        let gens = [p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x")];
        let gb = groebner_basis(&gens, MonomialOrder::GrLex).unwrap();
        assert_eq!(
            gb.basis,
            vec![p("x^2"), p("x*y"), p("y^2 - 1/2*x")]
        );
        assert!(is_groebner_basis(&gb.basis, MonomialOrder::GrLex).unwrap());
        assert!(gb.representations_valid(&gens).unwrap());
        assert_reduced(&gb.basis, MonomialOrder::GrLex);
        // the input alone is not a Groebner basis
        assert!(!is_groebner_basis(&gens, MonomialOrder::GrLex).unwrap());
    }

    #[test]
    fn constants_collapse_the_basis() {
        let gb = groebner_basis(&[p("x - 1"), p("x")], MonomialOrder::Lex).unwrap();
        assert_eq!(gb.basis, vec![p("1")]);
        assert!(gb.representations_valid(&[p("x - 1"), p("x")]).unwrap());
    }

    #[test]
    fn degenerate_generator_lists() {
        assert!(matches!(
            groebner_basis(&[], MonomialOrder::Lex),
            Err(MultiPolyError::NoGenerators)
        ));
        let zero = Poly::zero(&xy());
        let gb = groebner_basis(&[zero.clone()], MonomialOrder::Lex).unwrap();
        assert!(gb.basis.is_empty());
        let gb = groebner_basis(&[zero.clone(), p("2*x")], MonomialOrder::Lex).unwrap();
        assert_eq!(gb.basis, vec![p("x")]);
        assert_eq!(gb.cofactors[0], vec![zero.clone(), Poly::constant(&xy(), rational(1, 2))]);
        // membership in the zero ideal
        let (member, w) = ideal_member(&zero, &[zero.clone()], MonomialOrder::Lex, true).unwrap();
        assert!(member);
        assert!(w.unwrap().verify(&zero, &[zero.clone()]).unwrap());
        let (member, _) = ideal_member(&p("x"), &[zero.clone()], MonomialOrder::Lex, true).unwrap();
        assert!(!member);
    }

    #[test]
    fn membership_with_witness() {
        let gens = [p("x^2 - y"), p("y^2 - 1")];
        // an obvious member, disguised
        let goal = &(&p("y + 1") * &gens[0]) + &(&p("x") * &gens[1]);
        let (member, witness) = ideal_member(&goal, &gens, MonomialOrder::Lex, true).unwrap();
        assert!(member);
        assert!(witness.unwrap().verify(&goal, &gens).unwrap());
        // x is not in the ideal: it survives reduction by both leads
        let (member, witness) = ideal_member(&p("x"), &gens, MonomialOrder::Lex, true).unwrap();
        assert!(!member);
        assert!(witness.is_none());
        // cross-check the negative verdict at a common zero of the ideal
        let point = [rational(1, 1), rational(1, 1)];
        for g in &gens {
            assert_eq!(g.eval(&point).unwrap(), Rational::zero());
        }
        assert!(!p("x").eval(&point).unwrap().is_zero());
    }

    prop_compose! {
        fn arb_poly(max_terms: usize)(terms in proptest::collection::vec(
            (proptest::collection::vec(0u32..3, 2), -3i64..4), 1..max_terms)) -> Poly {
            Poly::from_terms(
                &xy(),
                terms.into_iter().map(|(e, c)| {
                    (crate::multipoly::Monomial::from_exps(e), rational(c, 1))
                }),
            ).unwrap()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        // Completion output always certifies itself via the S-poly check,
        // and the cofactor bookkeeping reproduces every basis element.
        #[test]
        fn completion_self_certifies(g1 in arb_poly(4), g2 in arb_poly(4)) {
            prop_assume!(!g1.is_zero() && !g2.is_zero());
            let gens = [g1, g2];
            for order in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
                let gb = groebner_basis(&gens, order).unwrap();
                prop_assert!(is_groebner_basis(&gb.basis, order).unwrap());
                prop_assert!(gb.representations_valid(&gens).unwrap());
                assert_reduced(&gb.basis, order);
            }
        }

        // Known combinations are always members, and their witnesses check.
        #[test]
        fn combinations_are_members(g1 in arb_poly(4), g2 in arb_poly(4),
                                    c1 in arb_poly(3), c2 in arb_poly(3)) {
            prop_assume!(!g1.is_zero() && !g2.is_zero());
            let gens = [g1, g2];
            let goal = &(&c1 * &gens[0]) + &(&c2 * &gens[1]);
            let (member, witness) =
                ideal_member(&goal, &gens, MonomialOrder::GrevLex, true).unwrap();
            prop_assert!(member);
            prop_assert!(witness.unwrap().verify(&goal, &gens).unwrap());
        }

        // The verdict is order-independent even though the basis is not.
        #[test]
        fn verdict_agrees_across_orders(g1 in arb_poly(3), g2 in arb_poly(3),
                                        goal in arb_poly(3)) {
            prop_assume!(!g1.is_zero() && !g2.is_zero());
            let gens = [g1, g2];
            let verdicts: Vec<bool> =
                [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex]
                .iter()
                .map(|&o| ideal_member(&goal, &gens, o, false).unwrap().0)
                .collect();
            prop_assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{verdicts:?}");
        }
    }
}
