//! Chebyshev polynomials of the first kind and their multiplication
//! formula 2*T_m*T_{m+k} = T_{2m+k} + T_k.
//!
//! The formula is checked two ways, deliberately different in kind:
//!
//! * [`verify_mult`] expands both sides for concrete m, k by the
//!   recurrence — a computation, one instance at a time;
//! * [`prove_mult_formula`] proves the induction step for all m, k at
//!   once, as an ideal-membership fact: writing the five instances of the
//!   recurrence and of the formula at lower indices as polynomials in
//!   eleven indeterminates (one per Chebyshev symbol plus x), the shifted
//!   formula lies in the ideal they generate, and the returned cofactors
//!   are the proof. Together with the small base cases, that certifies the
//!   identity for every m and k.
//!
//! The bridge between the two readings is [`ChebInstance::images`]: under
//! the intended substitution of concrete Chebyshev polynomials, every
//! abstract generator (and the goal) collapses to zero identically.

use crate::multipoly::{
    ideal_member, parse_poly, MembershipWitness, MonomialOrder, MultiPolyError, Poly, VarTable,
};
use std::sync::Arc;

/// T_n as a polynomial in the ring Q[x]: T_0 = 1, T_1 = x,
/// T_{n+2} = 2x*T_{n+1} - T_n.
pub fn cheb(n: usize) -> Poly {
    let vars = VarTable::new(["x"]).expect("valid table");
    let x = Poly::var(&vars, 0).expect("in range");
    let two_x = x.scale(&crate::exact_arith::rational(2, 1));
    let mut prev = Poly::one(&vars); // T_0
    if n == 0 {
        return prev;
    }
    let mut curr = x; // T_1
    for _ in 1..n {
        let next = &(&two_x * &curr) - &prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Exact check of 2*T_m*T_{m+k} == T_{2m+k} + T_k for one pair (m, k).
pub fn verify_mult(m: usize, k: usize) -> bool {
    let lhs = (&cheb(m) * &cheb(m + k)).scale(&crate::exact_arith::rational(2, 1));
    let rhs = &cheb(2 * m + k) + &cheb(k);
    lhs == rhs
}

/// The induction step as a membership problem: eleven indeterminates
/// standing for T_{m+2}, T_{k+2}, T_{m+k+2}, T_{2m+k+4}, x, T_{m+1},
/// T_{k+1}, T_{2m+k+3}, T_m, T_k, T_{2m+k+2}; five generators (the
/// formula at the two lower index pairs, and three recurrence instances);
/// and the formula at the shifted indices as the goal.
#[derive(Debug, Clone)]
pub struct ChebInstance {
    pub vars: Arc<VarTable>,
    pub generators: Vec<Poly>,
    pub goal: Poly,
}

/// Variable names in table order, paired with the index shift (s_m, s_k,
/// s_x) such that the variable stands for T_{s_m*m + s_k*k + s_x} — except
/// `x` itself, marked by `None`.
const VARS: [(&str, Option<(usize, usize, usize)>); 11] = [
    ("Tm2", Some((1, 0, 2))),
    ("Tk2", Some((0, 1, 2))),
    ("Tmk2", Some((1, 1, 2))),
    ("T2mk4", Some((2, 1, 4))),
    ("x", None),
    ("Tm1", Some((1, 0, 1))),
    ("Tk1", Some((0, 1, 1))),
    ("T2mk3", Some((2, 1, 3))),
    ("Tm", Some((1, 0, 0))),
    ("Tk", Some((0, 1, 0))),
    ("T2mk2", Some((2, 1, 2))),
];

const GENERATORS: [&str; 5] = [
    "2*Tm1*Tmk2 - T2mk3 - Tk1",
    "2*Tm*Tmk2 - T2mk2 - Tk2",
    "Tm2 - 2*x*Tm1 + Tm",
    "T2mk4 - 2*x*T2mk3 + T2mk2",
    "Tk2 - 2*x*Tk1 + Tk",
];

const GOAL: &str = "2*Tm2*Tmk2 - T2mk4 - Tk";

/// Build the abstract instance.
pub fn instance() -> ChebInstance {
    let vars = VarTable::new(VARS.iter().map(|(name, _)| *name)).expect("valid table");
    let generators = GENERATORS
        .iter()
        .map(|src| parse_poly(src, &vars).expect("well-formed generator"))
        .collect();
    let goal = parse_poly(GOAL, &vars).expect("well-formed goal");
    ChebInstance { vars, generators, goal }
}

impl ChebInstance {
    /// The concrete polynomial each indeterminate stands for at (m, k).
    pub fn images(&self, m: usize, k: usize) -> Vec<Poly> {
        VARS.iter()
            .map(|(_, shift)| match shift {
                None => {
                    let xr = VarTable::new(["x"]).expect("valid table");
                    Poly::var(&xr, 0).expect("in range")
                }
                Some((sm, sk, sx)) => cheb(sm * m + sk * k + sx),
            })
            .collect()
    }

    /// Substitute concrete Chebyshev polynomials for the indeterminates;
    /// sound instances send every generator and the goal to zero.
    pub fn substituted(&self, m: usize, k: usize) -> Result<(Vec<Poly>, Poly), MultiPolyError> {
        let images = self.images(m, k);
        let gens = self
            .generators
            .iter()
            .map(|g| g.substitute(&images))
            .collect::<Result<Vec<_>, _>>()?;
        let goal = self.goal.substitute(&images)?;
        Ok((gens, goal))
    }
}

/// Decide the induction step and return the cofactor witness. A `true`
/// verdict plus the base cases proves 2*T_m*T_{m+k} = T_{2m+k} + T_k for
/// all m, k; the witness re-proves itself by expansion.
pub fn prove_mult_formula() -> Result<(bool, Option<MembershipWitness>), MultiPolyError> {
    let inst = instance();
    ideal_member(&inst.goal, &inst.generators, MonomialOrder::GrevLex, true)
}
