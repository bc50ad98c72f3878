//! Independent certificate validation.
//!
//! The checker trusts nothing from the solver: orthogonality is
//! recomputed from the ray vectors on every use, colourings are checked
//! against the raw constraints, and refutation trees are replayed step by
//! step. A tree is accepted only if every inference is justified by the
//! state before it, every split is over an uncoloured ray with both
//! colours covered, every leaf's contradiction witness really holds, and
//! the assumptions used are exactly the declared ones.

use super::certificate::{
    BranchTree, Certificate, Colour, ContradictionWitness, DeductionStep, Rule,
};
use super::graph::{OrthGraph, Ray};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckFailure {
    #[error("assignment covers {got} rays but the graph has {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("ray index {ray} is out of range")]
    RayOutOfRange { ray: usize },
    #[error("rays {0} and {1} are orthogonal and both green")]
    GreenPair(usize, usize),
    #[error("mutually orthogonal triple {0:?} has {1} green members instead of exactly one")]
    TripleGreens([usize; 3], usize),
    #[error("assignment contradicts the declared assumption on ray {ray}")]
    AssumptionNotHonoured { ray: usize },
    #[error("the assumed steps do not match the declared assumptions")]
    AssumptionMismatch,
    #[error("step {index}: {reason}")]
    BadStep { index: usize, reason: String },
    #[error("split on ray {ray}: {reason}")]
    BadSplit { ray: usize, reason: String },
    #[error("contradiction witness rejected: {0}")]
    BadWitness(String),
}

fn ortho(rays: &[Ray], i: usize, j: usize) -> bool {
    rays[i].vector.dot(&rays[j].vector).is_zero()
}

/// Validate a certificate against the graph it claims to decide and the
/// assumptions it claims to start from.
pub fn check_certificate(
    graph: &OrthGraph,
    assumptions: &[(usize, Colour)],
    cert: &Certificate,
) -> Result<(), CheckFailure> {
    let rays = graph.rays();
    match cert {
        Certificate::Colourable { assignment } => {
            check_colouring(rays, assumptions, assignment)
        }
        Certificate::Uncolourable { tree } => {
            let mut state = vec![None; rays.len()];
            let mut assumed = Vec::new();
            check_node(rays, &mut state, tree, None, &mut assumed)?;
            let mut declared: Vec<(usize, Colour)> = assumptions.to_vec();
            declared.sort_by_key(|&(r, c)| (r, c == Colour::Green));
            assumed.sort_by_key(|&(r, c)| (r, c == Colour::Green));
            if assumed != declared {
                return Err(CheckFailure::AssumptionMismatch);
            }
            Ok(())
        }
    }
}

/// A total assignment is valid when no orthogonal pair is doubly green
/// and every mutually orthogonal triple has exactly one green member;
/// both conditions are recomputed from dot products here.
fn check_colouring(
    rays: &[Ray],
    assumptions: &[(usize, Colour)],
    assignment: &[Colour],
) -> Result<(), CheckFailure> {
    let n = rays.len();
    if assignment.len() != n {
        return Err(CheckFailure::WrongLength { expected: n, got: assignment.len() });
    }
    for &(ray, colour) in assumptions {
        if ray >= n {
            return Err(CheckFailure::RayOutOfRange { ray });
        }
        if assignment[ray] != colour {
            return Err(CheckFailure::AssumptionNotHonoured { ray });
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if !ortho(rays, i, j) {
                continue;
            }
            if assignment[i] == Colour::Green && assignment[j] == Colour::Green {
                return Err(CheckFailure::GreenPair(i, j));
            }
            for k in (j + 1)..n {
                if ortho(rays, i, k) && ortho(rays, j, k) {
                    let greens = [i, j, k]
                        .into_iter()
                        .filter(|&r| assignment[r] == Colour::Green)
                        .count();
                    if greens != 1 {
                        return Err(CheckFailure::TripleGreens([i, j, k], greens));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_node(
    rays: &[Ray],
    state: &mut Vec<Option<Colour>>,
    tree: &BranchTree,
    expected_branch: Option<(usize, Colour)>,
    assumed: &mut Vec<(usize, Colour)>,
) -> Result<(), CheckFailure> {
    let steps = match tree {
        BranchTree::Contradiction { steps, .. } => steps,
        BranchTree::Split { steps, .. } => steps,
    };
    if expected_branch.is_some()
        && steps.first().map(|s| s.rule) != Some(Rule::Branch)
    {
        return Err(CheckFailure::BadStep {
            index: 0,
            reason: "a branch child must start with its branch step".into(),
        });
    }
    for (index, step) in steps.iter().enumerate() {
        replay_step(rays, state, index, step, expected_branch, assumed)?;
    }
    match tree {
        BranchTree::Contradiction { witness, .. } => check_witness(rays, state, witness),
        BranchTree::Split { ray, if_green, if_red, .. } => {
            let ray = *ray;
            if ray >= rays.len() {
                return Err(CheckFailure::RayOutOfRange { ray });
            }
            if state[ray].is_some() {
                return Err(CheckFailure::BadSplit {
                    ray,
                    reason: "the split ray is already coloured".into(),
                });
            }
            let mut green_state = state.clone();
            check_node(rays, &mut green_state, if_green, Some((ray, Colour::Green)), assumed)?;
            let mut red_state = state.clone();
            check_node(rays, &mut red_state, if_red, Some((ray, Colour::Red)), assumed)
        }
    }
}

fn replay_step(
    rays: &[Ray],
    state: &mut [Option<Colour>],
    index: usize,
    step: &DeductionStep,
    expected_branch: Option<(usize, Colour)>,
    assumed: &mut Vec<(usize, Colour)>,
) -> Result<(), CheckFailure> {
    let bad = |reason: String| CheckFailure::BadStep { index, reason };
    if step.ray >= rays.len() {
        return Err(CheckFailure::RayOutOfRange { ray: step.ray });
    }
    if state[step.ray].is_some() {
        return Err(bad(format!("ray {} is already coloured", step.ray)));
    }
    for &a in &step.antecedents {
        if a >= rays.len() {
            return Err(CheckFailure::RayOutOfRange { ray: a });
        }
    }
    match step.rule {
        Rule::Assumed => {
            if expected_branch.is_some() {
                return Err(bad("assumptions may appear only in the root node".into()));
            }
            if !step.antecedents.is_empty() {
                return Err(bad("an assumption has no antecedents".into()));
            }
            assumed.push((step.ray, step.colour));
        }
        Rule::Branch => {
            let Some((ray, colour)) = expected_branch else {
                return Err(bad("branch step outside a branch child".into()));
            };
            if index != 0 {
                return Err(bad("a branch step must open its node".into()));
            }
            if step.ray != ray || step.colour != colour {
                return Err(bad(format!(
                    "branch step colours ray {} {} but the split requires ray {ray} {colour}",
                    step.ray, step.colour
                )));
            }
            if !step.antecedents.is_empty() {
                return Err(bad("a branch step has no antecedents".into()));
            }
        }
        Rule::OrthoToGreen => {
            if step.colour != Colour::Red {
                return Err(bad("orthogonality to a green ray forces red".into()));
            }
            let [g] = step.antecedents[..] else {
                return Err(bad("expected exactly one green antecedent".into()));
            };
            if state[g] != Some(Colour::Green) {
                return Err(bad(format!("antecedent {g} is not green")));
            }
            if !ortho(rays, step.ray, g) {
                return Err(bad(format!("rays {} and {g} are not orthogonal", step.ray)));
            }
        }
        Rule::CompleteTriple => {
            if step.colour != Colour::Green {
                return Err(bad("completing a red pair forces green".into()));
            }
            let [a, b] = step.antecedents[..] else {
                return Err(bad("expected exactly two red antecedents".into()));
            };
            if a == b || a == step.ray || b == step.ray {
                return Err(bad("the triple members must be distinct".into()));
            }
            for r in [a, b] {
                if state[r] != Some(Colour::Red) {
                    return Err(bad(format!("antecedent {r} is not red")));
                }
            }
            if !(ortho(rays, a, b) && ortho(rays, step.ray, a) && ortho(rays, step.ray, b)) {
                return Err(bad(format!(
                    "{{{}, {a}, {b}}} is not a mutually orthogonal triple",
                    step.ray
                )));
            }
        }
    }
    state[step.ray] = Some(step.colour);
    Ok(())
}

fn check_witness(
    rays: &[Ray],
    state: &[Option<Colour>],
    witness: &ContradictionWitness,
) -> Result<(), CheckFailure> {
    match witness {
        ContradictionWitness::DoublyGreenEdge([i, j]) => {
            let (i, j) = (*i, *j);
            for r in [i, j] {
                if r >= rays.len() {
                    return Err(CheckFailure::RayOutOfRange { ray: r });
                }
            }
            if i == j {
                return Err(CheckFailure::BadWitness("the pair must be distinct".into()));
            }
            if !ortho(rays, i, j) {
                return Err(CheckFailure::BadWitness(format!(
                    "rays {i} and {j} are not orthogonal"
                )));
            }
            for r in [i, j] {
                if state[r] != Some(Colour::Green) {
                    return Err(CheckFailure::BadWitness(format!("ray {r} is not green")));
                }
            }
            Ok(())
        }
        ContradictionWitness::AllRedTriple([i, j, k]) => {
            let (i, j, k) = (*i, *j, *k);
            for r in [i, j, k] {
                if r >= rays.len() {
                    return Err(CheckFailure::RayOutOfRange { ray: r });
                }
            }
            if i == j || i == k || j == k {
                return Err(CheckFailure::BadWitness("the triple must be distinct".into()));
            }
            if !(ortho(rays, i, j) && ortho(rays, i, k) && ortho(rays, j, k)) {
                return Err(CheckFailure::BadWitness(format!(
                    "{{{i}, {j}, {k}}} is not a mutually orthogonal triple"
                )));
            }
            for r in [i, j, k] {
                if state[r] != Some(Colour::Red) {
                    return Err(CheckFailure::BadWitness(format!("ray {r} is not red")));
                }
            }
            Ok(())
        }
    }
}
