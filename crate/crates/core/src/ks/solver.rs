//! Forced-colour propagation and the branching search.
//!
//! Two rules are propagated to a fixed point: a ray orthogonal to a green
//! ray is red, and the third member of an orthogonal triple whose other
//! two members are red is green. Each inferred colour is logged with its
//! rule and antecedents, and both contradiction shapes (a doubly-green
//! edge, an all-red triple) are checked after every single assignment so
//! traces stop at the first conflict.

use super::certificate::{
    BranchTree, Certificate, Colour, ContradictionWitness, DeductionStep, Rule,
};
use super::graph::OrthGraph;
use super::KsError;
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    slots: Vec<Option<Colour>>,
}

impl PartialColoring {
    pub fn new(size: usize) -> PartialColoring {
        PartialColoring { slots: vec![None; size] }
    }

    pub fn from_assignments(
        size: usize,
        assignments: &[(usize, Colour)],
    ) -> Result<PartialColoring, KsError> {
        let mut c = PartialColoring::new(size);
        for &(index, colour) in assignments {
            if index >= size {
                return Err(KsError::IndexOutOfRange { index, size });
            }
            if c.slots[index].is_some() {
                return Err(KsError::RepeatedAssumption { ray: index.to_string() });
            }
            c.slots[index] = Some(colour);
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<Colour> {
        self.slots[index]
    }

    pub fn slots(&self) -> &[Option<Colour>] {
        &self.slots
    }

    pub fn assigned(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(Option::is_some)
    }

    pub fn to_total(&self) -> Option<Vec<Colour>> {
        self.slots.iter().copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropagationOutcome {
    /// No more colours are forced. The trace lists every inference made.
    Fixpoint {
        coloring: PartialColoring,
        steps: Vec<DeductionStep>,
    },
    /// A conflict was hit; the trace ends at the assignment that
    /// completed the witness.
    Contradiction {
        steps: Vec<DeductionStep>,
        witness: ContradictionWitness,
    },
}

struct Engine<'g> {
    graph: &'g OrthGraph,
    slots: Vec<Option<Colour>>,
    steps: Vec<DeductionStep>,
    queue: VecDeque<usize>,
}

impl<'g> Engine<'g> {
    fn new(graph: &'g OrthGraph) -> Engine<'g> {
        Engine {
            graph,
            slots: vec![None; graph.len()],
            steps: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    /// Continue from an existing colouring; every coloured ray re-enters
    /// the worklist.
    fn resume(graph: &'g OrthGraph, slots: Vec<Option<Colour>>) -> Engine<'g> {
        let queue = (0..slots.len()).filter(|&i| slots[i].is_some()).collect();
        Engine { graph, slots, steps: Vec::new(), queue }
    }

    /// Record one assignment and look for a conflict it completes.
    fn assign(&mut self, step: DeductionStep) -> Result<(), ContradictionWitness> {
        let (ray, colour) = (step.ray, step.colour);
        debug_assert!(self.slots[ray].is_none(), "ray {ray} coloured twice");
        self.slots[ray] = Some(colour);
        self.steps.push(step);
        self.queue.push_back(ray);
        self.conflict_at(ray, colour)
    }

    fn conflict_at(&self, ray: usize, colour: Colour) -> Result<(), ContradictionWitness> {
        match colour {
            Colour::Green => {
                for &j in self.graph.adjacent(ray) {
                    if self.slots[j] == Some(Colour::Green) {
                        let pair = if ray < j { [ray, j] } else { [j, ray] };
                        return Err(ContradictionWitness::DoublyGreenEdge(pair));
                    }
                }
            }
            Colour::Red => {
                for &t in self.graph.triples_containing(ray) {
                    let tri = self.graph.triples()[t];
                    if tri.iter().all(|&r| self.slots[r] == Some(Colour::Red)) {
                        return Err(ContradictionWitness::AllRedTriple(tri));
                    }
                }
            }
        }
        Ok(())
    }

    fn propagate(&mut self) -> Result<(), ContradictionWitness> {
        let graph = self.graph;
        while let Some(i) = self.queue.pop_front() {
            match self.slots[i].expect("only coloured rays are queued") {
                Colour::Green => {
                    for &j in graph.adjacent(i) {
                        if self.slots[j].is_none() {
                            self.assign(DeductionStep {
                                ray: j,
                                colour: Colour::Red,
                                rule: Rule::OrthoToGreen,
                                antecedents: vec![i],
                            })?;
                        }
                    }
                }
                Colour::Red => {
                    for &t in graph.triples_containing(i) {
                        let tri = graph.triples()[t];
                        let mut reds = Vec::with_capacity(2);
                        let mut open = None;
                        for &r in &tri {
                            match self.slots[r] {
                                Some(Colour::Red) => reds.push(r),
                                Some(Colour::Green) => {}
                                None => open = Some(r),
                            }
                        }
                        if reds.len() == 2 {
                            if let Some(r) = open {
                                self.assign(DeductionStep {
                                    ray: r,
                                    colour: Colour::Green,
                                    rule: Rule::CompleteTriple,
                                    antecedents: reds,
                                })?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Run the two rules to a fixed point from an arbitrary starting
/// colouring. Conflicts already present in the start state are reported
/// (with an empty trace) before any inference runs.
pub fn propagate(graph: &OrthGraph, start: &PartialColoring) -> PropagationOutcome {
    assert_eq!(start.len(), graph.len(), "colouring size must match the graph");
    for &(i, j) in graph.edges() {
        if start.get(i) == Some(Colour::Green) && start.get(j) == Some(Colour::Green) {
            return PropagationOutcome::Contradiction {
                steps: Vec::new(),
                witness: ContradictionWitness::DoublyGreenEdge([i, j]),
            };
        }
    }
    for &tri in graph.triples() {
        if tri.iter().all(|&r| start.get(r) == Some(Colour::Red)) {
            return PropagationOutcome::Contradiction {
                steps: Vec::new(),
                witness: ContradictionWitness::AllRedTriple(tri),
            };
        }
    }
    let mut engine = Engine::resume(graph, start.slots.clone());
    match engine.propagate() {
        Ok(()) => PropagationOutcome::Fixpoint {
            coloring: PartialColoring { slots: engine.slots },
            steps: engine.steps,
        },
        Err(witness) => PropagationOutcome::Contradiction { steps: engine.steps, witness },
    }
}

/// Propagation only, no branching: the result of seeding `assumptions`
/// and making every forced deduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyOutcome {
    /// Propagation alone coloured every ray.
    Colourable {
        assignment: Vec<Colour>,
        steps: Vec<DeductionStep>,
    },
    /// Propagation alone found a conflict: the assumptions are
    /// jointly impossible.
    Refuted {
        steps: Vec<DeductionStep>,
        witness: ContradictionWitness,
    },
    /// Some rays are still uncoloured and nothing more is forced.
    Inconclusive {
        partial: Vec<Option<Colour>>,
        steps: Vec<DeductionStep>,
    },
}

pub fn greedy(
    graph: &OrthGraph,
    assumptions: &[(usize, Colour)],
) -> Result<GreedyOutcome, KsError> {
    let (engine, conflict) = seed(graph, assumptions)?;
    let steps = engine.steps;
    if let Some(witness) = conflict {
        return Ok(GreedyOutcome::Refuted { steps, witness });
    }
    let coloring = PartialColoring { slots: engine.slots };
    Ok(match coloring.to_total() {
        Some(assignment) => GreedyOutcome::Colourable { assignment, steps },
        None => GreedyOutcome::Inconclusive { partial: coloring.slots, steps },
    })
}

/// Assume, propagate, and return the engine plus any conflict found.
fn seed<'g>(
    graph: &'g OrthGraph,
    assumptions: &[(usize, Colour)],
) -> Result<(Engine<'g>, Option<ContradictionWitness>), KsError> {
    let size = graph.len();
    let mut engine = Engine::new(graph);
    for &(index, colour) in assumptions {
        if index >= size {
            return Err(KsError::IndexOutOfRange { index, size });
        }
        if engine.slots[index].is_some() {
            return Err(KsError::RepeatedAssumption { ray: graph.ray(index).name() });
        }
        let step = DeductionStep {
            ray: index,
            colour,
            rule: Rule::Assumed,
            antecedents: Vec::new(),
        };
        if let Err(witness) = engine.assign(step) {
            return Ok((engine, Some(witness)));
        }
    }
    let conflict = engine.propagate().err();
    Ok((engine, conflict))
}

/// Decide colourability by depth-first search: propagate, and if rays
/// remain uncoloured, split on the lowest-index one, trying green before
/// red. Returns either a full assignment or a branch tree whose every
/// leaf carries a contradiction witness.
pub fn search(graph: &OrthGraph, assumptions: &[(usize, Colour)]) -> Result<Certificate, KsError> {
    let (engine, conflict) = seed(graph, assumptions)?;
    let steps = engine.steps;
    if let Some(witness) = conflict {
        return Ok(Certificate::Uncolourable {
            tree: BranchTree::Contradiction { steps, witness },
        });
    }
    let coloring = PartialColoring { slots: engine.slots };
    Ok(match explore(graph, coloring, steps) {
        Ok(assignment) => Certificate::Colourable { assignment },
        Err(tree) => Certificate::Uncolourable { tree },
    })
}

/// `coloring` is consistent and at a fixed point; `steps` is the trace
/// that produced it within this node. Either completes a colouring or
/// refutes the node, with each child's trace starting at its branch step.
fn explore(
    graph: &OrthGraph,
    coloring: PartialColoring,
    steps: Vec<DeductionStep>,
) -> Result<Vec<Colour>, BranchTree> {
    if let Some(assignment) = coloring.to_total() {
        return Ok(assignment);
    }
    let ray = coloring
        .slots
        .iter()
        .position(Option::is_none)
        .expect("not total");

    let mut refutations = Vec::with_capacity(2);
    for colour in [Colour::Green, Colour::Red] {
        let mut engine = Engine::resume(graph, coloring.slots.clone());
        engine.queue.clear(); // parent is already a fixed point
        let step = DeductionStep { ray, colour, rule: Rule::Branch, antecedents: Vec::new() };
        let conflict = engine.assign(step).err().or_else(|| engine.propagate().err());
        let child_steps = engine.steps;
        match conflict {
            Some(witness) => refutations.push(BranchTree::Contradiction {
                steps: child_steps,
                witness,
            }),
            None => {
                let child = PartialColoring { slots: engine.slots };
                match explore(graph, child, child_steps) {
                    Ok(assignment) => return Ok(assignment),
                    Err(tree) => refutations.push(tree),
                }
            }
        }
    }
    let if_red = Box::new(refutations.pop().expect("two branches"));
    let if_green = Box::new(refutations.pop().expect("two branches"));
    Err(BranchTree::Split { steps, ray, if_green, if_red })
}
