//! Certificate data model and its JSON document form.
//!
//! A certificate is self-contained evidence: for a colourable graph, the
//! total assignment; for an uncolourable one, a tree of deduction steps
//! whose leaves each exhibit a concrete constraint violation. The JSON
//! form also embeds the rays, so a document can be re-checked (or
//! re-rendered) with no access to the producing process.

use super::graph::OrthGraph;
use super::vec3::Vec3;
use super::KsError;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Green,
    Red,
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Green => "green",
            Colour::Red => "red",
        })
    }
}

/// Why a step coloured its ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Part of the initial assumptions; no antecedents.
    Assumed,
    /// A case split chose this colour; no antecedents.
    Branch,
    /// Orthogonal to a green ray, hence red; one antecedent.
    OrthoToGreen,
    /// The other two members of an orthogonal triple are red, hence
    /// green; two antecedents.
    CompleteTriple,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Assumed => "assumed",
            Rule::Branch => "branch",
            Rule::OrthoToGreen => "ortho-to-green",
            Rule::CompleteTriple => "complete-triple",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeductionStep {
    pub ray: usize,
    pub colour: Colour,
    pub rule: Rule,
    pub antecedents: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "rays", rename_all = "kebab-case")]
pub enum ContradictionWitness {
    /// Two orthogonal rays both green.
    DoublyGreenEdge([usize; 2]),
    /// A mutually orthogonal triple entirely red.
    AllRedTriple([usize; 3]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BranchTree {
    Contradiction {
        steps: Vec<DeductionStep>,
        witness: ContradictionWitness,
    },
    Split {
        steps: Vec<DeductionStep>,
        ray: usize,
        if_green: Box<BranchTree>,
        if_red: Box<BranchTree>,
    },
}

impl BranchTree {
    pub fn branch_count(&self) -> usize {
        match self {
            BranchTree::Contradiction { .. } => 0,
            BranchTree::Split { if_green, if_red, .. } => {
                1 + if_green.branch_count() + if_red.branch_count()
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BranchTree::Contradiction { .. } => 1,
            BranchTree::Split { if_green, if_red, .. } => {
                if_green.leaf_count() + if_red.leaf_count()
            }
        }
    }

    pub fn step_count(&self) -> usize {
        match self {
            BranchTree::Contradiction { steps, .. } => steps.len(),
            BranchTree::Split { steps, if_green, if_red, .. } => {
                steps.len() + if_green.step_count() + if_red.step_count()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Colourable { assignment: Vec<Colour> },
    Uncolourable { tree: BranchTree },
}

impl Certificate {
    pub fn verdict(&self) -> &'static str {
        match self {
            Certificate::Colourable { .. } => "colourable",
            Certificate::Uncolourable { .. } => "uncolourable",
        }
    }

    pub fn branch_count(&self) -> usize {
        match self {
            Certificate::Colourable { .. } => 0,
            Certificate::Uncolourable { tree } => tree.branch_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub vector: [String; 3],
}

/// Self-contained JSON document: verdict, rays, and whichever of
/// assignment / tree / propagation-only fields apply. Serialisation is
/// deterministic (fixed field order, no maps), and `to_json` after
/// `from_json` reproduces the input bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub verdict: String,
    pub rays: Vec<RayDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<Colour>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<BranchTree>,
    /// Steps of a propagation-only run that stopped short of a verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<DeductionStep>>,
    /// Partial colouring of an inconclusive run, one entry per ray.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partial: Option<Vec<Option<Colour>>>,
}

fn ray_docs(graph: &OrthGraph) -> Vec<RayDoc> {
    graph
        .rays()
        .iter()
        .map(|r| RayDoc {
            label: r.label.clone(),
            vector: [
                r.vector.0[0].to_string(),
                r.vector.0[1].to_string(),
                r.vector.0[2].to_string(),
            ],
        })
        .collect()
}

impl CertificateDoc {
    pub fn from_certificate(graph: &OrthGraph, cert: &Certificate) -> CertificateDoc {
        let (assignment, tree) = match cert {
            Certificate::Colourable { assignment } => (Some(assignment.clone()), None),
            Certificate::Uncolourable { tree } => (None, Some(tree.clone())),
        };
        CertificateDoc {
            verdict: cert.verdict().to_string(),
            rays: ray_docs(graph),
            assignment,
            tree,
            steps: None,
            partial: None,
        }
    }

    /// Document for a propagation-only run that neither completed a
    /// colouring nor found a contradiction.
    pub fn inconclusive(
        graph: &OrthGraph,
        steps: &[DeductionStep],
        partial: &[Option<Colour>],
    ) -> CertificateDoc {
        CertificateDoc {
            verdict: "inconclusive".to_string(),
            rays: ray_docs(graph),
            assignment: None,
            tree: None,
            steps: Some(steps.to_vec()),
            partial: Some(partial.to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises")
    }

    pub fn from_json(text: &str) -> Result<CertificateDoc, KsError> {
        serde_json::from_str(text).map_err(|e| KsError::Document(e.to_string()))
    }

    /// Rebuild the in-memory certificate, insisting the verdict string and
    /// payload fields agree.
    pub fn certificate(&self) -> Result<Certificate, KsError> {
        match (self.verdict.as_str(), &self.assignment, &self.tree) {
            ("colourable", Some(a), None) => Ok(Certificate::Colourable { assignment: a.clone() }),
            ("uncolourable", None, Some(t)) => Ok(Certificate::Uncolourable { tree: t.clone() }),
            (v, _, _) => Err(KsError::Document(format!(
                "verdict {v:?} does not match the payload fields"
            ))),
        }
    }

    /// Rebuild the orthogonality graph from the embedded rays.
    pub fn graph(&self) -> Result<OrthGraph, KsError> {
        let mut items = Vec::with_capacity(self.rays.len());
        for (i, r) in self.rays.iter().enumerate() {
            let mut comps = Vec::with_capacity(3);
            for c in &r.vector {
                comps.push(c.parse().map_err(|e| {
                    KsError::Document(format!("ray {i}: bad component {c:?}: {e}"))
                })?);
            }
            let arr = <[crate::exact_arith::QuadInt; 3]>::try_from(comps).expect("three");
            items.push((Vec3(arr), r.label.clone()));
        }
        OrthGraph::build_labeled(items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_tree() -> BranchTree {
        BranchTree::Split {
            steps: vec![DeductionStep {
                ray: 0,
                colour: Colour::Green,
                rule: Rule::Assumed,
                antecedents: vec![],
            }],
            ray: 1,
            if_green: Box::new(BranchTree::Contradiction {
                steps: vec![DeductionStep {
                    ray: 1,
                    colour: Colour::Green,
                    rule: Rule::Branch,
                    antecedents: vec![],
                }],
                witness: ContradictionWitness::DoublyGreenEdge([0, 1]),
            }),
            if_red: Box::new(BranchTree::Contradiction {
                steps: vec![
                    DeductionStep {
                        ray: 1,
                        colour: Colour::Red,
                        rule: Rule::Branch,
                        antecedents: vec![],
                    },
                    DeductionStep {
                        ray: 2,
                        colour: Colour::Red,
                        rule: Rule::OrthoToGreen,
                        antecedents: vec![0],
                    },
                ],
                witness: ContradictionWitness::AllRedTriple([1, 2, 3]),
            }),
        }
    }

    #[test]
    fn counts() {
        let t = sample_tree();
        assert_eq!(t.branch_count(), 1);
        assert_eq!(t.leaf_count(), 2);
        assert_eq!(t.step_count(), 4);
    }

    #[test]
    fn tree_json_round_trips_through_serde() {
        let t = sample_tree();
        let json = serde_json::to_string(&t).unwrap();
        let back: BranchTree = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        // spot-check the wire shape of rules and witnesses
        assert!(json.contains("\"ortho-to-green\""));
        assert!(json.contains("\"doubly-green-edge\""));
        assert!(json.contains("\"all-red-triple\""));
    }
}
