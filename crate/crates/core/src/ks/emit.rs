//! Render certificates as text, JSON, or DOT.
//!
//! JSON goes through [`CertificateDoc`] and round-trips losslessly; text
//! is a human-readable trace; DOT draws the orthogonality graph with the
//! colouring reached at the first contradiction (or the final
//! assignment), marking the witness edges dotted.

use super::certificate::{
    BranchTree, Certificate, CertificateDoc, Colour, ContradictionWitness, DeductionStep,
};
use super::graph::OrthGraph;
use super::KsError;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    Text,
    Json,
    Dot,
}

impl fmt::Display for EmitFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmitFormat::Text => "text",
            EmitFormat::Json => "json",
            EmitFormat::Dot => "dot",
        })
    }
}

impl FromStr for EmitFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<EmitFormat, String> {
        match s {
            "text" => Ok(EmitFormat::Text),
            "json" => Ok(EmitFormat::Json),
            "dot" => Ok(EmitFormat::Dot),
            other => Err(format!("unknown format {other:?}: expected text, json or dot")),
        }
    }
}

pub fn emit(graph: &OrthGraph, cert: &Certificate, format: EmitFormat) -> String {
    match format {
        EmitFormat::Json => {
            let mut s = CertificateDoc::from_certificate(graph, cert).to_json();
            s.push('\n');
            s
        }
        EmitFormat::Text => text_certificate(graph, cert),
        EmitFormat::Dot => match cert {
            Certificate::Colourable { assignment } => {
                let state: Vec<Option<Colour>> = assignment.iter().copied().map(Some).collect();
                dot(graph, &state, None)
            }
            Certificate::Uncolourable { tree } => {
                let (state, witness) = first_leaf_state(graph.len(), tree);
                dot(graph, &state, Some(witness))
            }
        },
    }
}

/// Render a propagation run that stopped with rays still uncoloured.
pub fn emit_inconclusive(
    graph: &OrthGraph,
    steps: &[DeductionStep],
    partial: &[Option<Colour>],
    format: EmitFormat,
) -> String {
    match format {
        EmitFormat::Json => {
            let mut s = CertificateDoc::inconclusive(graph, steps, partial).to_json();
            s.push('\n');
            s
        }
        EmitFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "verdict: inconclusive");
            let coloured = partial.iter().filter(|s| s.is_some()).count();
            let _ = writeln!(
                out,
                "propagation stopped with {coloured} of {} rays coloured",
                graph.len()
            );
            write_steps(&mut out, graph, steps, 0);
            out
        }
        EmitFormat::Dot => dot(graph, partial, None),
    }
}

/// Re-render a parsed document in any format.
pub fn emit_doc(doc: &CertificateDoc, format: EmitFormat) -> Result<String, KsError> {
    if format == EmitFormat::Json {
        let mut s = doc.to_json();
        s.push('\n');
        return Ok(s);
    }
    let graph = doc.graph()?;
    if doc.verdict == "inconclusive" {
        let (Some(steps), Some(partial)) = (&doc.steps, &doc.partial) else {
            return Err(KsError::Document(
                "an inconclusive document needs steps and partial fields".into(),
            ));
        };
        if partial.len() != graph.len() {
            return Err(KsError::Document(
                "partial colouring length does not match the rays".into(),
            ));
        }
        return Ok(emit_inconclusive(&graph, steps, partial, format));
    }
    let cert = doc.certificate()?;
    Ok(emit(&graph, &cert, format))
}

fn name(graph: &OrthGraph, i: usize) -> String {
    graph.ray(i).name()
}

fn text_certificate(graph: &OrthGraph, cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "verdict: {}", cert.verdict());
    let _ = writeln!(
        out,
        "rays: {}  orthogonal pairs: {}  triples: {}",
        graph.len(),
        graph.edges().len(),
        graph.triples().len()
    );
    match cert {
        Certificate::Colourable { assignment } => {
            for (i, colour) in assignment.iter().enumerate() {
                let _ = writeln!(out, "  {} -> {colour}", name(graph, i));
            }
        }
        Certificate::Uncolourable { tree } => {
            let _ = writeln!(
                out,
                "branches: {}  leaves: {}  steps: {}",
                tree.branch_count(),
                tree.leaf_count(),
                tree.step_count()
            );
            write_tree(&mut out, graph, tree, 0);
        }
    }
    out
}

fn write_steps(out: &mut String, graph: &OrthGraph, steps: &[DeductionStep], depth: usize) {
    let pad = "  ".repeat(depth + 1);
    for step in steps {
        let _ = write!(out, "{pad}{} {} ({}", name(graph, step.ray), step.colour, step.rule);
        for (k, &a) in step.antecedents.iter().enumerate() {
            let sep = if k == 0 { " " } else { ", " };
            let _ = write!(out, "{sep}{}", name(graph, a));
        }
        let _ = writeln!(out, ")");
    }
}

fn write_witness(out: &mut String, graph: &OrthGraph, w: &ContradictionWitness, depth: usize) {
    let pad = "  ".repeat(depth + 1);
    match w {
        ContradictionWitness::DoublyGreenEdge([i, j]) => {
            let _ = writeln!(
                out,
                "{pad}contradiction: {} and {} are orthogonal and both green",
                name(graph, *i),
                name(graph, *j)
            );
        }
        ContradictionWitness::AllRedTriple([i, j, k]) => {
            let _ = writeln!(
                out,
                "{pad}contradiction: triple {{{}, {}, {}}} is entirely red",
                name(graph, *i),
                name(graph, *j),
                name(graph, *k)
            );
        }
    }
}

fn write_tree(out: &mut String, graph: &OrthGraph, tree: &BranchTree, depth: usize) {
    match tree {
        BranchTree::Contradiction { steps, witness } => {
            write_steps(out, graph, steps, depth);
            write_witness(out, graph, witness, depth);
        }
        BranchTree::Split { steps, ray, if_green, if_red } => {
            write_steps(out, graph, steps, depth);
            let pad = "  ".repeat(depth + 1);
            let _ = writeln!(out, "{pad}split on {}", name(graph, *ray));
            let _ = writeln!(out, "{pad}case {} green:", name(graph, *ray));
            write_tree(out, graph, if_green, depth + 1);
            let _ = writeln!(out, "{pad}case {} red:", name(graph, *ray));
            write_tree(out, graph, if_red, depth + 1);
        }
    }
}

/// Colouring state after replaying the path to the leftmost leaf, plus
/// that leaf's witness.
fn first_leaf_state(
    size: usize,
    tree: &BranchTree,
) -> (Vec<Option<Colour>>, &ContradictionWitness) {
    let mut state = vec![None; size];
    let mut node = tree;
    loop {
        match node {
            BranchTree::Contradiction { steps, witness } => {
                for s in steps {
                    state[s.ray] = Some(s.colour);
                }
                return (state, witness);
            }
            BranchTree::Split { steps, if_green, .. } => {
                for s in steps {
                    state[s.ray] = Some(s.colour);
                }
                node = if_green;
            }
        }
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot(graph: &OrthGraph, state: &[Option<Colour>], witness: Option<&ContradictionWitness>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph rays {{");
    let _ = writeln!(out, "  node [shape=circle, style=filled];");
    for i in 0..graph.len() {
        let fill = match state[i] {
            Some(Colour::Green) => "palegreen",
            Some(Colour::Red) => "lightcoral",
            None => "white",
        };
        let _ = writeln!(
            out,
            "  n{i} [label=\"{}\", fillcolor={fill}];",
            dot_escape(&name(graph, i))
        );
    }
    let dotted: Vec<(usize, usize)> = match witness {
        Some(ContradictionWitness::DoublyGreenEdge([i, j])) => {
            vec![(*i.min(j), *i.max(j))]
        }
        Some(ContradictionWitness::AllRedTriple([i, j, k])) => {
            let mut tri = [*i, *j, *k];
            tri.sort_unstable();
            vec![(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])]
        }
        None => Vec::new(),
    };
    for &(i, j) in graph.edges() {
        if dotted.contains(&(i, j)) {
            let _ = writeln!(out, "  n{i} -- n{j} [style=dotted];");
        } else {
            let _ = writeln!(out, "  n{i} -- n{j};");
        }
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ks::graph::{peres_graph, wlog_assumptions, OrthGraph};
    use crate::ks::solver::{greedy, search, GreedyOutcome};
    use crate::ks::vec3::Vec3;

    fn basis() -> OrthGraph {
        OrthGraph::build(&[
            Vec3::parse_compact("100").unwrap(),
            Vec3::parse_compact("010").unwrap(),
            Vec3::parse_compact("001").unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn json_for_a_colourable_basis_lists_three_assignments() {
        let g = basis();
        let cert = search(&g, &[]).unwrap();
        let json = emit(&g, &cert, EmitFormat::Json);
        let doc = CertificateDoc::from_json(&json).unwrap();
        assert_eq!(doc.verdict, "colourable");
        assert_eq!(doc.assignment.as_ref().map(Vec::len), Some(3));
        assert!(doc.tree.is_none());
    }

    #[test]
    fn greedy_preset_contradiction_renders_one_dotted_edge() {
        let g = peres_graph();
        let assumptions = g.resolve_assumptions(&wlog_assumptions()).unwrap();
        let GreedyOutcome::Refuted { steps, witness } = greedy(&g, &assumptions).unwrap() else {
            panic!("the preset refutes by propagation alone");
        };
        let is_pair = matches!(witness, ContradictionWitness::DoublyGreenEdge(_));
        let cert = Certificate::Uncolourable {
            tree: BranchTree::Contradiction { steps, witness },
        };
        let dot = emit(&g, &cert, EmitFormat::Dot);
        let dotted = dot.matches("[style=dotted]").count();
        if is_pair {
            assert_eq!(dotted, 1, "one dotted edge for a doubly-green pair");
        } else {
            assert_eq!(dotted, 3, "an all-red triple dots its three edges");
        }
        assert!(dot.starts_with("graph rays {"));
        assert!(dot.ends_with("}\n"));
        let edge_lines = dot.matches(" -- ").count();
        assert_eq!(edge_lines, g.edges().len());
    }

    #[test]
    fn json_round_trips_byte_for_byte() {
        let g = peres_graph();
        let cert = search(&g, &[]).unwrap();
        let first = emit(&g, &cert, EmitFormat::Json);
        let doc = CertificateDoc::from_json(&first).unwrap();
        let second = emit_doc(&doc, EmitFormat::Json).unwrap();
        assert_eq!(first, second);

        // and re-emitting from the parsed document matches the original
        // in the other formats too
        for format in [EmitFormat::Text, EmitFormat::Dot] {
            assert_eq!(emit_doc(&doc, format).unwrap(), emit(&g, &cert, format));
        }
    }

    #[test]
    fn text_shows_the_trace() {
        let g = basis();
        let cert = search(&g, &[(0, Colour::Green), (1, Colour::Green)]).unwrap();
        let text = emit(&g, &cert, EmitFormat::Text);
        assert!(text.starts_with("verdict: uncolourable"), "{text}");
        assert!(text.contains("(assumed)"), "{text}");
        assert!(text.contains("contradiction:"), "{text}");

        let colourable = search(&g, &[]).unwrap();
        let text = emit(&g, &colourable, EmitFormat::Text);
        assert!(text.contains("verdict: colourable"), "{text}");
        assert!(text.contains("green"), "{text}");
    }

    #[test]
    fn inconclusive_runs_render_in_all_formats() {
        let g = peres_graph();
        let GreedyOutcome::Inconclusive { partial, steps } = greedy(&g, &[]).unwrap() else {
            panic!("no assumptions force nothing");
        };
        let json = emit_inconclusive(&g, &steps, &partial, EmitFormat::Json);
        let doc = CertificateDoc::from_json(&json).unwrap();
        assert_eq!(doc.verdict, "inconclusive");
        assert_eq!(emit_doc(&doc, EmitFormat::Json).unwrap(), json);
        let text = emit_inconclusive(&g, &steps, &partial, EmitFormat::Text);
        assert!(text.contains("0 of 33"), "{text}");
        let dot = emit_inconclusive(&g, &steps, &partial, EmitFormat::Dot);
        assert_eq!(dot.matches("fillcolor=white").count(), 33);
    }

    #[test]
    fn format_names_parse() {
        assert_eq!("text".parse::<EmitFormat>().unwrap(), EmitFormat::Text);
        assert_eq!("json".parse::<EmitFormat>().unwrap(), EmitFormat::Json);
        assert_eq!("dot".parse::<EmitFormat>().unwrap(), EmitFormat::Dot);
        assert!("svg".parse::<EmitFormat>().is_err());
        assert_eq!(EmitFormat::Dot.to_string(), "dot");
    }
}
