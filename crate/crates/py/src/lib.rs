//! Python bindings for the midproof toolkit.
//!
//! Everything crosses the boundary as plain strings and tuples: rationals
//! like `"2/3"`, ray components in the `a+b*s2` quadratic-integer syntax
//! (compact digits work too, e.g. `"1 0 0"`), polynomials in the same
//! notation the CLI accepts, and certificates as JSON documents. Invalid
//! input raises `ValueError` carrying the original parser message.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use midproof::chebyshev;
use midproof::exact_arith::parse_rational;
use midproof::ks::{
    self, check_certificate, emit_doc, BranchTree, Certificate as Cert, CertificateDoc, Colour,
    EmitFormat, GreedyOutcome, OrthGraph,
};
use midproof::multipoly::{self, parse_poly, MonomialOrder, Poly, VarTable};
use midproof::unitfrac;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// All non-decreasing denominator tuples of `terms` unit fractions
/// summing exactly to `target`, denominators at least `min_denom`.
#[pyfunction]
#[pyo3(name = "unitfrac", signature = (terms, target, min_denom = 1))]
fn unitfrac_enumerate(terms: u32, target: &str, min_denom: u64) -> PyResult<Vec<Vec<u64>>> {
    let target = parse_rational(target).map_err(value_err)?;
    unitfrac::enumerate(terms, &target, min_denom).map_err(value_err)
}

/// The same set by exhaustive scan over denominators up to `cap`;
/// exists so the bounds-driven enumerator has something to disagree with.
#[pyfunction]
#[pyo3(signature = (terms, target, min_denom, cap))]
fn unitfrac_brute_force(terms: u32, target: &str, min_denom: u64, cap: u64) -> PyResult<Vec<Vec<u64>>> {
    let target = parse_rational(target).map_err(value_err)?;
    unitfrac::brute_force(terms, &target, min_denom, cap).map_err(value_err)
}

fn parse_assumptions(
    graph: &OrthGraph,
    assumptions: Option<Vec<(String, String)>>,
) -> PyResult<Vec<(usize, Colour)>> {
    let Some(list) = assumptions else {
        return Ok(Vec::new());
    };
    let text: String = list.iter().map(|(v, c)| format!("{v} {c}\n")).collect();
    let raw = ks::parse_assumption_file(&text).map_err(value_err)?;
    graph.resolve_assumptions(&raw).map_err(value_err)
}

/// An orthogonality graph over rays in R^3 with coordinates in Z[sqrt(2)].
#[pyclass]
struct RayGraph {
    graph: OrthGraph,
}

#[pymethods]
impl RayGraph {
    /// Build from one string per ray: three whitespace-separated
    /// components, each an integer, `s2`-term like `-1+2*s2`, or a
    /// compact digit string. Parallel vectors are rejected.
    #[new]
    fn new(vectors: Vec<String>) -> PyResult<Self> {
        let text: String = vectors.iter().map(|v| format!("{v}\n")).collect();
        let items = ks::parse_vector_file(&text).map_err(value_err)?;
        let graph = OrthGraph::build_labeled(items).map_err(value_err)?;
        Ok(RayGraph { graph })
    }

    /// The bundled 33-ray dataset.
    #[staticmethod]
    fn peres33() -> RayGraph {
        RayGraph { graph: ks::peres_graph() }
    }

    fn __len__(&self) -> usize {
        self.graph.len()
    }

    fn edge_count(&self) -> usize {
        self.graph.edges().len()
    }

    fn triple_count(&self) -> usize {
        self.graph.triples().len()
    }

    /// Ray names in index order (labels where given, coordinates otherwise).
    fn rays(&self) -> Vec<String> {
        self.graph.rays().iter().map(|r| r.name()).collect()
    }

    /// Decide colourability by propagation and branching. Assumptions are
    /// `(vector, colour)` pairs, e.g. `("0 0 1", "green")`; pass the
    /// result to `Certificate.check` with the same assumptions to audit it.
    #[pyo3(signature = (assumptions = None))]
    fn search(&self, assumptions: Option<Vec<(String, String)>>) -> PyResult<Certificate> {
        let resolved = parse_assumptions(&self.graph, assumptions)?;
        let cert = ks::search(&self.graph, &resolved).map_err(value_err)?;
        Ok(Certificate { doc: CertificateDoc::from_certificate(&self.graph, &cert) })
    }

    /// Propagation only, never branching: verdict `colourable`,
    /// `uncolourable` or `inconclusive`.
    #[pyo3(signature = (assumptions = None))]
    fn greedy(&self, assumptions: Option<Vec<(String, String)>>) -> PyResult<Certificate> {
        let resolved = parse_assumptions(&self.graph, assumptions)?;
        let doc = match ks::greedy(&self.graph, &resolved).map_err(value_err)? {
            GreedyOutcome::Colourable { assignment, .. } => {
                CertificateDoc::from_certificate(&self.graph, &Cert::Colourable { assignment })
            }
            GreedyOutcome::Refuted { steps, witness } => CertificateDoc::from_certificate(
                &self.graph,
                &Cert::Uncolourable { tree: BranchTree::Contradiction { steps, witness } },
            ),
            GreedyOutcome::Inconclusive { partial, steps } => {
                CertificateDoc::inconclusive(&self.graph, &steps, &partial)
            }
        };
        Ok(Certificate { doc })
    }

    /// The nine-assumption symmetry preset for the bundled dataset, in the
    /// same `(vector, colour)` shape `search` and `greedy` accept.
    #[staticmethod]
    fn wlog_assumptions() -> Vec<(String, String)> {
        ks::wlog_assumptions()
            .into_iter()
            .map(|(v, c)| {
                let [x, y, z] = &v.0;
                (format!("{x} {y} {z}"), c.to_string())
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "RayGraph({} rays, {} edges, {} triples)",
            self.graph.len(),
            self.graph.edges().len(),
            self.graph.triples().len()
        )
    }
}

/// A self-contained colourability result: the rays it talks about plus
/// either a full assignment, a refutation tree, or a propagation trace.
#[pyclass]
struct Certificate {
    doc: CertificateDoc,
}

#[pymethods]
impl Certificate {
    #[getter]
    fn verdict(&self) -> String {
        self.doc.verdict.clone()
    }

    /// Number of case splits in the refutation (0 for an assignment).
    #[getter]
    fn branch_count(&self) -> PyResult<usize> {
        Ok(self.doc.certificate().map_err(value_err)?.branch_count())
    }

    /// Colour per ray, in graph order, when the verdict is `colourable`.
    fn assignment(&self) -> Option<Vec<String>> {
        self.doc
            .assignment
            .as_ref()
            .map(|a| a.iter().map(Colour::to_string).collect())
    }

    /// Replay the certificate against its own rays with an independent
    /// checker; `assumptions` must repeat what the search was given.
    /// Returns True, or raises ValueError naming the broken step.
    #[pyo3(signature = (assumptions = None))]
    fn check(&self, assumptions: Option<Vec<(String, String)>>) -> PyResult<bool> {
        let graph = self.doc.graph().map_err(value_err)?;
        let resolved = parse_assumptions(&graph, assumptions)?;
        let cert = self.doc.certificate().map_err(value_err)?;
        check_certificate(&graph, &resolved, &cert).map_err(value_err)?;
        Ok(true)
    }

    fn to_json(&self) -> String {
        self.doc.to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Certificate> {
        Ok(Certificate { doc: CertificateDoc::from_json(text).map_err(value_err)? })
    }

    /// Render as `text`, `json` or `dot` — the same bytes the CLI emits.
    #[pyo3(signature = (format = "text"))]
    fn render(&self, format: &str) -> PyResult<String> {
        let format: EmitFormat = format.parse().map_err(value_err)?;
        emit_doc(&self.doc, format).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!("Certificate(verdict='{}', rays={})", self.doc.verdict, self.doc.rays.len())
    }
}

fn parsed_ideal(
    var_names: &[String],
    generators: &[String],
) -> PyResult<(std::sync::Arc<VarTable>, Vec<Poly>)> {
    let vars = VarTable::new(var_names.iter().map(String::as_str)).map_err(value_err)?;
    let gens = generators
        .iter()
        .map(|g| parse_poly(g, &vars))
        .collect::<Result<Vec<_>, _>>()
        .map_err(value_err)?;
    Ok((vars, gens))
}

/// The reduced Groebner basis of the ideal the generators span,
/// rendered with terms in decreasing `order`.
#[pyfunction]
#[pyo3(name = "groebner_basis", signature = (var_names, generators, order = "grevlex"))]
fn py_groebner_basis(
    var_names: Vec<String>,
    generators: Vec<String>,
    order: &str,
) -> PyResult<Vec<String>> {
    let order: MonomialOrder = order.parse().map_err(value_err)?;
    let (_, gens) = parsed_ideal(&var_names, &generators)?;
    let gb = multipoly::groebner_basis(&gens, order).map_err(value_err)?;
    Ok(gb.basis.iter().map(|p| p.to_string_with(order)).collect())
}

/// Decide membership of `goal` in the generated ideal. Returns
/// `(member, cofactors)`; the cofactors line up with the generators and
/// expand to the goal, or are None on a negative verdict.
#[pyfunction]
#[pyo3(name = "ideal_member", signature = (var_names, generators, goal, order = "grevlex"))]
fn py_ideal_member(
    var_names: Vec<String>,
    generators: Vec<String>,
    goal: &str,
    order: &str,
) -> PyResult<(bool, Option<Vec<String>>)> {
    let order: MonomialOrder = order.parse().map_err(value_err)?;
    let (vars, gens) = parsed_ideal(&var_names, &generators)?;
    let goal = parse_poly(goal, &vars).map_err(value_err)?;
    let (member, witness) = multipoly::ideal_member(&goal, &gens, order, true).map_err(value_err)?;
    Ok((
        member,
        witness.map(|w| w.cofactors.iter().map(|c| c.to_string_with(order)).collect()),
    ))
}

/// The Chebyshev polynomial T_n as a string in `x`.
#[pyfunction]
fn cheb(n: usize) -> String {
    chebyshev::cheb(n).to_string()
}

/// Expand both sides of 2*T_m*T_(m+k) = T_(2m+k) + T_k at concrete indices.
#[pyfunction]
fn verify_mult(m: usize, k: usize) -> bool {
    chebyshev::verify_mult(m, k)
}

/// Prove the product formula abstractly by ideal membership over the
/// recurrence relations. Returns `(member, cofactors)` like `ideal_member`.
#[pyfunction]
fn prove_mult_formula() -> PyResult<(bool, Option<Vec<String>>)> {
    let (member, witness) = chebyshev::prove_mult_formula().map_err(value_err)?;
    Ok((
        member,
        witness.map(|w| w.cofactors.iter().map(Poly::to_string).collect()),
    ))
}

#[pymodule]
fn midproof_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<RayGraph>()?;
    m.add_class::<Certificate>()?;
    m.add_function(wrap_pyfunction!(unitfrac_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(unitfrac_brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(py_groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(py_ideal_member, m)?)?;
    m.add_function(wrap_pyfunction!(cheb, m)?)?;
    m.add_function(wrap_pyfunction!(verify_mult, m)?)?;
    m.add_function(wrap_pyfunction!(prove_mult_formula, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_module_works_under_an_embedded_interpreter() {
        Python::attach(|py| {
            let m = pyo3::wrap_pymodule!(midproof_py)(py);
            let m = m.bind(py);

            let tuples: Vec<Vec<u64>> = m
                .getattr("unitfrac")
                .unwrap()
                .call1((3, "1", 2))
                .unwrap()
                .extract()
                .unwrap();
            assert_eq!(tuples, vec![vec![2, 3, 6], vec![2, 4, 4], vec![3, 3, 3]]);

            let graph = m.getattr("RayGraph").unwrap().call_method0("peres33").unwrap();
            assert_eq!(graph.len().unwrap(), 33);
            let cert = graph.call_method0("search").unwrap();
            let verdict: String = cert.getattr("verdict").unwrap().extract().unwrap();
            assert_eq!(verdict, "uncolourable");
            let ok: bool = cert.call_method0("check").unwrap().extract().unwrap();
            assert!(ok);

            let err = m
                .getattr("unitfrac")
                .unwrap()
                .call1((3, "not a number", 1))
                .unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
        });
    }

    // the rest of the surface is plain Rust and needs no interpreter
    #[test]
    fn bindings_return_rendered_strings() {
        assert_eq!(cheb(4), "8*x^4 - 8*x^2 + 1");
        assert!(verify_mult(3, 5));

        let (member, cofactors) = prove_mult_formula().unwrap();
        assert!(member);
        assert_eq!(cofactors.unwrap().len(), 5);

        let basis = py_groebner_basis(
            vec!["x".into(), "y".into()],
            vec!["x^2 + y^2 - 1".into(), "x - y".into()],
            "lex",
        )
        .unwrap();
        assert!(!basis.is_empty());

        let (member, witness) = py_ideal_member(
            vec!["x".into(), "y".into()],
            vec!["x^2 + y^2 - 1".into(), "x - y".into()],
            "x^2 - x*y",
            "grevlex",
        )
        .unwrap();
        assert!(member);
        assert_eq!(witness.unwrap().len(), 2);
    }

    #[test]
    fn graphs_built_from_strings_match_the_bundled_dataset() {
        let graph = RayGraph::new(vec!["1 0 0".into(), "0 1 0".into(), "0 0 1".into()]).unwrap();
        assert_eq!(graph.__len__(), 3);
        assert_eq!(graph.triple_count(), 1);

        let wlog = RayGraph::wlog_assumptions();
        assert_eq!(wlog.len(), 9);
        let cert = RayGraph::peres33().greedy(Some(wlog)).unwrap();
        assert_eq!(cert.verdict(), "uncolourable");
        assert_eq!(cert.branch_count().unwrap(), 0);

        let round = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(round.doc, cert.doc);
    }
}
