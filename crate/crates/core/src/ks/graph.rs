//! Orthogonality structure over a set of rays, plus the bundled 33-ray
//! dataset and its symmetry-breaking assumption preset.

use super::certificate::Colour;
use super::vec3::Vec3;
use super::KsError;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    /// Canonical representative of the spanned line.
    pub vector: Vec3,
    /// Original notation, when the ray came from a table or file.
    pub label: Option<String>,
}

impl Ray {
    pub fn name(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| self.vector.display_name())
    }
}

/// Rays with every orthogonal pair (edge) and every mutually orthogonal
/// triple precomputed. A triple is listed exactly when all three of its
/// pairs are edges, so the triple list is determined by the edge list.
#[derive(Debug, Clone)]
pub struct OrthGraph {
    rays: Vec<Ray>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    triples: Vec<[usize; 3]>,
    triples_of: Vec<Vec<usize>>,
}

impl OrthGraph {
    pub fn build(vectors: &[Vec3]) -> Result<OrthGraph, KsError> {
        OrthGraph::build_labeled(vectors.iter().map(|v| (v.clone(), None)).collect())
    }

    pub fn build_labeled(items: Vec<(Vec3, Option<String>)>) -> Result<OrthGraph, KsError> {
        let mut rays: Vec<Ray> = Vec::with_capacity(items.len());
        let mut seen: HashMap<Vec3, usize> = HashMap::new();
        for (position, (vector, label)) in items.into_iter().enumerate() {
            if vector.is_zero() {
                return Err(KsError::ZeroVector { position });
            }
            let canonical = vector.canonical()?;
            let name = label.clone().unwrap_or_else(|| vector.display_name());
            if let Some(&first) = seen.get(&canonical) {
                return Err(KsError::DuplicateRay {
                    first: format!("{} ({})", first, rays[first].name()),
                    second: format!("{position} ({name})"),
                });
            }
            seen.insert(canonical.clone(), position);
            rays.push(Ray { vector: canonical, label });
        }

        let n = rays.len();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                if rays[i].vector.dot(&rays[j].vector).is_zero() {
                    edges.push((i, j));
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }

        let mut triples = Vec::new();
        for &(i, j) in &edges {
            for &k in &adjacency[i] {
                if k > j && adjacency[j].binary_search(&k).is_ok() {
                    triples.push([i, j, k]);
                }
            }
        }
        triples.sort_unstable();
        let mut triples_of = vec![Vec::new(); n];
        for (t, tri) in triples.iter().enumerate() {
            for &r in tri {
                triples_of[r].push(t);
            }
        }

        Ok(OrthGraph { rays, edges, adjacency, triples, triples_of })
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn ray(&self, i: usize) -> &Ray {
        &self.rays[i]
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn adjacent(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn triples_containing(&self, i: usize) -> &[usize] {
        &self.triples_of[i]
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adjacency[i].binary_search(&j).is_ok()
    }

    /// Index of the ray spanned by an arbitrary nonzero vector.
    pub fn ray_index(&self, v: &Vec3) -> Option<usize> {
        let canonical = v.canonical().ok()?;
        self.rays.iter().position(|r| r.vector == canonical)
    }

    /// Resolve (vector, colour) assumptions to ray indices, rejecting
    /// unknown rays and repeated assumptions.
    pub fn resolve_assumptions(
        &self,
        assumptions: &[(Vec3, Colour)],
    ) -> Result<Vec<(usize, Colour)>, KsError> {
        let mut out = Vec::with_capacity(assumptions.len());
        for (v, colour) in assumptions {
            let idx = self.ray_index(v).ok_or_else(|| KsError::UnknownRay {
                vector: v.display_name(),
            })?;
            if out.iter().any(|&(i, _)| i == idx) {
                return Err(KsError::RepeatedAssumption {
                    ray: self.rays[idx].name(),
                });
            }
            out.push((idx, *colour));
        }
        Ok(out)
    }
}

/// The 33 rays, in table order: components 0, 1 or sqrt2 (digit `2`),
/// `!` negating the digit that follows.
pub const PERES33_COMPACT: [&str; 33] = [
    "!1!12", "!102", "!112", "!12!1", "!120", "!121", "0!12", "002", "012",
    "02!2", "02!1", "020", "021", "022", "1!12", "102", "112", "12!1",
    "120", "121", "2!20", "2!1!1", "2!10", "2!11", "20!2", "20!1", "200",
    "201", "202", "21!1", "210", "211", "220",
];

/// The 33 vectors in table order.
pub fn peres33() -> Vec<Vec3> {
    PERES33_COMPACT
        .iter()
        .map(|s| Vec3::parse_compact(s).expect("table entry"))
        .collect()
}

/// Compact labels, aligned with [`peres33`].
pub fn peres33_compact() -> Vec<String> {
    PERES33_COMPACT.iter().map(|s| s.to_string()).collect()
}

/// The 33-ray orthogonality graph, labelled with the table notation.
pub fn peres_graph() -> OrthGraph {
    let items = PERES33_COMPACT
        .iter()
        .map(|s| {
            (
                Vec3::parse_compact(s).expect("table entry"),
                Some(s.to_string()),
            )
        })
        .collect();
    OrthGraph::build_labeled(items).expect("the bundled dataset is well formed")
}

/// Symmetry-breaking assumptions: fix the colours that any purported
/// colouring can be rotated into, so refutation needs no branching on
/// these nine rays.
pub fn wlog_assumptions() -> Vec<(Vec3, Colour)> {
    [
        ("001", Colour::Green),
        ("100", Colour::Red),
        ("010", Colour::Red),
        ("101", Colour::Green),
        ("!101", Colour::Red),
        ("011", Colour::Green),
        ("0!11", Colour::Red),
        ("1!12", Colour::Green),
        ("!112", Colour::Red),
    ]
    .into_iter()
    .map(|(s, c)| (Vec3::parse_compact(s).expect("preset entry"), c))
    .collect()
}

/// Parse a vector file: one vector per line, three whitespace-separated
/// components, `#` starting a comment. Components are compact digits
/// (`0`, `1`, `2` for sqrt2, `!` negating) or explicit `a+b*s2` form.
pub fn parse_vector_file(text: &str) -> Result<Vec<(Vec3, Option<String>)>, KsError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(KsError::Parse {
                line: lineno + 1,
                message: format!("expected 3 components, got {}", tokens.len()),
            });
        }
        let mut comps = Vec::with_capacity(3);
        for t in &tokens {
            comps.push(Vec3::parse_component(t).map_err(|message| KsError::Parse {
                line: lineno + 1,
                message,
            })?);
        }
        let arr = <[crate::exact_arith::QuadInt; 3]>::try_from(comps).expect("three");
        out.push((Vec3(arr), Some(tokens.join(" "))));
    }
    Ok(out)
}

/// Parse an assumption file: per line, a three-component vector followed
/// by `green` or `red`. Same comment and component rules as vector files.
pub fn parse_assumption_file(text: &str) -> Result<Vec<(Vec3, Colour)>, KsError> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 4 {
            return Err(KsError::Parse {
                line: lineno + 1,
                message: format!(
                    "expected 3 components and a colour, got {} tokens",
                    tokens.len()
                ),
            });
        }
        let mut comps = Vec::with_capacity(3);
        for t in &tokens[..3] {
            comps.push(Vec3::parse_component(t).map_err(|message| KsError::Parse {
                line: lineno + 1,
                message,
            })?);
        }
        let colour = match tokens[3].to_ascii_lowercase().as_str() {
            "green" => Colour::Green,
            "red" => Colour::Red,
            other => {
                return Err(KsError::Parse {
                    line: lineno + 1,
                    message: format!("expected green or red, got {other:?}"),
                })
            }
        };
        let arr = <[crate::exact_arith::QuadInt; 3]>::try_from(comps).expect("three");
        out.push((Vec3(arr), colour));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_graph() {
        let g = OrthGraph::build(&[
            Vec3::parse_compact("100").unwrap(),
            Vec3::parse_compact("010").unwrap(),
            Vec3::parse_compact("001").unwrap(),
        ])
        .unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.triples(), &[[0, 1, 2]]);
        assert!(g.is_edge(2, 0));
    }

    #[test]
    fn non_orthogonal_vectors_make_an_empty_graph() {
        let g = OrthGraph::build(&[
            Vec3::parse_compact("100").unwrap(),
            Vec3::parse_compact("110").unwrap(),
        ])
        .unwrap();
        assert!(g.edges().is_empty());
        assert!(g.triples().is_empty());
    }

    #[test]
    fn duplicates_are_named_in_the_error() {
        // (0,1,0) and (0,sqrt2,0) span the same ray
        let err = OrthGraph::build_labeled(vec![
            (Vec3::parse_compact("010").unwrap(), Some("010".into())),
            (Vec3::parse_compact("020").unwrap(), Some("020".into())),
        ])
        .unwrap_err();
        match err {
            KsError::DuplicateRay { first, second } => {
                assert!(first.contains("010"), "{first}");
                assert!(second.contains("020"), "{second}");
            }
            other => panic!("expected DuplicateRay, got {other:?}"),
        }
        let err = OrthGraph::build(&[Vec3::new(
            crate::exact_arith::QuadInt::zero(),
            crate::exact_arith::QuadInt::zero(),
            crate::exact_arith::QuadInt::zero(),
        )])
        .unwrap_err();
        assert_eq!(err, KsError::ZeroVector { position: 0 });
    }

    #[test]
    fn the_dataset_has_the_frozen_counts() {
        let g = peres_graph();
        assert_eq!(g.len(), 33);
        assert_eq!(g.edges().len(), 72, "orthogonal pairs");
        assert_eq!(g.triples().len(), 16, "orthogonal triples");
        // every triple's pairs really are edges, and pairwise orthogonal
        for tri in g.triples() {
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                assert!(g.is_edge(tri[a], tri[b]));
                assert!(g
                    .ray(tri[a])
                    .vector
                    .dot(&g.ray(tri[b]).vector)
                    .is_zero());
            }
        }
    }

    #[test]
    fn the_preset_rays_are_all_in_the_dataset() {
        let g = peres_graph();
        let resolved = g.resolve_assumptions(&wlog_assumptions()).unwrap();
        assert_eq!(resolved.len(), 9);
        assert_eq!(
            resolved.iter().map(|&(i, _)| i).collect::<Vec<_>>(),
            vec![7, 26, 11, 28, 24, 13, 9, 14, 2]
        );
        let greens = resolved
            .iter()
            .filter(|&&(_, c)| c == Colour::Green)
            .count();
        assert_eq!(greens, 4);
    }

    #[test]
    fn assumption_resolution_errors() {
        let g = peres_graph();
        let missing = vec![(Vec3::parse_compact("111").unwrap(), Colour::Green)];
        assert!(matches!(
            g.resolve_assumptions(&missing),
            Err(KsError::UnknownRay { .. })
        ));
        let twice = vec![
            (Vec3::parse_compact("001").unwrap(), Colour::Green),
            (Vec3::parse_compact("002").unwrap(), Colour::Red), // same ray
        ];
        assert!(matches!(
            g.resolve_assumptions(&twice),
            Err(KsError::RepeatedAssumption { .. })
        ));
    }

    #[test]
    fn vector_files_parse() {
        let text = "\
# a comment line
1 0 0
0 1 0   # trailing comment
!1 0 2
1+1*s2 0 -1
";
        let items = parse_vector_file(text).unwrap();
        assert_eq!(items.len(), 4);
        assert_eq!(items[2].0, Vec3::parse_compact("!102").unwrap());
        assert_eq!(items[3].1.as_deref(), Some("1+1*s2 0 -1"));
        assert!(matches!(
            parse_vector_file("1 0\n"),
            Err(KsError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_vector_file("1 0 junk\n"),
            Err(KsError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn assumption_files_parse() {
        let text = "0 0 1 green\n1 0 0 RED\n";
        let items = parse_assumption_file(text).unwrap();
        assert_eq!(items[0].1, Colour::Green);
        assert_eq!(items[1].1, Colour::Red);
        assert!(matches!(
            parse_assumption_file("0 0 1 blue\n"),
            Err(KsError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_assumption_file("0 0 1\n"),
            Err(KsError::Parse { line: 1, .. })
        ));
    }
}
