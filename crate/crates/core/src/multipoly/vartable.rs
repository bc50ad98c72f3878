//! Ordered table of variable names. Polynomials carry a shared handle to
//! their table; operations between polynomials demand equal tables.

use super::MultiPolyError;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    /// Build a table from distinct identifier-shaped names (a letter or
    /// `_`, then letters, digits or `_`). Order is significant: it fixes
    /// both the exponent layout and the lex precedence of variables.
    pub fn new<I, S>(names: I) -> Result<Arc<VarTable>, MultiPolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for name in &names {
            let mut chars = name.chars();
            let head_ok = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(MultiPolyError::BadVarTable(format!(
                    "{name:?} is not a valid variable name"
                )));
            }
        }
        let mut seen = names.clone();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(MultiPolyError::BadVarTable(
                "duplicate variable name".into(),
            ));
        }
        Ok(Arc::new(VarTable { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn display(&self) -> String {
        self.names.join(", ")
    }
}
