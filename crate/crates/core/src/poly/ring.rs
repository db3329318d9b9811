use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::error::PolyError;

/// An ordered list of variable names. Every polynomial carries a shared
/// handle to its ring; variable identity is by name, and operations across
/// distinct rings are rejected rather than silently unified.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<Arc<Self>, PolyError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !seen.insert(v.clone()) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(Ring { vars }))
    }

    /// Convenience constructor for string-literal variable lists.
    pub fn of(vars: &[&str]) -> Arc<Self> {
        Ring::new(vars.to_vec()).expect("distinct variable names")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, index: usize) -> &str {
        &self.vars[index]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The sub-ring on the given variable indices, keeping their order.
    pub fn select(&self, indices: &[usize]) -> Arc<Ring> {
        let vars: Vec<String> = indices.iter().map(|&i| self.vars[i].clone()).collect();
        Arc::new(Ring { vars })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vars.join(", "))
    }
}
