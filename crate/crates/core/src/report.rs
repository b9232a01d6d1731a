//! Pass/fail records shared by every checker.

use std::fmt;

use serde::Serialize;

use crate::exact::ExactMatrix;

/// One named identity or axiom, with its residual.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of nonzero residual entries, or violated instances.
    pub nonzero: usize,
    /// First offending position, e.g. a matrix entry or a basis triple.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, nonzero: 0, witness: None, note: None }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Self { name: name.into(), passed: false, nonzero: 1, witness, note: None }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        if ok { Self::pass(name) } else { Self::fail(name, None) }
    }

    /// Passes iff `lhs == rhs` entry-wise; a shape mismatch is a failure.
    pub fn equal(name: impl Into<String>, lhs: &ExactMatrix, rhs: &ExactMatrix) -> Self {
        let name = name.into();
        if lhs.shape() != rhs.shape() {
            let mut c = Self::fail(name, None);
            c.note = Some(format!("shapes {:?} and {:?}", lhs.shape(), rhs.shape()));
            return c;
        }
        Self::zero(name, &lhs.sub(rhs))
    }

    /// Passes iff the residual is the zero matrix.
    pub fn zero(name: impl Into<String>, residual: &ExactMatrix) -> Self {
        let cols = residual.cols().max(1);
        let mut nonzero = 0;
        let mut witness = None;
        for (idx, x) in residual.entries().iter().enumerate() {
            if !num_traits::Zero::is_zero(x) {
                nonzero += 1;
                witness.get_or_insert_with(|| vec![idx / cols, idx % cols]);
            }
        }
        Self { name: name.into(), passed: nonzero == 0, nonzero, witness, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A list of checks; passes when all of them pass.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Whether the named check exists and passed.
    pub fn passed_named(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " at {w:?}")?;
            }
            if let Some(n) = &c.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
