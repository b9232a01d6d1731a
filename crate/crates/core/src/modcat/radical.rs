use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{hom_space, Algebra, Module};
use crate::exact::{int, one, ExactMatrix, Rational, Subspace};
use crate::Result;

/// A family of invertible endomorphisms `α_X`, keyed by object name.
/// Objects without an entry use `scalar · id`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PivotalData {
    #[serde(with = "crate::exact::serde_rational")]
    pub scalar: Rational,
    pub overrides: BTreeMap<String, ExactMatrix>,
}

impl Default for PivotalData {
    fn default() -> Self {
        Self::identity()
    }
}

impl PivotalData {
    pub fn identity() -> Self {
        Self { scalar: one(), overrides: BTreeMap::new() }
    }

    pub fn scalar(c: Rational) -> Self {
        Self { scalar: c, overrides: BTreeMap::new() }
    }

    pub fn with(mut self, object: impl Into<String>, alpha: ExactMatrix) -> Self {
        self.overrides.insert(object.into(), alpha);
        self
    }

    pub fn for_object(&self, name: &str, dim: usize) -> ExactMatrix {
        self.overrides
            .get(name)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::identity(dim).scale(&self.scalar))
    }

    pub fn is_identity(&self) -> bool {
        self.scalar == one() && self.overrides.values().all(ExactMatrix::is_identity)
    }
}

/// Basis of `{f ∈ Hom(x, y) : tr(φ_y∘f∘g) = 0 for all g ∈ Hom(y, x)}`.
///
/// The trace is the matrix trace: with an involutive antipode the double
/// dual is the object itself.
pub fn negligible_radical(x: &Module, y: &Module, pivot: &PivotalData) -> Result<Vec<ExactMatrix>> {
    let fs = hom_space(x, y)?;
    let gs = hom_space(y, x)?;
    let phi = pivot.for_object(&y.name, y.dim);
    let mut t = ExactMatrix::zeros(fs.len(), gs.len());
    for (k, f) in fs.iter().enumerate() {
        for (l, g) in gs.iter().enumerate() {
            t[(k, l)] = phi.mul(f).mul(g).trace();
        }
    }
    if fs.is_empty() {
        return Ok(Vec::new());
    }
    let kernel = if gs.is_empty() { Subspace::full(fs.len()) } else { Subspace::kernel(&t.transpose()) };
    Ok(kernel
        .basis_vectors()
        .into_iter()
        .map(|c| {
            fs.iter()
                .zip(&c)
                .fold(ExactMatrix::zeros(y.dim, x.dim), |acc, (f, ck)| acc.add(&f.scale(ck)))
        })
        .collect())
}

/// `Q[t]/(t²)` acting on `Q²` by a nilpotent Jordan block; no Hopf structure.
pub fn nilpotent_fixture() -> Module {
    let mut mult = ExactMatrix::zeros(2, 4);
    mult[(0, 0)] = int(1);
    mult[(1, 1)] = int(1);
    mult[(1, 2)] = int(1);
    let unit = ExactMatrix::column(vec![int(1), int(0)]);
    let algebra = Arc::new(Algebra::new(mult, unit).expect("shapes"));
    let n = ExactMatrix::from_i64(&[&[0, 1], &[0, 0]]);
    Module::over_algebra("jordan", algebra, vec![ExactMatrix::identity(2), n]).expect("shapes")
}
