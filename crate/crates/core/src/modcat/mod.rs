//! Modules over a finite-dimensional Hopf algebra given by structure
//! constants: hom spaces, tensor products, duals, pairings and radicals.

mod module;
mod pairing;
mod radical;
mod subobject;

pub use module::{hom_space, is_intertwiner, Module};
pub use pairing::{categorical_rigid_invariant, pairing_data, PairingData};
pub use radical::{negligible_radical, nilpotent_fixture, PivotalData};
pub use subobject::{subobject_from_image, SubobjectInclusion};

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exact::{ExactMatrix, Rational, Whisker};
use crate::group::FiniteGroup;
use crate::report::{Check, Report};
use crate::{Error, Result};

/// A unital associative algebra: `mult` is `dim × dim²`, `unit` is `dim × 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub mult: ExactMatrix,
    pub unit: ExactMatrix,
}

impl Algebra {
    pub fn new(mult: ExactMatrix, unit: ExactMatrix) -> Result<Self> {
        let dim = unit.rows();
        if unit.cols() != 1 || mult.shape() != (dim, dim * dim) {
            return Err(Error::Shape(format!(
                "algebra of dimension {dim} needs a {dim}x{} product, got {:?}",
                dim * dim,
                mult.shape()
            )));
        }
        Ok(Self { dim, mult, unit })
    }

    /// Coordinates of `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<Rational> {
        self.mult.col_vec(i * self.dim + j)
    }
}

/// A Hopf algebra by structure constants.
///
/// `comult` is `dim² × dim` (column `i` is `Δ(e_i)`), `counit` is `1 × dim`
/// and `antipode` is `dim × dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    pub name: String,
    pub algebra: Arc<Algebra>,
    pub comult: ExactMatrix,
    pub counit: ExactMatrix,
    pub antipode: ExactMatrix,
}

impl HopfPresentation {
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra,
        comult: ExactMatrix,
        counit: ExactMatrix,
        antipode: ExactMatrix,
    ) -> Result<Self> {
        let n = algebra.dim;
        if comult.shape() != (n * n, n) || counit.shape() != (1, n) || antipode.shape() != (n, n) {
            return Err(Error::Shape(format!("Hopf structure maps do not match dimension {n}")));
        }
        Ok(Self { name: name.into(), algebra: Arc::new(algebra), comult, counit, antipode })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    /// When every basis vector is group-like and the antipode permutes the
    /// basis, the index of each element's inverse.
    pub fn group_like_inverses(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let mut inv = Vec::with_capacity(n);
        for i in 0..n {
            let delta = self.comult.col_vec(i);
            let grouplike = delta.iter().enumerate().all(|(k, c)| {
                if k == i * n + i { c.is_one() } else { c.is_zero() }
            });
            if !grouplike || !self.counit[(0, i)].is_one() {
                return None;
            }
            let s = self.antipode.col_vec(i);
            let j = s.iter().position(|c| !c.is_zero())?;
            if !s[j].is_one() || s.iter().filter(|c| !c.is_zero()).count() != 1 {
                return None;
            }
            inv.push(j);
        }
        Some(inv)
    }
}

/// The group algebra `QG`: basis the group elements, all group-like.
pub fn group_algebra(g: &FiniteGroup) -> HopfPresentation {
    let n = g.order();
    let mut mult = ExactMatrix::zeros(n, n * n);
    let mut comult = ExactMatrix::zeros(n * n, n);
    let mut antipode = ExactMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            mult[(g.mul(a, b), a * n + b)] = Rational::one();
        }
        comult[(a * n + a, a)] = Rational::one();
        antipode[(g.inverse(a), a)] = Rational::one();
    }
    let mut unit = ExactMatrix::zeros(n, 1);
    unit[(0, 0)] = Rational::one();
    let counit = ExactMatrix::row(vec![Rational::one(); n]);
    let algebra = Algebra::new(mult, unit).expect("group algebra shapes");
    HopfPresentation::new(format!("Q{}", g.name), algebra, comult, counit, antipode).expect("group algebra shapes")
}

/// Checks the bialgebra and antipode axioms, each as a residual matrix.
pub fn validate_hopf(h: &HopfPresentation) -> Report {
    let n = h.dim();
    let nn = n * n;
    let one = ExactMatrix::identity(1);
    let id = ExactMatrix::identity(n);
    let m = &h.algebra.mult;
    let e = &h.algebra.unit;
    let d = &h.comult;
    let eps = &h.counit;
    let s = &h.antipode;
    let swap = swap_matrix(n);
    let mut r = Report::new();

    r.push(Check::equal(
        "associativity",
        &ExactMatrix::chain(n * nn, &[Whisker::new(1, m, n), Whisker::new(1, m, 1)]),
        &ExactMatrix::chain(n * nn, &[Whisker::new(n, m, 1), Whisker::new(1, m, 1)]),
    ));
    r.push(Check::equal("left unit", &m.mul(&e.kron(&id)), &id));
    r.push(Check::equal("right unit", &m.mul(&id.kron(e)), &id));
    r.push(Check::equal(
        "coassociativity",
        &d.through(&[Whisker::new(1, d, n)]),
        &d.through(&[Whisker::new(n, d, 1)]),
    ));
    r.push(Check::equal("left counit", &eps.kron(&id).mul(d), &id));
    r.push(Check::equal("right counit", &id.kron(eps).mul(d), &id));
    let delta_m = d.mul(m);
    let mm_dd = ExactMatrix::chain(
        nn,
        &[
            Whisker::new(n, d, 1),
            Whisker::new(1, d, nn),
            Whisker::new(n, &swap, n),
            Whisker::new(nn, m, 1),
            Whisker::new(1, m, n),
        ],
    );
    r.push(Check::equal("comultiplication is multiplicative", &delta_m, &mm_dd));
    r.push(Check::equal("comultiplication is unital", &d.mul(e), &e.kron(e)));
    r.push(Check::equal("counit is multiplicative", &eps.mul(m), &eps.kron(eps)));
    r.push(Check::equal("counit is unital", &eps.mul(e), &one));
    let e_eps = e.mul(eps);
    r.push(Check::equal("antipode (left)", &d.through(&[Whisker::new(1, s, n), Whisker::new(1, m, 1)]), &e_eps));
    r.push(Check::equal("antipode (right)", &d.through(&[Whisker::new(n, s, 1), Whisker::new(1, m, 1)]), &e_eps));
    r.push(Check::from_bool("antipode invertible", s.is_invertible()));
    r
}

/// The flip `X⊗X → X⊗X`.
pub fn swap_matrix(n: usize) -> ExactMatrix {
    let mut t = ExactMatrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            t[(b * n + a, a * n + b)] = Rational::one();
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_group_algebra_is_hopf() {
        let h = group_algebra(&FiniteGroup::cyclic(2));
        let r = validate_hopf(&h);
        assert!(r.passed(), "{r}");
        assert_eq!(h.group_like_inverses(), Some(vec![0, 1]));
    }

    #[test]
    fn zero_antipode_fails_only_antipode_checks() {
        let mut h = group_algebra(&FiniteGroup::cyclic(2));
        h.antipode = ExactMatrix::zeros(2, 2);
        let r = validate_hopf(&h);
        assert!(!r.passed_named("antipode (left)"));
        assert!(!r.passed_named("antipode (right)"));
        assert!(r.passed_named("coassociativity"));
        assert!(r.passed_named("comultiplication is multiplicative"));
    }
}
