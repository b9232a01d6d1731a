//! Frobenius algebras in plain vector spaces: an algebra by structure
//! constants plus an associative nondegenerate form, the rigidity map of the
//! form, and subalgebra tests.

pub mod builtins;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{BilinearForm, ExactMatrix, Rational, Subspace};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// A unital algebra with a bilinear form, over the rationals.
///
/// `mult` is `dim × dim²`: column `i * dim + j` holds the coordinates of `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VecFrobeniusAlgebra {
    pub name: String,
    pub dim: usize,
    pub mult: ExactMatrix,
    pub unit: Vec<Rational>,
    pub form: BilinearForm,
    /// Display names for the basis vectors.
    pub basis_names: Vec<String>,
}

impl VecFrobeniusAlgebra {
    /// Builds from sparse structure constants `(i, j, k, c)`: `e_i · e_j += c · e_k`.
    pub fn from_sparse(
        name: impl Into<String>,
        dim: usize,
        products: &[(usize, usize, usize, Rational)],
        unit: Vec<Rational>,
        gram: ExactMatrix,
    ) -> Result<Self> {
        let mut mult = ExactMatrix::zeros(dim, dim * dim);
        for (i, j, k, c) in products {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::Invalid(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            mult[(*k, i * dim + j)] += c;
        }
        Self::new(name, mult, unit, gram)
    }

    pub fn new(name: impl Into<String>, mult: ExactMatrix, unit: Vec<Rational>, gram: ExactMatrix) -> Result<Self> {
        let dim = unit.len();
        if mult.shape() != (dim, dim * dim) {
            return Err(Error::Shape(format!("multiplication must be {dim}x{}, got {:?}", dim * dim, mult.shape())));
        }
        if gram.shape() != (dim, dim) {
            return Err(Error::Shape(format!("Gram matrix must be {dim}x{dim}, got {:?}", gram.shape())));
        }
        Ok(Self { name: name.into(), dim, mult, unit, form: BilinearForm::new(gram)?, basis_names: Vec::new() })
    }

    pub fn with_basis_names(mut self, names: &[&str]) -> Self {
        self.basis_names = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn gram(&self) -> &ExactMatrix {
        self.form.gram()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let ab = ExactMatrix::column(a.to_vec()).kron(&ExactMatrix::column(b.to_vec()));
        self.mult.mul(&ab).col_vec(0)
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        self.mult.col_vec(i * self.dim + j)
    }
}

/// Checks associativity, the unit, associativity of the form and its nondegeneracy.
///
/// Witnesses are basis index triples `(i, j, k)` (pairs for the unit).
pub fn validate_algebra(a: &VecFrobeniusAlgebra) -> Report {
    let n = a.dim;
    let mut report = Report::new();

    let mut assoc = Check::pass("associativity");
    let mut form_assoc = Check::pass("form associativity");
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let jk = a.basis_product(j, k);
                let left = a.product(&ij, &a.basis_vector(k));
                let right = a.product(&a.basis_vector(i), &jk);
                if left != right {
                    record(&mut assoc, [i, j, k]);
                }
                let kl = a.form.eval(&ij, &a.basis_vector(k));
                let kr = a.form.eval(&a.basis_vector(i), &jk);
                if kl != kr {
                    record(&mut form_assoc, [i, j, k]);
                }
            }
        }
    }
    report.push(assoc);

    let mut unit = Check::pass("unit");
    for i in 0..n {
        let e = a.basis_vector(i);
        if a.product(&a.unit, &e) != e || a.product(&e, &a.unit) != e {
            record(&mut unit, [i]);
        }
    }
    report.push(unit);
    report.push(form_assoc);

    let nondeg = Check::from_bool("form nondegenerate", a.form.is_nondegenerate());
    report.push(if nondeg.passed { nondeg } else { nondeg.with_note("det(Gram) = 0") });
    report
}

fn record<const N: usize>(c: &mut Check, w: [usize; N]) {
    if c.passed {
        c.witness = Some(w.to_vec());
        c.nonzero = 0;
    }
    c.passed = false;
    c.nonzero += 1;
}

/// The rigidity map of a form relative to a basis.
///
/// `matrix` acts in the coordinates of the algebra's stored basis; for the
/// stored basis itself it equals the Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityMap {
    pub matrix: ExactMatrix,
    /// Columns are the chosen basis vectors, written in stored coordinates.
    pub basis: ExactMatrix,
}

impl RigidityMap {
    /// The same map written in the chosen basis: `Pᵀ·G·P`.
    pub fn in_chosen_basis(&self, form: &BilinearForm) -> ExactMatrix {
        self.basis.transpose().mul(form.gram()).mul(&self.basis)
    }
}

/// Rigidity map for the basis `f_i = P e_i`.
///
/// With the Hermitian form that makes `(f_i)` orthonormal, the adjoint of `P`
/// is `P·Pᵀ·P⁻¹`, so the operator is `P·Pᵀ·M` where `M` is the Gram matrix.
pub fn rigidity_map(form: &BilinearForm, basis_change: &ExactMatrix) -> Result<RigidityMap> {
    if basis_change.shape() != (form.dim(), form.dim()) {
        return Err(Error::Shape(format!("basis change must be {0}x{0}", form.dim())));
    }
    if !basis_change.is_invertible() {
        return Err(Error::Singular);
    }
    let matrix = basis_change.mul(&basis_change.transpose()).mul(form.gram());
    Ok(RigidityMap { matrix, basis: basis_change.clone() })
}

pub fn is_rigid_invariant(v: &Subspace, m: &RigidityMap) -> Result<bool> {
    Ok(v.apply(&m.matrix)? == *v)
}

/// Smallest unital subalgebra containing the generators.
pub fn subalgebra_closure(a: &VecFrobeniusAlgebra, generators: &[Vec<Rational>]) -> Subspace {
    let mut vectors = vec![a.unit.clone()];
    vectors.extend(generators.iter().cloned());
    let mut space = Subspace::span_vectors(a.dim, &vectors);
    for _ in 0..a.dim {
        let basis = space.basis_vectors();
        let mut grown = basis.clone();
        for x in &basis {
            for y in &basis {
                grown.push(a.product(x, y));
            }
        }
        let next = Subspace::span_vectors(a.dim, &grown);
        if next == space {
            break;
        }
        space = next;
    }
    space
}

pub fn is_unital_subalgebra(a: &VecFrobeniusAlgebra, v: &Subspace) -> bool {
    if !v.contains_vector(&a.unit) {
        return false;
    }
    let basis = v.basis_vectors();
    basis.iter().all(|x| basis.iter().all(|y| v.contains_vector(&a.product(x, y))))
}

pub fn is_nondegenerate_subspace(form: &BilinearForm, v: &Subspace) -> Result<bool> {
    Ok(form.restrict(v)?.is_nondegenerate())
}

/// A candidate subspace and its flags. `None` means not applicable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VecSubalgebra {
    pub space: Subspace,
    pub is_unital_subalgebra: Option<bool>,
    pub is_nondegenerate: bool,
    pub is_rigid_invariant: bool,
}

impl VecSubalgebra {
    pub fn is_frobenius(&self) -> bool {
        self.is_unital_subalgebra != Some(false) && self.is_nondegenerate
    }
}

pub fn is_frobenius_subalgebra(a: &VecFrobeniusAlgebra, v: &Subspace) -> Result<VecSubalgebra> {
    let mut flags = subspace_flags(&a.form, v)?;
    flags.is_unital_subalgebra = Some(is_unital_subalgebra(a, v));
    Ok(flags)
}

/// Form-only flags: nondegeneracy and rigid invariance in the stored basis.
pub fn subspace_flags(form: &BilinearForm, v: &Subspace) -> Result<VecSubalgebra> {
    let m = rigidity_map(form, &ExactMatrix::identity(form.dim()))?;
    Ok(VecSubalgebra {
        space: v.clone(),
        is_unital_subalgebra: None,
        is_nondegenerate: is_nondegenerate_subspace(form, v)?,
        is_rigid_invariant: is_rigid_invariant(v, &m)?,
    })
}

/// A basis in which `v` becomes rigid invariant: a basis of `v` followed by
/// one of its left orthogonal `{u : κ(u, v) = 0}`. `None` when `v` is degenerate.
pub fn fixed_basis(form: &BilinearForm, v: &Subspace) -> Result<Option<ExactMatrix>> {
    if !is_nondegenerate_subspace(form, v)? {
        return Ok(None);
    }
    let perp = if v.is_zero() {
        Subspace::full(form.dim())
    } else {
        Subspace::kernel(&form.gram().mul(v.basis()).transpose())
    };
    Ok(Some(v.basis().hstack(perp.basis())))
}
