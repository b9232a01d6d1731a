//! Frobenius algebra objects as concrete matrices, in either backend.
//!
//! Morphisms compose right to left. Tensor index `(i, j)` is `i * n + j`.
//! The object is selfdual through `ev = ε∘m` and `coev = δ∘e`.

mod axioms;
mod biprojection;
mod convolution;
mod hstar;
mod identities;

pub use axioms::check_axioms;
pub use biprojection::{
    biprojection, coset_space, coset_subalgebra, equivalent, full_biprojection, inclusion_report, join, leq, meet, sum_projection,
    unit_biprojection, Biprojection, JoinReport, Provenance,
};
pub use convolution::{convolution, fourier, fourier_inverse};
pub use hstar::{hstar_from_hopf, HStar};
pub use identities::{
    exchange_check, formal_angle, frobenius_morphism_check, landau_check, weak_positivity_probe, FormalCosine,
    LandauReport,
};

pub use crate::modcat::{PivotalData, SubobjectInclusion};

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::{one, ExactMatrix, Rational, Subspace, Whisker};
use crate::frobvec::VecFrobeniusAlgebra;
use crate::modcat::{hom_space, subobject_from_image, Module};
use crate::{Error, Result};

/// Where the object lives.
#[derive(Clone, Debug)]
pub enum Backend {
    /// Plain vector spaces.
    Vec,
    /// Modules over a Hopf algebra; the carrier module.
    Rep(Arc<Module>),
}

/// `(X, m, δ, e, ε)` with `m: n×n²`, `δ: n²×n`, `e: n×1`, `ε: 1×n`.
#[derive(Clone, Debug)]
pub struct FrobeniusObject {
    pub name: String,
    pub backend: Backend,
    pub dim: usize,
    pub m: ExactMatrix,
    pub delta: ExactMatrix,
    pub e: ExactMatrix,
    pub eps: ExactMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusInvariants {
    #[serde(with = "crate::exact::serde_rational")]
    pub mu: Rational,
    /// `m∘δ = λ·id`, when that holds.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_rational")]
    pub lambda: Option<Rational>,
    #[serde(with = "crate::exact::serde_rational")]
    pub trace_id: Rational,
    pub connected_dim: usize,
}

pub(crate) fn ser_opt_rational<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

impl FrobeniusObject {
    pub fn new(
        name: impl Into<String>,
        backend: Backend,
        m: ExactMatrix,
        delta: ExactMatrix,
        e: ExactMatrix,
        eps: ExactMatrix,
    ) -> Result<Self> {
        let n = e.rows();
        if m.shape() != (n, n * n) || delta.shape() != (n * n, n) || e.shape() != (n, 1) || eps.shape() != (1, n) {
            return Err(Error::Shape(format!("structure maps do not fit an object of dimension {n}")));
        }
        if let Backend::Rep(module) = &backend {
            if module.dim != n {
                return Err(Error::Shape(format!("carrier module has dimension {}, maps have {n}", module.dim)));
            }
        }
        Ok(Self { name: name.into(), backend, dim: n, m, delta, e, eps })
    }

    /// The unit object with every structure map the identity of `Q`.
    pub fn unit() -> Self {
        let i = ExactMatrix::identity(1);
        Self::new("1", Backend::Vec, i.clone(), i.clone(), i.clone(), i).expect("1x1")
    }

    /// Vector-space Frobenius object of an algebra with a form: `ε(c) = κ(1, c)`,
    /// `coev` the inverse Gram matrix and `δ = (m⊗id)∘(id⊗coev)`.
    pub fn from_vec_algebra(a: &VecFrobeniusAlgebra) -> Result<Self> {
        let n = a.dim;
        let e = ExactMatrix::column(a.unit.clone());
        let eps = e.transpose().mul(a.gram());
        let copairing = a
            .gram()
            .inverse()
            .map_err(|_| Error::Degenerate(format!("form of {} is degenerate", a.name)))?;
        let coev = ExactMatrix::column(copairing.flatten());
        let delta = ExactMatrix::identity(n).through(&[Whisker::new(n, &coev, 1), Whisker::new(1, &a.mult, n)]);
        Self::new(a.name.clone(), Backend::Vec, a.mult.clone(), delta, e, eps)
    }

    pub fn module(&self) -> Option<&Arc<Module>> {
        match &self.backend {
            Backend::Rep(m) => Some(m),
            Backend::Vec => None,
        }
    }

    pub fn ev(&self) -> ExactMatrix {
        self.eps.mul(&self.m)
    }

    pub fn coev(&self) -> ExactMatrix {
        self.delta.mul(&self.e)
    }

    /// `G[a][b] = ev(e_a ⊗ e_b)`.
    pub fn gram(&self) -> ExactMatrix {
        self.ev().reshape(self.dim, self.dim)
    }

    /// `coev = Σ C[a][b] e_a ⊗ e_b`.
    pub fn copairing(&self) -> ExactMatrix {
        self.coev().reshape(self.dim, self.dim)
    }

    /// Dual of an endomorphism through the self-duality.
    pub fn star(&self, f: &ExactMatrix) -> ExactMatrix {
        dual_between(&self.copairing(), f, &self.gram())
    }

    /// `tr(α) = ε∘m∘(α⊗id)∘δ∘e`.
    pub fn trace(&self, alpha: &ExactMatrix) -> Rational {
        let x = self.coev().through(&[Whisker::new(1, alpha, self.dim)]);
        self.ev().mul(&x).as_scalar().clone()
    }

    /// `tr_α(f) = tr(α∘f)`.
    pub fn trace_with(&self, pivot: &PivotalData, f: &ExactMatrix) -> Rational {
        self.trace(&pivot.for_object(&self.name, self.dim).mul(f))
    }

    pub fn mu(&self) -> Rational {
        self.eps.mul(&self.e).as_scalar().clone()
    }

    /// `λ` with `m∘δ = λ·id`, if it exists.
    pub fn lambda(&self) -> Option<Rational> {
        let md = self.m.mul(&self.delta);
        let l = md[(0, 0)].clone();
        (md == ExactMatrix::identity(self.dim).scale(&l)).then_some(l)
    }

    /// `dim Hom(1, X)`.
    pub fn connected_dim(&self) -> Result<usize> {
        match &self.backend {
            Backend::Vec => Ok(self.dim),
            Backend::Rep(module) => {
                let hopf = module
                    .hopf
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("carrier has no Hopf structure".into()))?;
                Ok(hom_space(&Module::trivial(hopf), module)?.len())
            }
        }
    }

    pub fn invariants(&self) -> Result<FrobeniusInvariants> {
        let lambda = self.lambda().ok_or(Error::NotSeparable)?;
        let inv = FrobeniusInvariants {
            mu: self.mu(),
            lambda: Some(lambda.clone()),
            trace_id: self.trace(&ExactMatrix::identity(self.dim)),
            connected_dim: self.connected_dim()?,
        };
        if inv.connected_dim == 1 && inv.trace_id != &lambda * &inv.mu {
            return Err(Error::Invalid(format!(
                "tr(id) = {} but λμ = {}",
                inv.trace_id,
                &lambda * &inv.mu
            )));
        }
        Ok(inv)
    }

    /// Splits an image subspace as a subobject in this backend.
    pub fn split(&self, image: &Subspace) -> Result<SubobjectInclusion> {
        match &self.backend {
            Backend::Vec => Ok(SubobjectInclusion::of_subspace(image)),
            Backend::Rep(module) => subobject_from_image(module, image),
        }
    }

    /// Gram matrix of the induced form on a subobject: `iᵀ·G·i`.
    pub fn induced_gram(&self, inc: &SubobjectInclusion) -> ExactMatrix {
        inc.i.transpose().mul(&self.gram()).mul(&inc.i)
    }

    /// `i* = C_Aᵀ·iᵀ·G_Xᵀ`, with `C_A` the inverse of the induced Gram matrix.
    pub fn inclusion_dual(&self, inc: &SubobjectInclusion) -> Result<ExactMatrix> {
        let ca = self
            .induced_gram(inc)
            .inverse()
            .map_err(|_| Error::Degenerate("induced form on the subobject is degenerate".into()))?;
        Ok(dual_between(&ca, &inc.i, &self.gram()))
    }

    /// The Frobenius structure a subobject inherits: `m_A = p∘m∘(i⊗i)`,
    /// `e_A = p∘e`, `ε_A = ε∘i`, and `δ_A` from the induced form.
    pub fn induced(&self, inc: &SubobjectInclusion) -> Result<FrobeniusObject> {
        let k = inc.dim;
        let ii = inc.i.kron(&inc.i);
        let m_a = inc.p.mul(&self.m).mul(&ii);
        let e_a = inc.p.mul(&self.e);
        let eps_a = self.eps.mul(&inc.i);
        let ca = self
            .induced_gram(inc)
            .inverse()
            .map_err(|_| Error::Degenerate("induced form on the subobject is degenerate".into()))?;
        let coev_a = ExactMatrix::column(ca.flatten());
        let delta_a = ExactMatrix::identity(k).through(&[Whisker::new(k, &coev_a, 1), Whisker::new(1, &m_a, k)]);
        let backend = match (&self.backend, &inc.module) {
            (Backend::Rep(_), Some(m)) => Backend::Rep(m.clone()),
            _ => Backend::Vec,
        };
        FrobeniusObject::new(format!("sub({})", self.name), backend, m_a, delta_a, e_a, eps_a)
    }

    /// The unit subobject: `i = e`, with its induced structure `b_1 = μ⁻¹·e∘ε`.
    pub fn unit_inclusion(&self) -> Result<SubobjectInclusion> {
        if self.mu().is_zero() {
            return Err(Error::Degenerate(format!("μ = ε∘e vanishes on {}", self.name)));
        }
        self.split(&Subspace::span(&self.e))
    }

    /// A basis of `End(X)` in the backend: all matrices for `Vec`,
    /// intertwiners for `Rep`.
    pub fn endomorphism_basis(&self) -> Result<Vec<ExactMatrix>> {
        match &self.backend {
            Backend::Vec => Ok((0..self.dim * self.dim)
                .map(|k| {
                    let mut a = ExactMatrix::zeros(self.dim, self.dim);
                    a[(k / self.dim, k % self.dim)] = one();
                    a
                })
                .collect()),
            Backend::Rep(x) => hom_space(x, x),
        }
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.connected_dim()? == 1)
    }
}

/// Dual of `f: A → B` for selfdual `A`, `B`: `f* = C_Aᵀ·fᵀ·G_Bᵀ`.
pub fn dual_between(copairing_a: &ExactMatrix, f: &ExactMatrix, gram_b: &ExactMatrix) -> ExactMatrix {
    copairing_a.transpose().mul(&f.transpose()).mul(&gram_b.transpose())
}

/// Evaluation of `X⊗X` paired with itself: `G2[(a1,a2),(b1,b2)] = G[a2][b1]·G[a1][b2]`.
pub fn tensor_square_gram(g: &ExactMatrix) -> ExactMatrix {
    let n = g.rows();
    let mut out = ExactMatrix::zeros(n * n, n * n);
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                let x = &g[(a2, b1)];
                if x.is_zero() {
                    continue;
                }
                for b2 in 0..n {
                    let y = &g[(a1, b2)];
                    if !y.is_zero() {
                        out[(a1 * n + a2, b1 * n + b2)] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Copairing of `X⊗X`: `C2[(a,c),(d,b)] = C[a][b]·C[c][d]`.
pub fn tensor_square_copairing(c: &ExactMatrix) -> ExactMatrix {
    let n = c.rows();
    let mut out = ExactMatrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let x = &c[(a, b)];
            if x.is_zero() {
                continue;
            }
            for cc in 0..n {
                for d in 0..n {
                    let y = &c[(cc, d)];
                    if !y.is_zero() {
                        out[(a * n + cc, d * n + b)] = x * y;
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn unit_object_invariants() {
        let u = FrobeniusObject::unit();
        let inv = u.invariants().unwrap();
        assert_eq!(inv.mu, int(1));
        assert_eq!(inv.lambda, Some(int(1)));
        assert_eq!(inv.trace_id, int(1));
        assert_eq!(inv.connected_dim, 1);
    }

    #[test]
    fn tensor_square_duality_is_inverse() {
        let g = ExactMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        let c = g.inverse().unwrap();
        let g2 = tensor_square_gram(&g);
        let c2 = tensor_square_copairing(&c);
        assert!(g2.mul(&c2).is_identity());
        assert!(c2.mul(&g2).is_identity());
    }
}
