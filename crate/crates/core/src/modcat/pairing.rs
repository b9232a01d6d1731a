use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::{hom_space, Module, SubobjectInclusion};
use crate::exact::{ExactMatrix, Rational, Subspace};
use crate::report::Check;
use crate::{Error, Result};

/// Pairings between hom spaces of a module `C` and a simple `X`.
///
/// `hom_xc` is the canonical basis of `Hom(X, C)`; `hom_cx` is the basis of
/// `Hom(C, X)` dual to it (`f_i ∘ g_j = δ_ij id_X`). Dual hom spaces use
/// their canonical bases, and `phi`, `phi_prime` are transposition written in
/// those bases.
#[derive(Clone, Debug, Serialize)]
pub struct PairingData {
    pub hom_xc: Vec<ExactMatrix>,
    pub hom_cx: Vec<ExactMatrix>,
    /// Basis of `Hom(X*, C*)`.
    pub hom_xd_cd: Vec<ExactMatrix>,
    /// Basis of `Hom(C*, X*)`.
    pub hom_cd_xd: Vec<ExactMatrix>,
    /// `kappa[a][j] = κ(a, g_j)` with `ev_C∘(a⊗g) = κ(a, g)·ev_X`.
    pub kappa: ExactMatrix,
    /// `kappa_prime[i][b] = κ'(f_i, b)` with `(f⊗b)∘coev_C = κ'(f, b)·coev_X`.
    pub kappa_prime: ExactMatrix,
    /// `M: Hom(X*, C*) → Hom(X, C)`, `M[j][a] = κ[a][j]`.
    pub m_map: ExactMatrix,
    /// `M': Hom(C*, X*) → Hom(C, X)`, `M'[i][b] = κ'[i][b]`.
    pub m_prime_map: ExactMatrix,
    /// `φ: Hom(X, C) → Hom(C*, X*)`.
    pub phi: ExactMatrix,
    /// `φ': Hom(C, X) → Hom(X*, C*)`.
    pub phi_prime: ExactMatrix,
    pub zigzag: Check,
}

fn scalar_of(m: &ExactMatrix, what: &str) -> Result<Rational> {
    let c = m[(0, 0)].clone();
    if *m != ExactMatrix::identity(m.rows()).scale(&c) {
        return Err(Error::Invalid(format!("{what} is not a multiple of the identity")));
    }
    Ok(c)
}

/// Coordinates of `t` in a basis of matrices.
fn coordinates(basis: &[ExactMatrix], t: &ExactMatrix) -> Result<Vec<Rational>> {
    let len = t.rows() * t.cols();
    let cols: Vec<Vec<Rational>> = basis.iter().map(ExactMatrix::flatten).collect();
    let sol = ExactMatrix::from_columns(len, &cols).solve(&ExactMatrix::column(t.flatten()))?;
    Ok(sol.col_vec(0))
}

fn matrix_of<F>(domain: &[ExactMatrix], codomain: &[ExactMatrix], f: F) -> Result<ExactMatrix>
where
    F: Fn(&ExactMatrix) -> ExactMatrix,
{
    let cols = domain
        .iter()
        .map(|d| coordinates(codomain, &f(d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactMatrix::from_columns(codomain.len(), &cols))
}

fn kappa_prime(f: &ExactMatrix, b: &ExactMatrix) -> Result<Rational> {
    scalar_of(&f.mul(&b.transpose()), "(f⊗g)∘coev")
}

pub fn pairing_data(c: &Module, x: &Module) -> Result<PairingData> {
    if hom_space(x, x)?.len() != 1 {
        return Err(Error::Invalid(format!("End({}) is not one-dimensional", x.name)));
    }
    let (cd, xd) = (c.dual()?, x.dual()?);
    let hom_xc = hom_space(x, c)?;
    let hom_cx_canonical = hom_space(c, x)?;
    let hom_xd_cd = hom_space(&xd, &cd)?;
    let hom_cd_xd = hom_space(&cd, &xd)?;
    let k = hom_xc.len();
    if hom_cx_canonical.len() != k || hom_xd_cd.len() != k || hom_cd_xd.len() != k {
        return Err(Error::Invalid("hom spaces have different dimensions (C not semisimple?)".into()));
    }

    // dual basis: f_i∘g_j = δ_ij, read off the (0,0) entry since X is simple
    let mut pairing = ExactMatrix::zeros(k, k);
    for (r, h) in hom_cx_canonical.iter().enumerate() {
        for (j, g) in hom_xc.iter().enumerate() {
            pairing[(r, j)] = scalar_of(&h.mul(g), "f∘g")?;
        }
    }
    let inv = pairing.inverse().map_err(|_| Error::Invalid("composition pairing is degenerate".into()))?;
    let hom_cx: Vec<ExactMatrix> = (0..k)
        .map(|i| {
            hom_cx_canonical
                .iter()
                .enumerate()
                .filter(|(r, _)| !inv[(i, *r)].is_zero())
                .fold(ExactMatrix::zeros(x.dim, c.dim), |acc, (r, h)| acc.add(&h.scale(&inv[(i, r)])))
        })
        .collect();

    let mut kappa = ExactMatrix::zeros(k, k);
    for (a, f) in hom_xd_cd.iter().enumerate() {
        for (j, g) in hom_xc.iter().enumerate() {
            kappa[(a, j)] = scalar_of(&f.transpose().mul(g), "ev∘(f⊗g)")?;
        }
    }
    let mut kp = ExactMatrix::zeros(k, k);
    for (i, f) in hom_cx.iter().enumerate() {
        for (b, g) in hom_cd_xd.iter().enumerate() {
            kp[(i, b)] = kappa_prime(f, g)?;
        }
    }
    let m_map = kappa.transpose();
    let m_prime_map = kp.clone();
    let phi = matrix_of(&hom_xc, &hom_cd_xd, ExactMatrix::transpose)?;
    let phi_prime = matrix_of(&hom_cx, &hom_xd_cd, ExactMatrix::transpose)?;
    let round = m_map.mul(&phi_prime).mul(&m_prime_map).mul(&phi);
    let zigzag = Check::equal("M∘φ'∘M'∘φ = id", &round, &ExactMatrix::identity(k));
    Ok(PairingData { hom_xc, hom_cx, hom_xd_cd, hom_cd_xd, kappa, kappa_prime: kp, m_map, m_prime_map, phi, phi_prime, zigzag })
}

/// Compares `M'(Hom(A*, X*)∘i*)` with `Hom(A, X)∘p` inside `Lin(C, X)` for
/// each supplied simple `X`.
pub fn categorical_rigid_invariant(c: &Module, sub: &SubobjectInclusion, simples: &[Module]) -> Result<bool> {
    sub.check_retraction()?;
    let a = match &sub.module {
        Some(m) if m.dim == sub.dim => {
            let action = c.action.iter().map(|r| sub.p.mul(r).mul(&sub.i)).collect();
            Arc::new(Module { action, ..(**m).clone() })
        }
        _ => {
            let action = c.action.iter().map(|r| sub.p.mul(r).mul(&sub.i)).collect();
            let mut m = Module::over_algebra("A", c.algebra.clone(), action)?;
            m.hopf = c.hopf.clone();
            Arc::new(m)
        }
    };
    let ad = a.dual()?;
    let i_star = sub.i.transpose();
    for x in simples {
        let pd = pairing_data(c, x)?;
        let len = x.dim * c.dim;
        let lhs: Vec<Vec<Rational>> = hom_space(&ad, &x.dual()?)?
            .iter()
            .map(|h| {
                let b = h.mul(&i_star);
                let mut out = ExactMatrix::zeros(x.dim, c.dim);
                for f in &pd.hom_cx {
                    out = out.add(&f.scale(&kappa_prime(f, &b)?));
                }
                Ok(out.flatten())
            })
            .collect::<Result<_>>()?;
        let rhs: Vec<Vec<Rational>> = hom_space(&a, x)?.iter().map(|h| h.mul(&sub.p).flatten()).collect();
        if Subspace::span_vectors(len, &lhs) != Subspace::span_vectors(len, &rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::group::FiniteGroup;
    use crate::modcat::{group_algebra, subobject_from_image};

    #[test]
    fn unit_pairs_with_itself() {
        let h = Arc::new(group_algebra(&FiniteGroup::cyclic(3)));
        let one = Module::trivial(&h);
        let pd = pairing_data(&one, &one).unwrap();
        assert!(pd.kappa.is_identity());
        assert!(pd.kappa_prime.is_identity());
        assert!(pd.zigzag.passed);
    }

    #[test]
    fn rigid_invariance_on_fun_c2() {
        let h = Arc::new(group_algebra(&FiniteGroup::cyclic(2)));
        let fun = Arc::new(Module::dual_regular(&h));
        let simples = [
            Module::trivial(&h),
            Module::character("sign", &h, &[int(1), int(-1)]).unwrap(),
        ];
        let full = SubobjectInclusion::identity(2);
        assert!(categorical_rigid_invariant(&fun, &full, &simples).unwrap());

        let constants = Subspace::span_vectors(2, &[vec![int(1), int(1)]]);
        let avg = subobject_from_image(&fun, &constants).unwrap();
        assert_eq!(avg.p, ExactMatrix::row(vec![rat(1, 2), rat(1, 2)]));
        assert!(categorical_rigid_invariant(&fun, &avg, &simples).unwrap());

        let skewed = SubobjectInclusion::linear(avg.i.clone(), ExactMatrix::row(vec![int(1), int(0)])).unwrap();
        assert!(!categorical_rigid_invariant(&fun, &skewed, &simples).unwrap());

        let broken = SubobjectInclusion { p: ExactMatrix::row(vec![int(1), int(1)]), ..avg.clone() };
        assert!(categorical_rigid_invariant(&fun, &broken, &simples).is_err());
    }
}
