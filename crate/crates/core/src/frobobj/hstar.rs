use std::sync::Arc;

use num_traits::Zero;

use super::{check_axioms, Backend, FrobeniusObject};
use crate::exact::{ExactMatrix, Rational, Subspace};
use crate::modcat::{validate_hopf, HopfPresentation, Module};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// `H*` as a Frobenius object in `Rep(H)`, with the data used to build it.
#[derive(Clone, Debug)]
pub struct HStar {
    pub object: FrobeniusObject,
    pub hopf: Arc<HopfPresentation>,
    /// The right integral in the dual basis.
    pub integral: Vec<Rational>,
    /// `φ(h) = h·λ`, an isomorphism `H → H*` of modules.
    pub phi: ExactMatrix,
    /// Axiom suite and connectedness of the result.
    pub report: Report,
}

/// Builds `H*` with multiplication dual to `Δ` and comultiplication moved over
/// from `H` along `φ`. The integral is normalized to first nonzero coordinate 1
/// and then multiplied by `scale` if given.
pub fn hstar_from_hopf(h: &Arc<HopfPresentation>, scale: Option<Rational>) -> Result<HStar> {
    let hopf_report = validate_hopf(h);
    if !hopf_report.passed() {
        let failed: Vec<String> = hopf_report.failures().map(|c| c.name.clone()).collect();
        return Err(Error::Precondition(format!("not a Hopf algebra: {}", failed.join(", "))));
    }
    if !h.antipode.mul(&h.antipode).is_identity() {
        return Err(Error::Precondition("the antipode does not square to the identity".into()));
    }
    let n = h.dim();
    let x = Arc::new(Module::dual_regular(h));
    let m = h.comult.transpose();
    let e = h.counit.transpose();

    // λ·e^j = e^j(1)·λ for every j.
    let mut system = ExactMatrix::zeros(0, n);
    for j in 0..n {
        let mut l = ExactMatrix::zeros(n, n);
        for c in 0..n {
            for a in 0..n {
                l[(c, a)] = m[(c, a * n + j)].clone();
            }
        }
        let u = &h.algebra.unit[(j, 0)];
        if !u.is_zero() {
            l = l.sub(&ExactMatrix::identity(n).scale(u));
        }
        system = system.vstack(&l);
    }
    let integrals = Subspace::kernel(&system);
    let mut lambda = integrals
        .basis_vectors()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Degenerate("no nonzero right integral".into()))?;
    let lead = lambda.iter().find(|c| !c.is_zero()).cloned().expect("nonzero kernel vector");
    let factor = scale.map_or_else(|| lead.recip(), |s| s / &lead);
    if factor.is_zero() {
        return Err(Error::Invalid("integral scale must be nonzero".into()));
    }
    for c in &mut lambda {
        *c *= &factor;
    }

    let lam = ExactMatrix::column(lambda.clone());
    let phi = ExactMatrix::from_columns(n, &(0..n).map(|i| x.action[i].mul(&lam).col_vec(0)).collect::<Vec<_>>());
    let phi_inv = phi
        .inverse()
        .map_err(|_| Error::Degenerate("the integral gives a degenerate pairing".into()))?;
    let delta = phi.kron(&phi).mul(&h.comult).mul(&phi_inv);
    let eps = h.counit.mul(&phi_inv);

    let object = FrobeniusObject::new(format!("Fun({})", h.name), Backend::Rep(x), m, delta, e, eps)?;
    if !object.gram().is_invertible() {
        return Err(Error::Degenerate("the Frobenius form on H* is degenerate".into()));
    }
    let mut report = check_axioms(&object);
    report.push(Check::from_bool("connected", object.connected_dim()? == 1));
    Ok(HStar { object, hopf: h.clone(), integral: lambda, phi, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::group::FiniteGroup;
    use crate::modcat::group_algebra;

    fn fun(g: FiniteGroup) -> HStar {
        hstar_from_hopf(&Arc::new(group_algebra(&g)), None).unwrap()
    }

    #[test]
    fn c2_integral_is_the_identity_coefficient() {
        let s = fun(FiniteGroup::cyclic(2));
        assert!(s.report.passed(), "{}", s.report);
        assert_eq!(s.integral, vec![int(1), int(0)]);
    }

    #[test]
    fn scaled_integral_still_frobenius() {
        let h = Arc::new(group_algebra(&FiniteGroup::cyclic(2)));
        let s = hstar_from_hopf(&h, Some(int(3))).unwrap();
        assert!(s.report.passed(), "{}", s.report);
        assert_eq!(s.integral, vec![int(3), int(0)]);
        assert_eq!(s.object.mu(), rat(2, 3));
    }

    #[test]
    fn s3_invariants() {
        let s = fun(FiniteGroup::symmetric3());
        assert!(s.report.passed(), "{}", s.report);
        let inv = s.object.invariants().unwrap();
        assert_eq!(inv.mu, int(6));
        assert_eq!(inv.lambda, Some(int(1)));
        assert_eq!(inv.trace_id, int(6));
        assert_eq!(inv.connected_dim, 1);
    }

    #[test]
    fn doubled_comultiplication_fails_counit_only() {
        let mut f = fun(FiniteGroup::symmetric3()).object;
        f.delta = f.delta.scale(&int(2));
        let r = check_axioms(&f);
        assert!(r.passed_named("Frobenius (left)"));
        assert!(r.passed_named("Frobenius (right)"));
        assert!(r.passed_named("associativity"));
        assert!(!r.passed_named("left counit"));
        assert!(!r.passed_named("right counit"));
    }
}
