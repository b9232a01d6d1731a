use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{convolution, dual_between, Biprojection, FrobeniusObject, PivotalData};
use crate::exact::{ExactMatrix, Rational, Whisker};
use crate::report::{Check, Report};
use crate::{Error, Result};

fn exchange_one(f: &FrobeniusObject, g: &ExactMatrix, label: &str) -> Report {
    let n = f.dim;
    let mut r = Report::new();
    let dg = f.delta.mul(g);
    let left = dg.through(&[Whisker::new(1, g, n)]);
    let middle = f.delta.through(&[Whisker::new(n, g, 1), Whisker::new(1, g, n)]);
    let right = dg.through(&[Whisker::new(n, g, 1)]);
    r.push(Check::equal(format!("exchange {label}: (g⊗id)δg = (g⊗g)δ"), &left, &middle));
    r.push(Check::equal(format!("exchange {label}: (id⊗g)δg = (g⊗g)δ"), &right, &middle));
    let nn = n * n;
    let gm = g.mul(&f.m);
    let left = ExactMatrix::chain(nn, &[Whisker::new(1, g, n)]).through(&[Whisker::new(1, &gm, 1)]);
    let middle = ExactMatrix::chain(nn, &[Whisker::new(n, g, 1), Whisker::new(1, g, n), Whisker::new(1, &f.m, 1)]);
    let right = ExactMatrix::chain(nn, &[Whisker::new(n, g, 1)]).through(&[Whisker::new(1, &gm, 1)]);
    r.push(Check::equal(format!("exchange {label}: g m (g⊗id) = m (g⊗g)"), &left, &middle));
    r.push(Check::equal(format!("exchange {label}: g m (id⊗g) = m (g⊗g)"), &right, &middle));
    r
}

/// Exchange relations for both idempotents, and
/// `μ·(b₁∗b₂)∘b_i = tr(b₁∘b₂)·b_i` for `i = 1, 2`.
pub fn exchange_check(f: &FrobeniusObject, g1: &Biprojection, g2: &Biprojection) -> Report {
    let mut r = exchange_one(f, &g1.b, &g1.label);
    if g2.b != g1.b {
        r.extend(exchange_one(f, &g2.b, &g2.label));
    }
    let conv = convolution(f, &g1.b, &g2.b).scale(&f.mu());
    let tr = f.trace(&g1.b.mul(&g2.b));
    for g in [g1, g2] {
        r.push(Check::equal(
            format!("μ(b₁∗b₂)∘{0} = tr(b₁∘b₂)·{0}", g.label),
            &conv.mul(&g.b),
            &g.b.scale(&tr),
        ));
    }
    r
}

#[derive(Clone, Debug)]
pub struct LandauReport {
    pub checks: Report,
    /// `tr(g₁∘g₂)`.
    pub trace_product: Rational,
    /// `b_AB`, absent when `tr(g₁∘g₂) = 0`.
    pub b_ab: Option<Biprojection>,
}

/// `μ·tr_α(g₁∗g₂) = tr_α(g₁)·tr_α(g₂)`, and the idempotent
/// `b_AB = μ/tr(g₁∘g₂)·g₁∗g₂` with its trace and absorption identities.
pub fn landau_check(
    f: &FrobeniusObject,
    g1: &Biprojection,
    g2: &Biprojection,
    alpha: &PivotalData,
) -> Result<LandauReport> {
    if !f.is_connected()? {
        return Err(Error::Precondition(format!("{} is not connected", f.name)));
    }
    let mu = f.mu();
    let conv = convolution(f, &g1.b, &g2.b);
    let mut checks = Report::new();
    checks.push(Check::from_bool(
        "μ·tr_α(g₁∗g₂) = tr_α(g₁)·tr_α(g₂)",
        &mu * f.trace_with(alpha, &conv) == f.trace_with(alpha, &g1.b) * f.trace_with(alpha, &g2.b),
    ));
    let trace_product = f.trace(&g1.b.mul(&g2.b));
    if trace_product.is_zero() {
        checks.push(Check::pass("b_AB").with_note("skipped: tr(g₁∘g₂) = 0"));
        return Ok(LandauReport { checks, trace_product, b_ab: None });
    }
    let b = conv.scale(&(&mu / &trace_product));
    let b_ab = Biprojection::derived(f, format!("{}{}", g1.label, g2.label), b, "μ/tr(g₁∘g₂)·g₁∗g₂");
    checks.push(Check::equal("b_AB is idempotent", &b_ab.b.mul(&b_ab.b), &b_ab.b));
    checks.push(Check::from_bool(
        "tr(b_AB) = tr(g₁)·tr(g₂)/tr(g₁∘g₂)",
        b_ab.trace == &g1.trace * &g2.trace / &trace_product,
    ));
    for g in [g1, g2] {
        checks.push(Check::equal(format!("b_AB∘{0} = {0}", g.label), &b_ab.b.mul(&g.b), &g.b));
        checks.push(Check::equal(format!("{0}∘b_AB = {0}", g.label), &g.b.mul(&b_ab.b), &g.b));
    }
    Ok(LandauReport { checks, trace_product, b_ab: Some(b_ab) })
}

/// The number `p/√q`, never evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalCosine {
    #[serde(with = "crate::exact::serde_rational")]
    pub p: Rational,
    #[serde(with = "crate::exact::serde_rational")]
    pub q: Rational,
}

impl FormalCosine {
    /// `p/√q < 1/2`, decided by signs and squares.
    pub fn cos_less_than_half(&self) -> bool {
        self.p.is_negative() || Rational::from_integer(4.into()) * &self.p * &self.p < self.q
    }

    pub fn is_one(&self) -> bool {
        self.p.is_positive() && &self.p * &self.p == self.q
    }
}

impl fmt::Display for FormalCosine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/sqrt({})", self.p, self.q)
    }
}

/// Cosine of the angle between `a − meet` and `b − meet` in the trace pairing.
pub fn formal_angle(f: &FrobeniusObject, a: &Biprojection, b: &Biprojection, meet: &Biprojection) -> Result<FormalCosine> {
    let va = a.b.sub(&meet.b);
    let vb = b.b.sub(&meet.b);
    let (ta, tb) = (f.trace(&va), f.trace(&vb));
    if !ta.is_positive() || !tb.is_positive() {
        return Err(Error::Precondition(format!(
            "tr({} − meet) = {ta} and tr({} − meet) = {tb} must be positive",
            a.label, b.label
        )));
    }
    Ok(FormalCosine { p: f.trace(&va.mul(&vb)), q: ta * tb })
}

/// The four conditions for `φ: f → g` to be a Frobenius algebra morphism,
/// and, when they hold, that `φ*` inverts `φ`.
pub fn frobenius_morphism_check(f: &FrobeniusObject, g: &FrobeniusObject, phi: &ExactMatrix) -> Report {
    let mut r = Report::new();
    if phi.shape() != (g.dim, f.dim) {
        r.push(Check::fail("shape", None).with_note(format!("{:?} is not {}x{}", phi.shape(), g.dim, f.dim)));
        return r;
    }
    let pp = phi.kron(phi);
    r.push(Check::equal("multiplication", &phi.mul(&f.m), &g.m.mul(&pp)));
    r.push(Check::equal("unit", &phi.mul(&f.e), &g.e));
    r.push(Check::equal("comultiplication", &pp.mul(&f.delta), &g.delta.mul(phi)));
    r.push(Check::equal("counit", &g.eps.mul(phi), &f.eps));
    if r.passed() {
        let star = dual_between(&f.copairing(), phi, &g.gram());
        r.push(Check::from_bool(
            "φ is invertible with inverse φ*",
            star.mul(phi).is_identity() && phi.mul(&star).is_identity(),
        ));
    }
    r
}

/// `tr_α(b) > 0` for every nonzero probe and for the identity.
pub fn weak_positivity_probe(f: &FrobeniusObject, alpha: &PivotalData, probes: &[Biprojection]) -> Report {
    let mut r = Report::new();
    let id = ExactMatrix::identity(f.dim);
    let t = f.trace_with(alpha, &id);
    r.push(Check::from_bool("tr_α(id) > 0", t.is_positive()).with_note(t.to_string()));
    for b in probes.iter().filter(|b| !b.b.is_zero()) {
        let t = f.trace_with(alpha, &b.b);
        r.push(Check::from_bool(format!("tr_α({}) > 0", b.label), t.is_positive()).with_note(t.to_string()));
    }
    r
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exact::{int, rat};
    use crate::frobobj::{biprojection, coset_subalgebra, full_biprojection, hstar_from_hopf, unit_biprojection};
    use crate::group::FiniteGroup;
    use crate::modcat::group_algebra;

    struct S3 {
        f: FrobeniusObject,
        t: Vec<Biprojection>,
        c3: Biprojection,
        unit: Biprojection,
    }

    fn s3() -> S3 {
        let g = FiniteGroup::symmetric3();
        let f = hstar_from_hopf(&Arc::new(group_algebra(&g)), None).unwrap().object;
        let bip = |gens: &[usize], label: &str| {
            biprojection(&f, &coset_subalgebra(&f, &g, &g.generate(gens.iter().copied())).unwrap(), label).unwrap()
        };
        let t = (1..6)
            .filter(|&x| g.mul(x, x) == 0)
            .enumerate()
            .map(|(k, x)| bip(&[x], &format!("T{k}")))
            .collect();
        let c3 = bip(&[(1..6).find(|&x| g.mul(x, x) != 0).unwrap()], "C3");
        let unit = unit_biprojection(&f).unwrap();
        S3 { f, t, c3, unit }
    }

    #[test]
    fn landau_on_s3() {
        let s = s3();
        let r = landau_check(&s.f, &s.t[0], &s.c3, &PivotalData::identity()).unwrap();
        assert!(r.checks.passed(), "{}", r.checks);
        assert_eq!(r.trace_product, int(1));
        assert_eq!(r.b_ab.unwrap().trace, int(6));
        // g₁ = g₂ = b_Y gives tr(b_Y) = μ·λ_Y.
        let r = landau_check(&s.f, &s.c3, &s.c3, &PivotalData::identity()).unwrap();
        assert!(r.checks.passed());
        assert_eq!(r.b_ab.unwrap().b, s.c3.b);
    }

    #[test]
    fn exchange_on_s3_and_a_violation() {
        let s = s3();
        assert!(exchange_check(&s.f, &s.unit, &s.unit).passed());
        assert!(exchange_check(&s.f, &s.t[0], &s.c3).passed());
        let mut e00 = ExactMatrix::zeros(6, 6);
        e00[(0, 0)] = int(1);
        let bad = Biprojection::derived(&s.f, "e00", e00, "rank one");
        assert!(!exchange_check(&s.f, &s.t[0], &bad).passed());
    }

    #[test]
    fn transposition_angles() {
        let s = s3();
        let c = formal_angle(&s.f, &s.t[0], &s.t[1], &s.unit).unwrap();
        assert_eq!(c, FormalCosine { p: rat(1, 2), q: int(4) });
        assert!(c.cos_less_than_half());
        assert!(formal_angle(&s.f, &s.t[0], &s.t[0], &s.unit).unwrap().is_one());
        assert!(formal_angle(&s.f, &s.unit, &s.t[0], &s.unit).is_err());
    }

    #[test]
    fn morphism_checks() {
        let s = s3();
        let id = ExactMatrix::identity(6);
        assert!(frobenius_morphism_check(&s.f, &s.f, &id).passed());
        let r = frobenius_morphism_check(&s.f, &s.f, &id.scale(&int(2)));
        assert!(!r.passed_named("unit"));
        let inc = s.c3.inclusion().unwrap();
        let a = s.f.induced(inc).unwrap();
        let r = frobenius_morphism_check(&a, &s.f, &inc.i);
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["comultiplication"]);
    }

    #[test]
    fn positivity() {
        let s = s3();
        let mut probes = s.t.clone();
        probes.extend([s.c3.clone(), s.unit.clone(), full_biprojection(&s.f).unwrap()]);
        assert!(weak_positivity_probe(&s.f, &PivotalData::identity(), &probes).passed());
        let neg = PivotalData::scalar(int(-1));
        let r = weak_positivity_probe(&s.f, &neg, std::slice::from_ref(&s.unit));
        assert!(!r.passed_named("tr_α(1) > 0"));
    }

    #[test]
    fn convolution_and_fourier() {
        let s = s3();
        let f = &s.f;
        let id = ExactMatrix::identity(6);
        assert_eq!(convolution(f, &id, &id), id);
        let basis = f.endomorphism_basis().unwrap();
        assert_eq!(basis.len(), 6);
        let combo = |coeffs: &[i64]| {
            basis.iter().zip(coeffs).fold(ExactMatrix::zeros(6, 6), |acc, (m, &c)| acc.add(&m.scale(&int(c))))
        };
        let a = combo(&[3, -1, 0, 2, 5, -4]);
        let b = combo(&[-2, 7, 1, 0, -3, 1]);
        assert_eq!(convolution(f, &a, &id).scale(&f.mu()), id.scale(&f.trace(&a)));
        let fa = crate::frobobj::fourier(f, &a);
        assert_eq!(crate::frobobj::fourier_inverse(f, &fa), a);
        let fb = crate::frobobj::fourier(f, &b);
        assert_eq!(crate::frobobj::fourier_inverse(f, &fa.mul(&fb)), convolution(f, &a, &b));
        assert!(crate::frobobj::fourier(f, &ExactMatrix::zeros(6, 6)).is_zero());
        let b1 = &s.unit.b;
        assert_eq!(convolution(f, b1, b1), b1.scale(&rat(1, 6)));
    }
}
