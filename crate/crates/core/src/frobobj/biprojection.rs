use num_traits::Zero;
use serde::Serialize;

use super::{dual_between, Backend, FrobeniusObject};
use crate::exact::{ExactMatrix, Rational, Subspace};
use crate::group::{FiniteGroup, Subgroup};
use crate::modcat::{is_intertwiner, SubobjectInclusion};
use crate::report::{Check, Report};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Inclusion(SubobjectInclusion),
    /// Built by a formula rather than from a subalgebra, e.g. `b_AB`.
    Derived(String),
}

/// A selfdual idempotent `b = i∘i*`.
#[derive(Clone, Debug, Serialize)]
pub struct Biprojection {
    pub label: String,
    pub b: ExactMatrix,
    #[serde(skip)]
    pub provenance: Provenance,
    #[serde(with = "crate::exact::serde_rational")]
    pub trace: Rational,
    /// Dimension of the image, i.e. of the subobject.
    pub dim: usize,
}

impl Biprojection {
    pub fn derived(f: &FrobeniusObject, label: impl Into<String>, b: ExactMatrix, formula: &str) -> Self {
        let trace = f.trace(&b);
        let dim = b.rank();
        Self { label: label.into(), b, provenance: Provenance::Derived(formula.into()), trace, dim }
    }

    pub fn image(&self) -> Subspace {
        Subspace::image(&self.b)
    }

    pub fn inclusion(&self) -> Option<&SubobjectInclusion> {
        match &self.provenance {
            Provenance::Inclusion(inc) => Some(inc),
            Provenance::Derived(_) => None,
        }
    }
}

/// Every condition for `i` to present a Frobenius subalgebra, by name.
pub fn inclusion_report(f: &FrobeniusObject, inc: &SubobjectInclusion) -> Report {
    let mut r = Report::new();
    let off = ExactMatrix::identity(f.dim).sub(&inc.i.mul(&inc.p));
    r.push(Check::from_bool("p∘i = id", inc.p.mul(&inc.i).is_identity()));
    r.push(Check::zero("closed under multiplication", &off.mul(&f.m).mul(&inc.i.kron(&inc.i))));
    r.push(Check::zero("contains the unit", &off.mul(&f.e)));
    let istar = match f.inclusion_dual(inc) {
        Ok(s) => {
            r.push(Check::pass("induced form nondegenerate"));
            s
        }
        Err(_) => {
            r.push(Check::fail("induced form nondegenerate", None));
            return r;
        }
    };
    r.push(Check::from_bool("i*∘i = id", istar.mul(&inc.i).is_identity()));
    let istar_star = dual_between(&f.copairing(), &istar, &f.induced_gram(inc));
    r.push(Check::equal("i** = i", &istar_star, &inc.i));
    if let (Backend::Rep(x), Some(a)) = (&f.backend, &inc.module) {
        r.push(Check::from_bool("i is a morphism", is_intertwiner(a, x, &inc.i)));
        r.push(Check::from_bool("i* is a morphism", is_intertwiner(x, a, &istar)));
    }
    let b = inc.i.mul(&istar);
    r.push(Check::equal("b is idempotent", &b.mul(&b), &b));
    r.push(Check::equal("b is selfdual", &f.star(&b), &b));
    r
}

/// `b = i∘i*` after verifying the inclusion; each failed condition is named.
pub fn biprojection(f: &FrobeniusObject, inc: &SubobjectInclusion, label: impl Into<String>) -> Result<Biprojection> {
    let r = inclusion_report(f, inc);
    if !r.passed_named("induced form nondegenerate") {
        return Err(Error::Degenerate("the form restricted to the subobject is degenerate".into()));
    }
    if !r.passed() {
        return Err(Error::NotSubalgebra(r.failures().map(|c| c.name.clone()).collect()));
    }
    let b = inc.i.mul(&f.inclusion_dual(inc)?);
    let trace = f.trace(&b);
    Ok(Biprojection { label: label.into(), b, provenance: Provenance::Inclusion(inc.clone()), trace, dim: inc.dim })
}

/// `b_X = id`.
pub fn full_biprojection(f: &FrobeniusObject) -> Result<Biprojection> {
    biprojection(f, &f.split(&Subspace::full(f.dim))?, "X")
}

/// `b_1`, which equals `μ⁻¹·e∘ε`.
pub fn unit_biprojection(f: &FrobeniusObject) -> Result<Biprojection> {
    biprojection(f, &f.unit_inclusion()?, "1")
}

/// Functions on `G` constant on each right coset `Kx`, in the dual basis.
pub fn coset_space(g: &FiniteGroup, k: &Subgroup) -> Subspace {
    let indicators: Vec<Vec<Rational>> = g
        .right_cosets(k)
        .into_iter()
        .map(|coset| {
            let mut v = vec![Rational::zero(); g.order()];
            for y in coset {
                v[y] = Rational::from_integer(1.into());
            }
            v
        })
        .collect();
    Subspace::span_vectors(g.order(), &indicators)
}

/// The subobject of [`coset_space`] inside `Fun(G)`.
pub fn coset_subalgebra(fun: &FrobeniusObject, g: &FiniteGroup, k: &Subgroup) -> Result<SubobjectInclusion> {
    if !g.is_subgroup(k) {
        return Err(Error::Invalid(format!("{k:?} is not a subgroup of {}", g.name)));
    }
    if fun.dim != g.order() {
        return Err(Error::Shape(format!("Fun({}) must have dimension {}", g.name, g.order())));
    }
    fun.split(&coset_space(g, k))
}

/// `b ≤ b'` iff `b∘b' = b = b'∘b`.
pub fn leq(a: &Biprojection, b: &Biprojection) -> bool {
    a.b.mul(&b.b) == a.b && b.b.mul(&a.b) == a.b
}

/// Two inclusions are equivalent when `i₁ = i₂∘u` for an isomorphism `u`,
/// which is then `i₂*∘i₁`.
pub fn equivalent(f: &FrobeniusObject, a: &SubobjectInclusion, b: &SubobjectInclusion) -> Result<bool> {
    if a.dim != b.dim {
        return Ok(false);
    }
    let u = f.inclusion_dual(b)?.mul(&a.i);
    Ok(u.is_invertible() && b.i.mul(&u) == a.i)
}

/// The intersection of the images, split again and verified as a subalgebra.
pub fn meet(f: &FrobeniusObject, a: &Biprojection, b: &Biprojection) -> Result<Biprojection> {
    let fail = |reason: String| Error::MeetFailure { left: a.label.clone(), right: b.label.clone(), reason };
    let image = a.image().intersect(&b.image())?;
    let inc = f.split(&image).map_err(|e| fail(e.to_string()))?;
    let m = biprojection(f, &inc, format!("{}∧{}", a.label, b.label)).map_err(|e| fail(e.to_string()))?;
    if !leq(&m, a) || !leq(&m, b) {
        return Err(fail("the intersection is not below both sides".into()));
    }
    Ok(m)
}

/// The selfdual idempotent onto `A + B`. The sum need not be a subalgebra.
pub fn sum_projection(f: &FrobeniusObject, a: &Biprojection, b: &Biprojection) -> Result<Biprojection> {
    let image = a.image().sum(&b.image())?;
    let inc = f.split(&image)?;
    let b_sum = inc.i.mul(&f.inclusion_dual(&inc)?);
    Ok(Biprojection::derived(f, format!("{}+{}", a.label, b.label), b_sum, "i_{A+B}∘i_{A+B}*"))
}

#[derive(Clone, Debug)]
pub struct JoinReport {
    /// Index into the context.
    pub join: usize,
    pub meet: Biprojection,
    pub sum: Biprojection,
    pub checks: Report,
}

/// Least upper bound of `a` and `b` among `context`, with the trace identity
/// and order relations of `b_{A+B}`.
pub fn join(f: &FrobeniusObject, a: &Biprojection, b: &Biprojection, context: &[Biprojection]) -> Result<JoinReport> {
    let uppers: Vec<usize> = (0..context.len())
        .filter(|&c| leq(a, &context[c]) && leq(b, &context[c]))
        .collect();
    let join = uppers
        .iter()
        .copied()
        .find(|&c| uppers.iter().all(|&d| leq(&context[c], &context[d])))
        .ok_or_else(|| Error::Invalid(format!("{} and {} have no least upper bound in the context", a.label, b.label)))?;
    let meet = meet(f, a, b)?;
    let sum = sum_projection(f, a, b)?;
    let mut checks = Report::new();
    checks.push(Check::from_bool(
        "tr(b_{A+B}) = tr(b_A) + tr(b_B) - tr(b_{A∩B})",
        sum.trace == &a.trace + &b.trace - &meet.trace,
    ));
    checks.push(Check::from_bool("b_{A∩B} ≤ b_A", leq(&meet, a)));
    checks.push(Check::from_bool("b_{A∩B} ≤ b_B", leq(&meet, b)));
    checks.push(Check::from_bool("b_A ≤ b_{A+B}", leq(a, &sum)));
    checks.push(Check::from_bool("b_B ≤ b_{A+B}", leq(b, &sum)));
    checks.push(Check::from_bool("b_{A+B} ≤ join", leq(&sum, &context[join])));
    let tr_ab = f.trace(&a.b.mul(&b.b));
    if !tr_ab.is_zero() {
        let b_ab = super::convolution(f, &a.b, &b.b).scale(&(f.mu() / &tr_ab));
        let b_ab = Biprojection::derived(f, format!("{}{}", a.label, b.label), b_ab, "μ/tr(b_A∘b_B)·b_A∗b_B");
        checks.push(Check::from_bool("b_{A+B} ≤ b_{AB}", leq(&sum, &b_ab)));
    }
    Ok(JoinReport { join, meet, sum, checks })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exact::{int, rat};
    use crate::frobobj::hstar_from_hopf;
    use crate::frobvec::builtins::{ben02, ben02_subspaces};
    use crate::modcat::group_algebra;

    fn fun_s3() -> (FrobeniusObject, FiniteGroup) {
        let g = FiniteGroup::symmetric3();
        let s = hstar_from_hopf(&Arc::new(group_algebra(&g)), None).unwrap();
        (s.object, g)
    }

    fn coset(f: &FrobeniusObject, g: &FiniteGroup, gens: &[usize], label: &str) -> Biprojection {
        let k = g.generate(gens.iter().copied());
        biprojection(f, &coset_subalgebra(f, g, &k).unwrap(), label).unwrap()
    }

    fn transpositions(g: &FiniteGroup) -> Vec<usize> {
        (1..6).filter(|&x| g.mul(x, x) == 0).collect()
    }

    #[test]
    fn full_and_unit() {
        let (f, _) = fun_s3();
        assert!(full_biprojection(&f).unwrap().b.is_identity());
        let b1 = unit_biprojection(&f).unwrap();
        assert_eq!(b1.b, f.e.mul(&f.eps).scale(&f.mu().recip()));
        assert_eq!(b1.trace, int(1));
    }

    #[test]
    fn coset_traces_are_indices() {
        let (f, g) = fun_s3();
        let c3 = (1..6).find(|&x| g.mul(x, x) != 0).unwrap();
        assert_eq!(coset(&f, &g, &[c3], "C3").trace, int(2));
        let t = transpositions(&g);
        assert_eq!(coset(&f, &g, &[t[0]], "C2").trace, int(3));
        assert!(coset(&f, &g, &[], "1").b.is_identity());
        assert_eq!(coset(&f, &g, &[c3, t[0]], "G").trace, int(1));
    }

    #[test]
    fn meets_and_joins_in_s3() {
        let (f, g) = fun_s3();
        let t = transpositions(&g);
        let a = coset(&f, &g, &[t[0]], "A");
        let b = coset(&f, &g, &[t[1]], "B");
        let m = meet(&f, &a, &b).unwrap();
        assert_eq!(m.b, unit_biprojection(&f).unwrap().b);
        let context = vec![unit_biprojection(&f).unwrap(), a.clone(), b.clone(), full_biprojection(&f).unwrap()];
        let j = join(&f, &a, &b, &context).unwrap();
        assert_eq!(j.join, 3);
        assert_eq!(j.sum.trace, int(5));
        assert!(j.checks.passed(), "{}", j.checks);
        assert_eq!(f.trace(&a.b.mul(&b.b)), rat(3, 2));
    }

    #[test]
    fn ben02_meet_is_degenerate() {
        let f = FrobeniusObject::from_vec_algebra(&ben02()).unwrap();
        let (v, w) = ben02_subspaces();
        let bv = biprojection(&f, &f.split(&v).unwrap(), "V").unwrap();
        let bw = biprojection(&f, &f.split(&w).unwrap(), "W").unwrap();
        match meet(&f, &bv, &bw) {
            Err(Error::MeetFailure { left, right, reason }) => {
                assert_eq!((left.as_str(), right.as_str()), ("V", "W"));
                assert!(reason.contains("degenerate"), "{reason}");
            }
            other => panic!("expected a meet failure, got {other:?}"),
        }
    }

    #[test]
    fn equivalence_matches_biprojection_equality() {
        let (f, g) = fun_s3();
        let t = transpositions(&g);
        let inc = coset_subalgebra(&f, &g, &g.generate([t[0]])).unwrap();
        let reordered = SubobjectInclusion {
            dim: inc.dim,
            module: None,
            i: inc.i.select_cols(&[2, 1, 0]),
            p: inc.p.select_rows(&[2, 1, 0]),
        };
        assert!(equivalent(&f, &inc, &reordered).unwrap());
        let other = coset_subalgebra(&f, &g, &g.generate([t[1]])).unwrap();
        assert!(!equivalent(&f, &inc, &other).unwrap());
    }
}
