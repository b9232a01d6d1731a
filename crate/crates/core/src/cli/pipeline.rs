//! The verify and lattice pipelines and the report they produce.

use std::fmt;

use serde::Serialize;

use super::spec::{Kind, Presentation};
use super::CliError;
use crate::exact::{fmt_rational, ExactMatrix, Subspace};
use crate::frobobj::{check_axioms, hstar_from_hopf, inclusion_report, FrobeniusInvariants, FrobeniusObject};
use crate::frobvec::{is_frobenius_subalgebra, rigidity_map, subspace_flags, validate_algebra, VecFrobeniusAlgebra, VecSubalgebra};
use crate::lattice::{angles_csv, build, finiteness_witness, pair_identities, to_dot, BiprojectionLattice, LatticeAnalytics};
use crate::modcat::validate_hopf;
use crate::report::{Check, Report};
use crate::Error;

/// Everything a run found. Deterministic: no timings, paths or hashes.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub name: String,
    pub backend: String,
    pub passed: bool,
    pub sections: Vec<Section>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<FrobeniusInvariants>,
    /// The rigidity map in the stored basis, rows of `"p/q"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rigidity: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub subspaces: Vec<SubspaceLine>,
    /// Facts worth reporting that do not fail the run.
    pub findings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubspaceLine {
    pub label: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unital_subalgebra: Option<bool>,
    pub nondegenerate: bool,
    pub rigid_invariant: bool,
    /// A basis of the image under the rigidity map.
    pub rigid_image: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeSummary {
    pub elements: Vec<ElementLine>,
    /// Covering pairs `[lower, upper]`.
    pub covers: Vec<[usize; 2]>,
    pub top: usize,
    pub bottom: usize,
    pub analytics: LatticeAnalytics,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub angles: Vec<AngleLine>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementLine {
    pub label: String,
    pub trace: String,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AngleLine {
    pub z: usize,
    pub a: usize,
    pub b: usize,
    pub cosine: String,
    pub cos_lt_half: bool,
}

impl RunReport {
    fn new(command: &str, p: &Presentation) -> Self {
        let backend = match p.kind {
            Kind::Vec { .. } => "vec",
            Kind::Rep { .. } => "rep",
        };
        Self {
            command: command.into(),
            name: p.name.clone(),
            backend: backend.into(),
            passed: true,
            sections: Vec::new(),
            invariants: None,
            rigidity: None,
            subspaces: Vec::new(),
            findings: Vec::new(),
            lattice: None,
        }
    }

    fn section(&mut self, name: impl Into<String>, report: Report) {
        let passed = report.passed();
        self.passed &= passed;
        self.sections.push(Section { name: name.into(), passed, checks: report.checks });
    }

    fn failure(&mut self, name: &str, e: &Error) {
        let mut r = Report::new();
        r.push(Check::fail(name, None).with_note(e.to_string()));
        self.section(name, r);
    }

    pub fn section_named(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} ({})", self.command, self.name, self.backend)?;
        for s in &self.sections {
            let failed = s.checks.iter().filter(|c| !c.passed).count();
            writeln!(f, "  {} {}: {} checks, {} failed", if s.passed { "ok  " } else { "FAIL" }, s.name, s.checks.len(), failed)?;
            for c in s.checks.iter().filter(|c| !c.passed) {
                write!(f, "       FAIL {}", c.name)?;
                if let Some(w) = &c.witness {
                    write!(f, " at {w:?}")?;
                }
                if let Some(n) = &c.note {
                    write!(f, " ({n})")?;
                }
                writeln!(f)?;
            }
        }
        if let Some(inv) = &self.invariants {
            let lambda = inv.lambda.as_ref().map_or("-".into(), fmt_rational);
            writeln!(
                f,
                "  μ = {}, λ = {lambda}, tr(id) = {}, dim Hom(1, X) = {}",
                fmt_rational(&inv.mu),
                fmt_rational(&inv.trace_id),
                inv.connected_dim
            )?;
        }
        for s in &self.subspaces {
            let flag = |b: bool| if b { "yes" } else { "no" };
            write!(f, "  {} dim {}:", s.label, s.dim)?;
            if let Some(u) = s.unital_subalgebra {
                write!(f, " subalgebra {}", flag(u))?;
            }
            writeln!(f, " nondegenerate {}, rigid invariant {}", flag(s.nondegenerate), flag(s.rigid_invariant))?;
        }
        for x in &self.findings {
            writeln!(f, "  note: {x}")?;
        }
        if let Some(l) = &self.lattice {
            let a = &l.analytics;
            writeln!(
                f,
                "  lattice: {} elements, height {}, distributive {}, μ(bottom, top) = {}",
                a.size, a.height, a.distributive, a.mobius_bottom_top
            )?;
            for (k, e) in l.elements.iter().enumerate() {
                writeln!(f, "    [{k}] {} tr={} dim={}", e.label, e.trace, e.dim)?;
            }
        }
        writeln!(f, "{}", if self.passed { "PASS" } else { "FAIL" })
    }
}

fn strings(v: &[crate::exact::Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(&m.row_vec(i))).collect()
}

fn subspace_line(label: &str, flags: &VecSubalgebra, rigid: &ExactMatrix) -> Result<SubspaceLine, Error> {
    Ok(SubspaceLine {
        label: label.into(),
        dim: flags.space.dim(),
        unital_subalgebra: flags.is_unital_subalgebra,
        nondegenerate: flags.is_nondegenerate,
        rigid_invariant: flags.is_rigid_invariant,
        rigid_image: flags.space.apply(rigid)?.basis_vectors().iter().map(|v| strings(v)).collect(),
    })
}

fn flags(form: &crate::exact::BilinearForm, algebra: Option<&VecFrobeniusAlgebra>, v: &Subspace) -> Result<VecSubalgebra, Error> {
    match algebra {
        Some(a) => is_frobenius_subalgebra(a, v),
        None => subspace_flags(form, v),
    }
}

/// Axioms of the presentation, then every named subspace or candidate.
pub fn verify(p: &Presentation) -> RunReport {
    let mut r = RunReport::new("verify", p);
    match &p.kind {
        Kind::Vec { form, algebra, subspaces } => {
            if let Err(e) = verify_vec(&mut r, form, algebra.as_ref(), subspaces) {
                r.failure("construction", &e);
            }
        }
        Kind::Rep { hopf, candidates, integral_scale } => {
            r.section("hopf", validate_hopf(hopf));
            match hstar_from_hopf(hopf, integral_scale.clone()) {
                Ok(h) => {
                    r.section("H*", h.report);
                    match h.object.invariants() {
                        Ok(inv) => r.invariants = Some(inv),
                        Err(e) => r.failure("invariants", &e),
                    }
                    for (label, span) in candidates {
                        match h.object.split(span) {
                            Ok(inc) => r.section(format!("candidate {label}"), inclusion_report(&h.object, &inc)),
                            Err(e) => r.failure(&format!("candidate {label}"), &e),
                        }
                    }
                }
                Err(e) => r.failure("H*", &e),
            }
        }
    }
    r
}

fn verify_vec(
    r: &mut RunReport,
    form: &crate::exact::BilinearForm,
    algebra: Option<&VecFrobeniusAlgebra>,
    subspaces: &[(String, Subspace)],
) -> Result<(), Error> {
    let mut forms = Report::new();
    forms.push(Check::from_bool("form nondegenerate", form.is_nondegenerate()).with_note(format!("det = {}", fmt_rational(&form.det()))));
    r.section("form", forms);
    if let Some(a) = algebra {
        r.section("algebra", validate_algebra(a));
        match FrobeniusObject::from_vec_algebra(a) {
            Ok(f) => r.section("Frobenius object", check_axioms(&f)),
            Err(e) => r.failure("Frobenius object", &e),
        }
    }
    let rigid = rigidity_map(form, &ExactMatrix::identity(form.dim()))?;
    r.rigidity = Some(matrix_rows(&rigid.matrix));

    let mut named = Report::new();
    for (label, v) in subspaces {
        let fl = flags(form, algebra, v)?;
        let mut c = Check::from_bool(format!("{label} is Frobenius"), fl.is_frobenius());
        if !fl.is_rigid_invariant {
            r.findings.push(format!("{label} is not rigid invariant in the stored basis"));
            c = c.with_note("not rigid invariant");
        }
        named.push(c);
        r.subspaces.push(subspace_line(label, &fl, &rigid.matrix)?);
    }
    r.section("subspaces", named);

    for (k, (la, va)) in subspaces.iter().enumerate() {
        for (lb, vb) in &subspaces[k + 1..] {
            for (op, space) in [("∩", va.intersect(vb)?), ("+", va.sum(vb)?)] {
                let label = format!("{la}{op}{lb}");
                let fl = flags(form, algebra, &space)?;
                if !fl.is_nondegenerate {
                    r.findings.push(format!("{label} (dim {}) is degenerate", space.dim()));
                }
                if fl.is_unital_subalgebra == Some(false) {
                    r.findings.push(format!("{label} is not a unital subalgebra"));
                }
                r.subspaces.push(subspace_line(&label, &fl, &rigid.matrix)?);
            }
        }
    }
    Ok(())
}

/// A lattice run: the report plus the optional artifacts.
#[derive(Clone, Debug)]
pub struct LatticeRun {
    pub report: RunReport,
    pub dot: Option<String>,
    pub angles_csv: Option<String>,
}

/// Builds the lattice generated by the candidates and checks everything on it.
/// A failing meet is recorded as a finding in the report.
pub fn lattice(p: &Presentation, angles: bool) -> Result<LatticeRun, CliError> {
    let mut r = RunReport::new("lattice", p);
    let (f, spans) = match &p.kind {
        Kind::Vec { algebra: Some(a), subspaces, .. } => match FrobeniusObject::from_vec_algebra(a) {
            Ok(f) => (f, subspaces),
            Err(e) => return Ok(failed(r, "Frobenius object", &e)),
        },
        Kind::Vec { algebra: None, .. } => {
            return Err(CliError::Usage(format!("{} has a form but no multiplication; a lattice needs an algebra", p.name)))
        }
        Kind::Rep { hopf, candidates, integral_scale } => match hstar_from_hopf(hopf, integral_scale.clone()) {
            Ok(h) => (h.object, candidates),
            Err(e) => return Ok(failed(r, "H*", &e)),
        },
    };
    let mut candidates = Vec::new();
    for (label, span) in spans {
        match f.split(span) {
            Ok(inc) => candidates.push((label.clone(), inc)),
            Err(e) => return Ok(failed(r, &format!("candidate {label}"), &e)),
        }
    }
    let l = match build(&f, &candidates) {
        Ok(l) => l,
        Err(e) => {
            if let Error::MeetFailure { left, right, .. } = &e {
                r.findings.push(format!("meet closure failed at the pair {left}, {right}"));
            }
            return Ok(failed(r, "meet closure", &e));
        }
    };
    r.section("lattice axioms", l.check());
    r.section("pair identities", pair_identities(&f, &l));
    if let Ok(inv) = f.invariants() {
        r.invariants = Some(inv);
    }
    let mut summary = summary(&l);
    let mut csv = None;
    if angles {
        let w = finiteness_witness(&l, &f);
        csv = Some(angles_csv(&w));
        summary.angles = w
            .angles
            .iter()
            .map(|a| AngleLine { z: a.z, a: a.a, b: a.b, cosine: a.cosine.to_string(), cos_lt_half: a.cos_lt_half })
            .collect();
        r.section("angle separation", w.report);
    }
    if !summary.analytics.distributive {
        r.findings.push(format!("not distributive, witness {:?}", summary.analytics.distributive_witness.unwrap_or_default()));
    }
    r.findings.push(format!("totient computed with {}", summary.analytics.dimension));
    r.lattice = Some(summary);
    Ok(LatticeRun { report: r, dot: Some(to_dot(&l, &p.name)), angles_csv: csv })
}

fn failed(mut r: RunReport, name: &str, e: &Error) -> LatticeRun {
    r.failure(name, e);
    LatticeRun { report: r, dot: None, angles_csv: None }
}

fn summary(l: &BiprojectionLattice) -> LatticeSummary {
    let n = l.len();
    LatticeSummary {
        elements: l
            .elements
            .iter()
            .map(|e| ElementLine { label: e.label.clone(), trace: fmt_rational(&e.trace), dim: e.dim })
            .collect(),
        covers: (0..n).flat_map(|a| (0..n).filter(move |&b| l.covers(a, b)).map(move |b| [a, b])).collect(),
        top: l.top,
        bottom: l.bottom,
        analytics: LatticeAnalytics::of(l),
        angles: Vec::new(),
    }
}
