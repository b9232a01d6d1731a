//! The spec-file format: JSON with every rational written as a `"p/q"` string
//! and tensors given sparsely.

use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{fmt_rational, parse_rational, BilinearForm, ExactMatrix, Rational, Subspace};
use crate::frobvec::VecFrobeniusAlgebra;
use crate::modcat::{Algebra, HopfPresentation};

use super::CliError;

pub const SPEC_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecFile {
    pub version: String,
    pub name: String,
    #[serde(flatten)]
    pub body: Body,
}

/// `"backend"` selects the shape of `"payload"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "backend", content = "payload", rename_all = "lowercase")]
pub enum Body {
    Vec(VecPayload),
    Rep(RepPayload),
}

/// A form on `Q^dim`, optionally with a unital multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VecPayload {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    /// `[i, j, k, c]`: `e_i·e_j += c·e_k`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<(usize, usize, usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    /// `[i, j, c]`: `κ(e_i, e_j) = c`.
    pub gram: Vec<(usize, usize, String)>,
    #[serde(default)]
    pub subspaces: Vec<NamedSpan>,
}

/// A Hopf algebra by structure constants, and candidate subobjects of `H*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepPayload {
    pub hopf: HopfSpec,
    #[serde(default)]
    pub candidates: Vec<NamedSpan>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integral_scale: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfSpec {
    pub dim: usize,
    /// `[i, j, k, c]`: `e_i·e_j += c·e_k`.
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    /// `[i, j, k, c]`: `Δ(e_i) += c·e_j⊗e_k`.
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    /// `[i, j, c]`: `S(e_i) += c·e_j`.
    pub antipode: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedSpan {
    pub label: String,
    /// Spanning vectors in the stored basis.
    pub span: Vec<Vec<String>>,
}

/// A loaded presentation, ready for the pipelines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Vec {
        form: BilinearForm,
        algebra: Option<VecFrobeniusAlgebra>,
        subspaces: Vec<(String, Subspace)>,
    },
    Rep {
        hopf: Arc<HopfPresentation>,
        candidates: Vec<(String, Subspace)>,
        integral_scale: Option<Rational>,
    },
}

fn rat(s: &str, at: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Schema(format!("{at}: {e}")))
}

fn rats(v: &[String], at: &str) -> Result<Vec<Rational>, CliError> {
    v.iter().enumerate().map(|(k, s)| rat(s, &format!("{at}[{k}]"))).collect()
}

fn check_index(i: usize, dim: usize, at: &str) -> Result<(), CliError> {
    if i < dim {
        Ok(())
    } else {
        Err(CliError::Schema(format!("{at}: index {i} out of range for dimension {dim}")))
    }
}

fn check_len(v: &[Rational], dim: usize, at: &str) -> Result<(), CliError> {
    if v.len() == dim {
        Ok(())
    } else {
        Err(CliError::Schema(format!("{at}: expected {dim} entries, found {}", v.len())))
    }
}

fn cubic(entries: &[(usize, usize, usize, String)], dim: usize, at: &str) -> Result<Vec<(usize, usize, usize, Rational)>, CliError> {
    entries
        .iter()
        .enumerate()
        .map(|(n, (i, j, k, c))| {
            let here = format!("{at}[{n}]");
            for x in [i, j, k] {
                check_index(*x, dim, &here)?;
            }
            Ok((*i, *j, *k, rat(c, &here)?))
        })
        .collect()
}

fn square(entries: &[(usize, usize, String)], dim: usize, at: &str) -> Result<ExactMatrix, CliError> {
    let mut m = ExactMatrix::zeros(dim, dim);
    for (n, (i, j, c)) in entries.iter().enumerate() {
        let here = format!("{at}[{n}]");
        check_index(*i, dim, &here)?;
        check_index(*j, dim, &here)?;
        m[(*i, *j)] += rat(c, &here)?;
    }
    Ok(m)
}

fn spans(list: &[NamedSpan], dim: usize, at: &str) -> Result<Vec<(String, Subspace)>, CliError> {
    list.iter()
        .enumerate()
        .map(|(n, s)| {
            let vectors = s
                .span
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let here = format!("{at}[{n}].span[{k}]");
                    let v = rats(v, &here)?;
                    check_len(&v, dim, &here)?;
                    Ok(v)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok((s.label.clone(), Subspace::span_vectors(dim, &vectors)))
        })
        .collect()
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let spec: SpecFile = serde_json::from_str(text)
            .map_err(|e| {
                let message = e.to_string();
                let suffix = format!(" at line {} column {}", e.line(), e.column());
                let message = message.strip_suffix(&suffix).unwrap_or(&message).to_string();
                CliError::Parse { line: e.line(), column: e.column(), message }
            })?;
        if spec.version != SPEC_VERSION {
            return Err(CliError::Schema(format!("unsupported version {:?}, expected {SPEC_VERSION:?}", spec.version)));
        }
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("spec files serialize");
        s.push('\n');
        s
    }

    pub fn load(&self) -> Result<Presentation, CliError> {
        let kind = match &self.body {
            Body::Vec(p) => load_vec(&self.name, p)?,
            Body::Rep(p) => load_rep(&self.name, p)?,
        };
        Ok(Presentation { name: self.name.clone(), kind })
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        let body = match &p.kind {
            Kind::Vec { form, algebra, subspaces } => Body::Vec(save_vec(form, algebra.as_ref(), subspaces)),
            Kind::Rep { hopf, candidates, integral_scale } => {
                Body::Rep(save_rep(hopf, candidates, integral_scale.as_ref()))
            }
        };
        Self { version: SPEC_VERSION.into(), name: p.name.clone(), body }
    }
}

fn load_vec(name: &str, p: &VecPayload) -> Result<Kind, CliError> {
    let gram = square(&p.gram, p.dim, "payload.gram")?;
    let form = BilinearForm::new(gram.clone())?;
    let algebra = match (&p.mult, &p.unit) {
        (Some(mult), Some(unit)) => {
            let products = cubic(mult, p.dim, "payload.mult")?;
            let unit = rats(unit, "payload.unit")?;
            check_len(&unit, p.dim, "payload.unit")?;
            let mut a = VecFrobeniusAlgebra::from_sparse(name, p.dim, &products, unit, gram)?;
            a.basis_names = p.basis.clone();
            Some(a)
        }
        (None, None) => None,
        _ => return Err(CliError::Schema("payload: mult and unit must be given together".into())),
    };
    let subspaces = spans(&p.subspaces, p.dim, "payload.subspaces")?;
    Ok(Kind::Vec { form, algebra, subspaces })
}

fn load_rep(name: &str, p: &RepPayload) -> Result<Kind, CliError> {
    let h = &p.hopf;
    let n = h.dim;
    let mut mult = ExactMatrix::zeros(n, n * n);
    for (i, j, k, c) in cubic(&h.mult, n, "payload.hopf.mult")? {
        mult[(k, i * n + j)] += c;
    }
    let mut comult = ExactMatrix::zeros(n * n, n);
    for (i, j, k, c) in cubic(&h.comult, n, "payload.hopf.comult")? {
        comult[(j * n + k, i)] += c;
    }
    let unit = rats(&h.unit, "payload.hopf.unit")?;
    check_len(&unit, n, "payload.hopf.unit")?;
    let counit = rats(&h.counit, "payload.hopf.counit")?;
    check_len(&counit, n, "payload.hopf.counit")?;
    let antipode = square(&h.antipode, n, "payload.hopf.antipode")?.transpose();
    let algebra = Algebra::new(mult, ExactMatrix::column(unit))?;
    let hopf = HopfPresentation::new(name, algebra, comult, ExactMatrix::row(counit), antipode)?;
    let candidates = spans(&p.candidates, n, "payload.candidates")?;
    let integral_scale = p.integral_scale.as_deref().map(|s| rat(s, "payload.integral_scale")).transpose()?;
    Ok(Kind::Rep { hopf: Arc::new(hopf), candidates, integral_scale })
}

fn sparse_square(m: &ExactMatrix) -> Vec<(usize, usize, String)> {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                out.push((i, j, fmt_rational(&m[(i, j)])));
            }
        }
    }
    out
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

fn named(list: &[(String, Subspace)]) -> Vec<NamedSpan> {
    list.iter()
        .map(|(label, s)| NamedSpan { label: label.clone(), span: s.basis_vectors().iter().map(|v| strings(v)).collect() })
        .collect()
}

fn save_vec(form: &BilinearForm, algebra: Option<&VecFrobeniusAlgebra>, subspaces: &[(String, Subspace)]) -> VecPayload {
    let (mult, unit, basis) = match algebra {
        Some(a) => {
            let n = a.dim;
            let mut products = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let c = &a.mult[(k, i * n + j)];
                        if !c.is_zero() {
                            products.push((i, j, k, fmt_rational(c)));
                        }
                    }
                }
            }
            (Some(products), Some(strings(&a.unit)), a.basis_names.clone())
        }
        None => (None, None, Vec::new()),
    };
    VecPayload { dim: form.dim(), basis, mult, unit, gram: sparse_square(form.gram()), subspaces: named(subspaces) }
}

fn save_rep(h: &HopfPresentation, candidates: &[(String, Subspace)], scale: Option<&Rational>) -> RepPayload {
    let n = h.dim();
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = &h.algebra.mult[(k, i * n + j)];
                if !c.is_zero() {
                    mult.push((i, j, k, fmt_rational(c)));
                }
                let d = &h.comult[(j * n + k, i)];
                if !d.is_zero() {
                    comult.push((i, j, k, fmt_rational(d)));
                }
            }
        }
    }
    RepPayload {
        hopf: HopfSpec {
            dim: n,
            mult,
            unit: strings(&h.algebra.unit.col_vec(0)),
            comult,
            counit: strings(&h.counit.row_vec(0)),
            antipode: sparse_square(&h.antipode.transpose()),
        },
        candidates: named(candidates),
        integral_scale: scale.map(fmt_rational),
    }
}
