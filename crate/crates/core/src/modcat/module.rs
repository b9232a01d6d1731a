use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{Algebra, HopfPresentation};
use crate::exact::{ExactMatrix, Rational, Subspace};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// A finite-dimensional left module: `action[i]` is the matrix of `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Module {
    pub name: String,
    #[serde(skip)]
    pub algebra: Arc<Algebra>,
    /// Absent for modules over a bare algebra, which have no tensor or dual.
    #[serde(skip)]
    pub hopf: Option<Arc<HopfPresentation>>,
    pub dim: usize,
    pub action: Vec<ExactMatrix>,
}

impl Module {
    pub fn new(name: impl Into<String>, hopf: &Arc<HopfPresentation>, action: Vec<ExactMatrix>) -> Result<Self> {
        let mut m = Self::over_algebra(name, hopf.algebra.clone(), action)?;
        m.hopf = Some(hopf.clone());
        Ok(m)
    }

    /// A module over an algebra with no Hopf structure.
    pub fn over_algebra(name: impl Into<String>, algebra: Arc<Algebra>, action: Vec<ExactMatrix>) -> Result<Self> {
        if action.len() != algebra.dim {
            return Err(Error::Shape(format!("{} action matrices for a {}-dimensional algebra", action.len(), algebra.dim)));
        }
        let dim = action.first().map_or(0, ExactMatrix::rows);
        if action.iter().any(|a| a.shape() != (dim, dim)) {
            return Err(Error::Shape("action matrices must be square of one size".into()));
        }
        Ok(Self { name: name.into(), algebra, hopf: None, dim, action })
    }

    fn hopf(&self) -> Result<&Arc<HopfPresentation>> {
        self.hopf
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("module {} has no Hopf structure", self.name)))
    }

    /// Action of an arbitrary element given in coordinates.
    pub fn act(&self, h: &[Rational]) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.dim, self.dim);
        for (c, a) in h.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&a.scale(c));
            }
        }
        out
    }

    /// `ρ(e_i)ρ(e_j) = ρ(e_i e_j)` and `ρ(1) = id`.
    pub fn validate(&self) -> Report {
        let n = self.algebra.dim;
        let mut r = Report::new();
        let mut products = Check::pass("action respects products");
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                if lhs != self.act(&self.algebra.product(i, j)) {
                    products = Check::fail("action respects products", Some(vec![i, j]));
                    break;
                }
            }
            if !products.passed {
                break;
            }
        }
        r.push(products);
        r.push(Check::from_bool("unit acts as identity", self.act(&self.algebra.unit.col_vec(0)).is_identity()));
        r
    }

    /// The unit object: `e_i` acts by `ε(e_i)`.
    pub fn trivial(hopf: &Arc<HopfPresentation>) -> Self {
        let action = (0..hopf.dim()).map(|i| ExactMatrix::scalar(hopf.counit[(0, i)].clone())).collect();
        Self::new("1", hopf, action).expect("trivial module")
    }

    /// Left multiplication on the algebra itself.
    pub fn regular(hopf: &Arc<HopfPresentation>) -> Self {
        let alg = &hopf.algebra;
        let n = alg.dim;
        let action = (0..n)
            .map(|i| ExactMatrix::from_columns(n, &(0..n).map(|j| alg.product(i, j)).collect::<Vec<_>>()))
            .collect();
        Self::new("reg", hopf, action).expect("regular module")
    }

    /// The dual Hopf algebra `H*` with `(h·f)(x) = f(xh)`, in the dual basis.
    pub fn dual_regular(hopf: &Arc<HopfPresentation>) -> Self {
        let alg = &hopf.algebra;
        let n = alg.dim;
        let action = (0..n)
            .map(|i| {
                let mut a = ExactMatrix::zeros(n, n);
                for x in 0..n {
                    let xi = alg.product(x, i);
                    for (j, c) in xi.into_iter().enumerate() {
                        a[(x, j)] = c;
                    }
                }
                a
            })
            .collect();
        Self::new("H*", hopf, action).expect("dual regular module")
    }

    /// One-dimensional module from scalars `χ(e_i)`.
    pub fn character(name: impl Into<String>, hopf: &Arc<HopfPresentation>, values: &[Rational]) -> Result<Self> {
        let action = values.iter().map(|c| ExactMatrix::scalar(c.clone())).collect();
        let m = Self::new(name, hopf, action)?;
        if !m.validate().passed() {
            return Err(Error::Invalid(format!("{} is not a character", m.name)));
        }
        Ok(m)
    }

    /// Tensor product through the comultiplication.
    pub fn tensor(&self, other: &Module) -> Result<Module> {
        let h = self.hopf()?;
        same_algebra(self, other)?;
        let n = h.dim();
        let action = (0..n)
            .map(|i| {
                let mut out = ExactMatrix::zeros(self.dim * other.dim, self.dim * other.dim);
                for j in 0..n {
                    for k in 0..n {
                        let c = &h.comult[(j * n + k, i)];
                        if !c.is_zero() {
                            out = out.add(&self.action[j].kron(&other.action[k]).scale(c));
                        }
                    }
                }
                out
            })
            .collect();
        Module::new(format!("{}⊗{}", self.name, other.name), h, action)
    }

    /// Left dual: `ρ*(h) = ρ(S h)ᵀ`.
    pub fn dual(&self) -> Result<Module> {
        let h = self.hopf()?;
        let action = (0..h.dim()).map(|i| self.act(&h.antipode.col_vec(i)).transpose()).collect();
        Module::new(format!("{}*", self.name), h, action)
    }

    /// `ev: C*⊗C → 1`, the row vector pairing dual basis vectors.
    pub fn ev(&self) -> ExactMatrix {
        let d = self.dim;
        let mut ev = ExactMatrix::zeros(1, d * d);
        for a in 0..d {
            ev[(0, a * d + a)] = Rational::one();
        }
        ev
    }

    /// `coev: 1 → C⊗C*`.
    pub fn coev(&self) -> ExactMatrix {
        self.ev().transpose()
    }

    /// Intertwiner and zigzag checks for the standard dual.
    pub fn check_duality(&self) -> Result<Report> {
        let dual = self.dual()?;
        let one = Module::trivial(self.hopf()?);
        let id = ExactMatrix::identity(self.dim);
        let mut r = Report::new();
        r.push(Check::from_bool("ev is an intertwiner", is_intertwiner(&dual.tensor(self)?, &one, &self.ev())));
        r.push(Check::from_bool("coev is an intertwiner", is_intertwiner(&one, &self.tensor(&dual)?, &self.coev())));
        let left = id.kron(&self.ev()).mul(&self.coev().kron(&id));
        let right = self.ev().kron(&id).mul(&id.kron(&self.coev()));
        r.push(Check::equal("zigzag on C", &left, &id));
        r.push(Check::equal("zigzag on C*", &right, &id));
        Ok(r)
    }
}

fn same_algebra(a: &Module, b: &Module) -> Result<()> {
    if Arc::ptr_eq(&a.algebra, &b.algebra) || a.algebra == b.algebra {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{} and {} are modules over different algebras", a.name, b.name)))
    }
}

/// Whether `f: src → tgt` commutes with every basis action.
pub fn is_intertwiner(src: &Module, tgt: &Module, f: &ExactMatrix) -> bool {
    f.shape() == (tgt.dim, src.dim)
        && src.action.iter().zip(&tgt.action).all(|(a, b)| f.mul(a) == b.mul(f))
}

/// Basis of `Hom(src, tgt)`, canonical: the reduced basis of the kernel of the
/// stacked constraints `F·ρ_src(e_i) − ρ_tgt(e_i)·F = 0`.
pub fn hom_space(src: &Module, tgt: &Module) -> Result<Vec<ExactMatrix>> {
    same_algebra(src, tgt)?;
    let (p, q) = (tgt.dim, src.dim);
    let unknowns = p * q;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut constraints = ExactMatrix::zeros(0, unknowns);
    for (a, b) in src.action.iter().zip(&tgt.action) {
        let mut block = ExactMatrix::zeros(unknowns, unknowns);
        for r in 0..p {
            for c in 0..q {
                let row = r * q + c;
                for s in 0..q {
                    let v = &a[(s, c)];
                    if !v.is_zero() {
                        block[(row, r * q + s)] += v;
                    }
                }
                for t in 0..p {
                    let v = &b[(r, t)];
                    if !v.is_zero() {
                        block[(row, t * q + c)] -= v;
                    }
                }
            }
        }
        let stacked = constraints.vstack(&block).rref();
        constraints = stacked.reduced.select_rows(&(0..stacked.rank).collect::<Vec<_>>());
    }
    let kernel = Subspace::kernel(&constraints);
    Ok(kernel.basis_vectors().into_iter().map(|v| ExactMatrix::from_vec(p, q, v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::modcat::group_algebra;

    fn c2() -> Arc<HopfPresentation> {
        Arc::new(group_algebra(&FiniteGroup::cyclic(2)))
    }

    #[test]
    fn hom_dimensions() {
        let h = c2();
        let one = Module::trivial(&h);
        assert_eq!(hom_space(&one, &one).unwrap().len(), 1);
        let reg = Module::regular(&h);
        assert_eq!(hom_space(&reg, &reg).unwrap().len(), 2);
        let fun = Module::dual_regular(&h);
        let ff = fun.tensor(&fun).unwrap();
        assert_eq!(ff.dim, 4);
        assert_eq!(hom_space(&one, &ff).unwrap().len(), 2);
    }

    #[test]
    fn tensor_with_unit_is_identity() {
        let h = c2();
        let one = Module::trivial(&h);
        let reg = Module::regular(&h);
        assert_eq!(one.tensor(&reg).unwrap().action, reg.action);
        assert_eq!(reg.tensor(&one).unwrap().action, reg.action);
    }

    #[test]
    fn regular_tensor_square_is_kron_of_actions() {
        let h = c2();
        let reg = Module::regular(&h);
        let rr = reg.tensor(&reg).unwrap();
        for i in 0..2 {
            assert_eq!(rr.action[i], reg.action[i].kron(&reg.action[i]));
        }
    }

    #[test]
    fn duals() {
        let h = c2();
        let one = Module::trivial(&h);
        assert_eq!(one.dual().unwrap().action, one.action);
        let fun = Module::dual_regular(&h);
        assert!(fun.validate().passed());
        assert!(fun.check_duality().unwrap().passed());
        assert_eq!(fun.dual().unwrap().dual().unwrap().action, fun.action);
    }
}
