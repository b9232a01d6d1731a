use std::sync::Arc;

use serde::Serialize;

use super::{hom_space, Module};
use crate::exact::{ExactMatrix, Rational, Subspace};
use crate::{Error, Result};

/// A split subobject `(A, i, p)` with `p∘i = id_A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubobjectInclusion {
    pub dim: usize,
    /// The module structure on `A`, for the representation backend.
    #[serde(skip)]
    pub module: Option<Arc<Module>>,
    pub i: ExactMatrix,
    pub p: ExactMatrix,
}

impl SubobjectInclusion {
    /// A plain linear splitting.
    pub fn linear(i: ExactMatrix, p: ExactMatrix) -> Result<Self> {
        let s = Self { dim: i.cols(), module: None, i, p };
        s.check_retraction()?;
        Ok(s)
    }

    /// Inclusion of a subspace by its canonical basis, retracted by pivot rows.
    pub fn of_subspace(v: &Subspace) -> Self {
        Self { dim: v.dim(), module: None, i: v.basis().clone(), p: v.retraction() }
    }

    pub fn identity(n: usize) -> Self {
        Self { dim: n, module: None, i: ExactMatrix::identity(n), p: ExactMatrix::identity(n) }
    }

    pub fn image(&self) -> Subspace {
        Subspace::image(&self.i)
    }

    pub fn check_retraction(&self) -> Result<()> {
        if self.i.cols() != self.dim || self.p.shape() != (self.dim, self.i.rows()) {
            return Err(Error::Shape("inclusion and retraction shapes disagree".into()));
        }
        if !self.p.mul(&self.i).is_identity() {
            return Err(Error::Invalid("retraction: p∘i is not the identity".into()));
        }
        Ok(())
    }
}

/// Splits an invariant subspace of `c` as a subobject.
///
/// For group algebras the retraction is the group average of the pivot-row
/// retraction; otherwise one is solved for among the intertwiners `C → A`.
pub fn subobject_from_image(c: &Arc<Module>, image: &Subspace) -> Result<SubobjectInclusion> {
    if image.ambient_dim() != c.dim {
        return Err(Error::Shape(format!("subspace of Q^{} inside a {}-dimensional module", image.ambient_dim(), c.dim)));
    }
    if image.is_full() {
        return Ok(SubobjectInclusion {
            dim: c.dim,
            module: Some(c.clone()),
            i: ExactMatrix::identity(c.dim),
            p: ExactMatrix::identity(c.dim),
        });
    }
    for (k, a) in c.action.iter().enumerate() {
        if image.apply(a)?.sum(image)? != *image {
            return Err(Error::Invalid(format!("subspace is not invariant under basis element {k}")));
        }
    }
    let i = image.basis().clone();
    let p0 = image.retraction();
    let action: Vec<ExactMatrix> = c.action.iter().map(|a| p0.mul(a).mul(&i)).collect();
    let a = Arc::new(Module {
        name: format!("sub({})", c.name),
        algebra: c.algebra.clone(),
        hopf: c.hopf.clone(),
        dim: image.dim(),
        action,
    });

    let averaged = c.hopf.as_ref().and_then(|h| h.group_like_inverses()).map(|inv| {
        let order = inv.len();
        let mut sum = ExactMatrix::zeros(a.dim, c.dim);
        for (g, &g_inv) in inv.iter().enumerate() {
            sum = sum.add(&a.action[g].mul(&p0).mul(&c.action[g_inv]));
        }
        sum.scale(&Rational::new(1.into(), (order as i64).into()))
    });
    let p = match averaged {
        Some(p) => p,
        None => solve_retraction(c, &a, &i)?,
    };
    let sub = SubobjectInclusion { dim: a.dim, module: Some(a), i, p };
    sub.check_retraction()?;
    Ok(sub)
}

fn solve_retraction(c: &Module, a: &Module, i: &ExactMatrix) -> Result<ExactMatrix> {
    let homs = hom_space(c, a)?;
    let target = ExactMatrix::identity(a.dim).flatten();
    let cols: Vec<Vec<Rational>> = homs.iter().map(|h| h.mul(i).flatten()).collect();
    let system = ExactMatrix::from_columns(target.len(), &cols);
    let coeffs = system
        .solve(&ExactMatrix::column(target))
        .map_err(|_| Error::Invalid("no intertwining retraction exists (input is not semisimple)".into()))?;
    let mut p = ExactMatrix::zeros(a.dim, c.dim);
    for (k, h) in homs.iter().enumerate() {
        p = p.add(&h.scale(&coeffs[(k, 0)]));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::group::FiniteGroup;
    use crate::modcat::{group_algebra, is_intertwiner};

    #[test]
    fn constants_in_fun_s3() {
        let h = Arc::new(group_algebra(&FiniteGroup::symmetric3()));
        let fun = Arc::new(Module::dual_regular(&h));
        let constants = Subspace::span_vectors(6, &[vec![int(1); 6]]);
        let sub = subobject_from_image(&fun, &constants).unwrap();
        let b = sub.i.mul(&sub.p);
        assert_eq!(b.trace(), int(1));
        assert!(is_intertwiner(&fun, sub.module.as_ref().unwrap(), &sub.p));
    }
}
