//! The shipped example corpus, by name.

use std::sync::Arc;

use crate::exact::{int, Subspace};
use crate::frobobj::coset_space;
use crate::frobvec::builtins::{ben02, ben02_subspaces, nondegsum, x4, x4_family};
use crate::group::{FiniteGroup, Subgroup};
use crate::modcat::group_algebra;

use super::spec::{Kind, Presentation};
use super::CliError;

/// Every builtin name, in listing order.
pub fn names() -> Vec<String> {
    let mut v: Vec<String> = ["ben02", "x4", "nondegsum"].iter().map(|s| s.to_string()).collect();
    v.extend((2..=12).map(|n| format!("fun-c{n}")));
    v.extend(["fun-v4", "fun-s3", "fun-d4"].iter().map(|s| s.to_string()));
    v
}

/// The group behind a `fun-*` builtin.
pub fn group(name: &str) -> Option<FiniteGroup> {
    match name {
        "fun-v4" => Some(FiniteGroup::klein_four()),
        "fun-s3" => Some(FiniteGroup::symmetric3()),
        "fun-d4" => Some(FiniteGroup::dihedral4()),
        _ => {
            let n: usize = name.strip_prefix("fun-c")?.parse().ok()?;
            (2..=12).contains(&n).then(|| FiniteGroup::cyclic(n))
        }
    }
}

pub fn subgroup_label(k: &Subgroup) -> String {
    let elems: Vec<String> = k.iter().map(usize::to_string).collect();
    format!("K{{{}}}", elems.join(","))
}

pub fn builtin(name: &str) -> Result<Presentation, CliError> {
    let kind = match name {
        "ben02" => {
            let (v, w) = ben02_subspaces();
            let a = ben02();
            Kind::Vec { form: a.form.clone(), algebra: Some(a), subspaces: vec![("V".into(), v), ("W".into(), w)] }
        }
        "x4" => {
            let a = x4();
            let subspaces = [0, 1, -1, 2].iter().map(|&l| (format!("B_{l}"), x4_family(&int(l)))).collect();
            Kind::Vec { form: a.form.clone(), algebra: Some(a), subspaces }
        }
        "nondegsum" => {
            let (form, a, b) = nondegsum();
            Kind::Vec { form, algebra: None, subspaces: vec![("A".into(), a), ("B".into(), b)] }
        }
        _ => {
            let g = group(name).ok_or_else(|| CliError::UnknownBuiltin { name: name.into(), available: names() })?;
            let mut hopf = group_algebra(&g);
            hopf.name = name.into();
            let candidates: Vec<(String, Subspace)> =
                g.subgroups().iter().map(|k| (subgroup_label(k), coset_space(&g, k))).collect();
            Kind::Rep { hopf: Arc::new(hopf), candidates, integral_scale: None }
        }
    };
    Ok(Presentation { name: name.into(), kind })
}
