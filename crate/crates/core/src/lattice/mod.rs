//! Biprojection lattices: meet-closure, order, meet/join tables, and the
//! analytics built on them.

mod analytics;
mod export;
mod parallel;

pub use analytics::{
    euler_totient, finiteness_witness, is_distributive, minimal_sets, mobius, mobius_identity_holds, sigma, AngleRow, FinitenessWitness,
    LatticeAnalytics, MobiusTable,
};
pub use export::{angles_csv, to_dot};
pub use parallel::{pair_identities, thread_count, with_pool};

use num_traits::Signed;
use serde::Serialize;

use crate::exact::Rational;
use crate::frobobj::{biprojection, full_biprojection, leq, meet, unit_biprojection, Biprojection, FrobeniusObject};
use crate::modcat::SubobjectInclusion;
use crate::report::{Check, Report};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct BiprojectionLattice {
    /// Sorted by trace, then by matrix entries.
    pub elements: Vec<Biprojection>,
    pub leq: Vec<Vec<bool>>,
    pub meet_table: Vec<Vec<usize>>,
    pub join_table: Vec<Vec<usize>>,
    /// `tr(id_Y)` with the identity pivotal structure, i.e. `dim Y`.
    #[serde(with = "crate::exact::serde_rational::vec")]
    pub dims: Vec<Rational>,
    pub top: usize,
    pub bottom: usize,
}

/// Closes `{b_X} ∪ candidates` under meets, then adds `b_1`.
pub fn build(f: &FrobeniusObject, candidates: &[(String, SubobjectInclusion)]) -> Result<BiprojectionLattice> {
    let mut elements = vec![full_biprojection(f)?];
    for (label, inc) in candidates {
        let b = biprojection(f, inc, label.clone())?;
        if !b.trace.is_positive() {
            return Err(Error::Invalid(format!("candidate {label} has trace {}", b.trace)));
        }
        insert(&mut elements, b);
    }
    let mut i = 0;
    while i < elements.len() {
        for j in 0..i {
            let (a, b) = (&elements[i], &elements[j]);
            if leq(a, b) || leq(b, a) {
                continue;
            }
            let image = a.image().intersect(&b.image())?;
            if elements.iter().any(|e| e.image() == image) {
                continue;
            }
            let m = meet(f, a, b)?;
            insert(&mut elements, m);
        }
        i += 1;
    }
    let unit = unit_biprojection(f)?;
    if !unit.trace.is_positive() {
        return Err(Error::Degenerate(format!("tr(b_1) = {}", unit.trace)));
    }
    insert(&mut elements, unit);
    from_elements(elements)
}

fn insert(elements: &mut Vec<Biprojection>, b: Biprojection) {
    if !elements.iter().any(|e| e.b == b.b) {
        elements.push(b);
    }
}

/// Order, tables and extremes of a finite set of biprojections.
pub fn from_elements(mut elements: Vec<Biprojection>) -> Result<BiprojectionLattice> {
    elements.sort_by(|x, y| x.trace.cmp(&y.trace).then_with(|| x.b.cmp(&y.b)));
    elements.dedup_by(|x, y| x.b == y.b);
    let n = elements.len();
    let order: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| leq(&elements[i], &elements[j])).collect()).collect();
    let bound = |candidates: Vec<usize>, greatest: bool| -> Option<usize> {
        candidates.iter().copied().find(|&c| {
            candidates
                .iter()
                .all(|&d| if greatest { order[d][c] } else { order[c][d] })
        })
    };
    let mut meet_table = vec![vec![0; n]; n];
    let mut join_table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let lower = (0..n).filter(|&c| order[c][a] && order[c][b]).collect();
            let upper = (0..n).filter(|&c| order[a][c] && order[b][c]).collect();
            let label = || format!("{} and {}", elements[a].label, elements[b].label);
            meet_table[a][b] = bound(lower, true).ok_or_else(|| Error::Invalid(format!("{} have no meet", label())))?;
            join_table[a][b] = bound(upper, false).ok_or_else(|| Error::Invalid(format!("{} have no join", label())))?;
        }
    }
    let top = (0..n).find(|&t| (0..n).all(|x| order[x][t])).ok_or_else(|| Error::Invalid("no top element".into()))?;
    let bottom = (0..n)
        .find(|&b| (0..n).all(|x| order[b][x]))
        .ok_or_else(|| Error::Invalid("no bottom element".into()))?;
    let dims = elements.iter().map(|e| Rational::from_integer(e.dim.into())).collect();
    Ok(BiprojectionLattice { elements, leq: order, meet_table, join_table, dims, top, bottom })
}

impl BiprojectionLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, b: &Biprojection) -> Option<usize> {
        self.elements.iter().position(|e| e.b == b.b)
    }

    /// `b < c` with nothing strictly between.
    pub fn covers(&self, b: usize, c: usize) -> bool {
        b != c && self.leq[b][c] && (0..self.len()).all(|d| d == b || d == c || !(self.leq[b][d] && self.leq[d][c]))
    }

    /// Number of edges in a longest chain from bottom to top.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut by_size: Vec<usize> = (0..n).collect();
        by_size.sort_by_key(|&x| (0..n).filter(|&y| self.leq[y][x]).count());
        let mut depth = vec![0usize; n];
        for &x in &by_size {
            for &y in &by_size {
                if y != x && self.leq[y][x] {
                    depth[x] = depth[x].max(depth[y] + 1);
                }
            }
        }
        depth[self.top]
    }

    /// Partial-order, lattice and trace-monotonicity axioms, exhaustively.
    pub fn check(&self) -> Report {
        let n = self.len();
        let le = &self.leq;
        let (m, j) = (&self.meet_table, &self.join_table);
        let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
        let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
        let mut r = Report::new();
        let first_triple = |p: &dyn Fn(usize, usize, usize) -> bool| triples().find(|&(a, b, c)| !p(a, b, c));
        let first_pair = |p: &dyn Fn(usize, usize) -> bool| pairs().find(|&(a, b)| !p(a, b));
        let mut push = |name: &str, w: Option<Vec<usize>>| {
            r.push(match w {
                None => Check::pass(name),
                Some(w) => Check::fail(name, Some(w)),
            })
        };
        push("reflexive", (0..n).find(|&a| !le[a][a]).map(|a| vec![a]));
        push("antisymmetric", first_pair(&|a, b| a == b || !(le[a][b] && le[b][a])).map(|(a, b)| vec![a, b]));
        push("transitive", first_triple(&|a, b, c| !(le[a][b] && le[b][c]) || le[a][c]).map(|(a, b, c)| vec![a, b, c]));
        push("meet commutative", first_pair(&|a, b| m[a][b] == m[b][a]).map(|(a, b)| vec![a, b]));
        push("join commutative", first_pair(&|a, b| j[a][b] == j[b][a]).map(|(a, b)| vec![a, b]));
        push("meet associative", first_triple(&|a, b, c| m[m[a][b]][c] == m[a][m[b][c]]).map(|(a, b, c)| vec![a, b, c]));
        push("join associative", first_triple(&|a, b, c| j[j[a][b]][c] == j[a][j[b][c]]).map(|(a, b, c)| vec![a, b, c]));
        push("absorption", first_pair(&|a, b| m[a][j[a][b]] == a && j[a][m[a][b]] == a).map(|(a, b)| vec![a, b]));
        push(
            "trace strictly monotone",
            first_pair(&|a, b| a == b || !le[a][b] || self.elements[a].trace < self.elements[b].trace)
                .map(|(a, b)| vec![a, b]),
        );
        push("bottom is b_1", (self.elements[self.bottom].dim != 1).then(|| vec![self.bottom]));
        push("top is id", (!self.elements[self.top].b.is_identity()).then(|| vec![self.top]));
        r
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::frobobj::{coset_subalgebra, hstar_from_hopf};
    use crate::group::FiniteGroup;
    use crate::modcat::group_algebra;

    pub(crate) fn fun_lattice(g: &FiniteGroup) -> (FrobeniusObject, BiprojectionLattice) {
        let f = hstar_from_hopf(&Arc::new(group_algebra(g)), None).unwrap().object;
        let candidates: Vec<_> = g
            .subgroups()
            .iter()
            .map(|k| (format!("{k:?}"), coset_subalgebra(&f, g, k).unwrap()))
            .collect();
        let l = build(&f, &candidates).unwrap();
        (f, l)
    }

    #[test]
    fn empty_candidates_give_a_chain() {
        let (f, _) = fun_lattice(&FiniteGroup::cyclic(2));
        let l = build(&f, &[]).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.height(), 1);
        assert!(l.check().passed());
    }

    #[test]
    fn unit_object_lattice_is_a_point() {
        let l = build(&FrobeniusObject::unit(), &[]).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.height(), 0);
    }

    #[test]
    fn s3_lattice_shape() {
        let (_, l) = fun_lattice(&FiniteGroup::symmetric3());
        assert_eq!(l.len(), 6);
        assert_eq!(l.height(), 2);
        assert!(l.check().passed(), "{}", l.check());
    }

    #[test]
    fn analytics_of_small_groups() {
        let (_, c6) = fun_lattice(&FiniteGroup::cyclic(6));
        assert_eq!(c6.len(), 4);
        assert_eq!(euler_totient(&c6), Rational::from_integer(2.into()));
        assert_eq!(sigma(&c6).1, Rational::from_integer(12.into()));
        assert_eq!(mobius(&c6).get(c6.bottom, c6.top), 1);

        let (f, s3) = fun_lattice(&FiniteGroup::symmetric3());
        assert_eq!(euler_totient(&s3), Rational::from_integer((-2).into()));
        let mu = mobius(&s3);
        assert_eq!(mu.get(s3.bottom, s3.top), 3);
        assert!(mobius_identity_holds(&s3, &mu));
        assert_eq!(minimal_sets(&s3, s3.bottom)[1].len(), 4);
        assert!(minimal_sets(&s3, s3.top).len() == 1);
        assert!(finiteness_witness(&s3, &f).report.passed());
        let pairs = pair_identities(&f, &s3);
        assert!(pairs.passed(), "{pairs}");

        let (f, v4) = fun_lattice(&FiniteGroup::klein_four());
        assert_eq!(v4.len(), 5);
        let [a, b, c] = is_distributive(&v4).unwrap_err();
        assert!([a, b, c].iter().all(|&x| x != v4.top && x != v4.bottom));
        assert_eq!(finiteness_witness(&v4, &f).angles.len(), 3);
    }

    #[test]
    fn dot_lists_covering_edges() {
        let (_, c6) = fun_lattice(&FiniteGroup::cyclic(6));
        let dot = to_dot(&c6, "C6");
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("tr=6 dim=6"));
    }
}
