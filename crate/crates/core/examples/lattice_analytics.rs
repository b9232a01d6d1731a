// Möbius function, Euler totient, sigma and distributivity of biprojection
// lattices of Fun(C12), Fun(S3) and Fun(V4).

use std::sync::Arc;

use froblat::exact::Rational;
use froblat::frobobj::{coset_subalgebra, hstar_from_hopf};
use froblat::group::FiniteGroup;
use froblat::lattice::{build, finiteness_witness, mobius, BiprojectionLattice, LatticeAnalytics};
use froblat::modcat::group_algebra;

fn fun(g: &FiniteGroup) -> froblat::Result<(froblat::frobobj::FrobeniusObject, BiprojectionLattice)> {
    let f = hstar_from_hopf(&Arc::new(group_algebra(g)), None)?.object;
    let candidates = g
        .subgroups()
        .iter()
        .map(|k| Ok((format!("{k:?}"), coset_subalgebra(&f, g, k)?)))
        .collect::<froblat::Result<Vec<_>>>()?;
    let l = build(&f, &candidates)?;
    Ok((f, l))
}

pub fn run_example() -> froblat::Result<Vec<(String, Rational, bool)>> {
    let mut rows = Vec::new();
    for g in [FiniteGroup::cyclic(12), FiniteGroup::symmetric3(), FiniteGroup::klein_four()] {
        let (f, l) = fun(&g)?;
        let a = LatticeAnalytics::of(&l);
        println!(
            "{}: size {}, totient {}, sigma {}, μ(bottom, top) = {}, distributive {} {:?}",
            g.name, a.size, a.totient, a.sigma, mobius(&l).get(l.bottom, l.top), a.distributive, a.distributive_witness
        );
        let w = finiteness_witness(&l, &f);
        println!("  {} minimal pairs, all cos < 1/2: {}", w.angles.len(), w.report.passed());
        rows.push((g.name.clone(), a.totient, a.distributive));
    }
    Ok(rows)
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
