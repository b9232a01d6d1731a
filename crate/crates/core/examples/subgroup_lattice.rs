// The biprojection lattice of Fun(D4) from its coset subalgebras, and its
// Hasse diagram.

use std::sync::Arc;

use froblat::frobobj::{coset_subalgebra, hstar_from_hopf};
use froblat::group::FiniteGroup;
use froblat::lattice::{build, to_dot};
use froblat::modcat::group_algebra;

pub fn run_example() -> froblat::Result<(usize, usize)> {
    let g = FiniteGroup::dihedral4();
    let f = hstar_from_hopf(&Arc::new(group_algebra(&g)), None)?.object;
    let subgroups = g.subgroups();
    let candidates = subgroups
        .iter()
        .map(|k| Ok((format!("{k:?}"), coset_subalgebra(&f, &g, k)?)))
        .collect::<froblat::Result<Vec<_>>>()?;
    let l = build(&f, &candidates)?;
    println!("{} subgroups, {} biprojections, height {}", subgroups.len(), l.len(), l.height());
    assert!(l.check().passed());
    print!("{}", to_dot(&l, "Fun(D4)"));
    Ok((l.len(), l.height()))
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
