// A proper subalgebra inclusion is an algebra map but not a coalgebra map;
// identity pivotal traces of biprojections are positive.

use std::sync::Arc;

use froblat::frobobj::{biprojection, coset_subalgebra, frobenius_morphism_check, hstar_from_hopf, weak_positivity_probe, PivotalData};
use froblat::group::FiniteGroup;
use froblat::modcat::group_algebra;

pub fn run_example() -> froblat::Result<Vec<String>> {
    let g = FiniteGroup::symmetric3();
    let f = hstar_from_hopf(&Arc::new(group_algebra(&g)), None)?.object;
    let a3 = g.subgroups().into_iter().find(|k| k.len() == 3).expect("S3 has a subgroup of order 3");
    let inc = coset_subalgebra(&f, &g, &a3)?;
    let sub = f.induced(&inc)?;
    let report = frobenius_morphism_check(&sub, &f, &inc.i);
    print!("{report}");
    let failed: Vec<String> = report.failures().map(|c| c.name.clone()).collect();

    let b = biprojection(&f, &inc, "A3")?;
    print!("{}", weak_positivity_probe(&f, &PivotalData::identity(), &[b]));
    Ok(failed)
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
