// Exchange relations and the Landau trace formula for two transposition
// subgroups of S3.

use std::sync::Arc;

use froblat::frobobj::{biprojection, coset_subalgebra, exchange_check, hstar_from_hopf, landau_check, PivotalData};
use froblat::group::FiniteGroup;
use froblat::modcat::group_algebra;

pub fn run_example() -> froblat::Result<String> {
    let g = FiniteGroup::symmetric3();
    let f = hstar_from_hopf(&Arc::new(group_algebra(&g)), None)?.object;
    let transpositions: Vec<_> = g.subgroups().into_iter().filter(|k| k.len() == 2).collect();
    let b1 = biprojection(&f, &coset_subalgebra(&f, &g, &transpositions[0])?, "A")?;
    let b2 = biprojection(&f, &coset_subalgebra(&f, &g, &transpositions[1])?, "B")?;
    print!("{}", exchange_check(&f, &b1, &b2));
    let landau = landau_check(&f, &b1, &b2, &PivotalData::identity())?;
    print!("{}", landau.checks);
    let b_ab = landau.b_ab.expect("tr(b_A∘b_B) is nonzero");
    println!("tr(b_A∘b_B) = {}, tr(b_AB) = {}", landau.trace_product, b_ab.trace);
    Ok(b_ab.trace.to_string())
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
