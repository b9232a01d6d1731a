// Formal angles between minimal intermediate objects, compared to π/3
// without square roots.

use std::sync::Arc;

use froblat::frobobj::{biprojection, coset_subalgebra, formal_angle, hstar_from_hopf, unit_biprojection, FormalCosine};
use froblat::group::FiniteGroup;
use froblat::modcat::group_algebra;

pub fn run_example() -> froblat::Result<FormalCosine> {
    let g = FiniteGroup::symmetric3();
    let f = hstar_from_hopf(&Arc::new(group_algebra(&g)), None)?.object;
    let bottom = unit_biprojection(&f)?;
    let ks: Vec<_> = g.subgroups().into_iter().filter(|k| k.len() == 2).collect();
    let a = biprojection(&f, &coset_subalgebra(&f, &g, &ks[0])?, "A")?;
    let b = biprojection(&f, &coset_subalgebra(&f, &g, &ks[1])?, "B")?;
    let cos = formal_angle(&f, &a, &b, &bottom)?;
    println!("cos θ = {cos}, below 1/2: {}", cos.cos_less_than_half());
    Ok(cos)
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
