// Biprojections of coset subalgebras of Fun(S3), with meets and joins.

use std::sync::Arc;

use froblat::frobobj::{biprojection, coset_subalgebra, full_biprojection, hstar_from_hopf, inclusion_report, join, meet, unit_biprojection};
use froblat::group::FiniteGroup;
use froblat::modcat::group_algebra;

pub fn run_example() -> froblat::Result<Vec<String>> {
    let g = FiniteGroup::symmetric3();
    let f = hstar_from_hopf(&Arc::new(group_algebra(&g)), None)?.object;
    let mut bs = vec![full_biprojection(&f)?, unit_biprojection(&f)?];
    for k in g.subgroups() {
        let inc = coset_subalgebra(&f, &g, &k)?;
        assert!(inclusion_report(&f, &inc).passed());
        let b = biprojection(&f, &inc, format!("{k:?}"))?;
        println!("K = {k:?}: tr(b) = {} = [G:K], dim {}", b.trace, b.dim);
        bs.push(b);
    }
    let order_two: Vec<_> = bs.iter().filter(|b| b.dim == 3).collect();
    let (t1, t2) = (order_two[0], order_two[1]);
    let m = meet(&f, t1, t2)?;
    let j = join(&f, t1, t2, &bs)?;
    println!("{} ∧ {}: tr {}", t1.label, t2.label, m.trace);
    println!("{} ∨ {} = {}, tr(b_(A+B)) = {}", t1.label, t2.label, bs[j.join].label, j.sum.trace);
    print!("{}", j.checks);
    Ok(bs.iter().map(|b| b.trace.to_string()).collect())
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
