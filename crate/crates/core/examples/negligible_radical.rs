// Negligible morphisms: none in End(Fun(G)), one on a nilpotent Jordan block.

use std::sync::Arc;

use froblat::frobobj::hstar_from_hopf;
use froblat::group::FiniteGroup;
use froblat::modcat::{group_algebra, negligible_radical, nilpotent_fixture, PivotalData};

pub fn run_example() -> froblat::Result<(usize, usize)> {
    let f = hstar_from_hopf(&Arc::new(group_algebra(&FiniteGroup::dihedral4())), None)?.object;
    let x = f.module().expect("H* lives in Rep(H)");
    let semisimple = negligible_radical(x, x, &PivotalData::identity())?;
    println!("End(Fun(D4)): radical of dimension {}", semisimple.len());

    let j = nilpotent_fixture();
    let rad = negligible_radical(&j, &j, &PivotalData::identity())?;
    println!("Jordan block: radical of dimension {}", rad.len());
    for r in &rad {
        println!("{r}");
    }
    Ok((semisimple.len(), rad.len()))
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
