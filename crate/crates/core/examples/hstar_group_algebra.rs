// The Frobenius object H* in Rep(H) for the group algebra of S3.

use std::sync::Arc;

use froblat::frobobj::{hstar_from_hopf, FrobeniusInvariants};
use froblat::group::FiniteGroup;
use froblat::modcat::{group_algebra, validate_hopf};

pub fn run_example() -> froblat::Result<FrobeniusInvariants> {
    let g = FiniteGroup::symmetric3();
    let h = Arc::new(group_algebra(&g));
    assert!(validate_hopf(&h).passed());
    let hs = hstar_from_hopf(&h, None)?;
    print!("{}", hs.report);
    println!("integral {:?}", hs.integral.iter().map(ToString::to_string).collect::<Vec<_>>());
    let inv = hs.object.invariants()?;
    println!("μ = {}, λ = {:?}, tr(id) = {}, dim Hom(1, X) = {}", inv.mu, inv.lambda, inv.trace_id, inv.connected_dim);
    Ok(inv)
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
