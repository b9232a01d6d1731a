// Two nondegenerate lines with zero intersection whose sum is degenerate.

use froblat::frobvec::builtins::nondegsum;
use froblat::frobvec::is_nondegenerate_subspace;

pub fn run_example() -> froblat::Result<bool> {
    let (form, a, b) = nondegsum();
    println!("det = {}", form.det());
    println!("A nondegenerate {}, B nondegenerate {}", is_nondegenerate_subspace(&form, &a)?, is_nondegenerate_subspace(&form, &b)?);
    let (meet, sum) = (a.intersect(&b)?, a.sum(&b)?);
    let restricted = form.restrict(&sum)?;
    println!("dim(A∩B) = {}, Gram on A+B =\n{}", meet.dim(), restricted.gram());
    Ok(meet.is_zero() && !restricted.is_nondegenerate())
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
