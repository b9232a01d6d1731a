// A one-parameter family of two-dimensional subalgebras: all Frobenius,
// rigid invariant in the standard basis only at λ = 0.

use froblat::exact::{int, Rational};
use froblat::frobvec::builtins::{x4, x4_family};
use froblat::frobvec::is_frobenius_subalgebra;

pub fn run_example() -> froblat::Result<Vec<(i64, bool)>> {
    let a = x4();
    let mut rows = Vec::new();
    for l in [0, 1, -1, 2] {
        let lambda: Rational = int(l);
        let flags = is_frobenius_subalgebra(&a, &x4_family(&lambda))?;
        println!(
            "λ = {l:>2}: Frobenius {}, rigid invariant {}",
            flags.is_frobenius(),
            flags.is_rigid_invariant
        );
        rows.push((l, flags.is_rigid_invariant));
    }
    Ok(rows)
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
