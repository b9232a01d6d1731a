// A six-dimensional Frobenius algebra where one Frobenius subalgebra is rigid
// invariant, another is not, and their intersection is degenerate.

use froblat::exact::ExactMatrix;
use froblat::frobvec::builtins::{ben02, ben02_subspaces};
use froblat::frobvec::{fixed_basis, is_frobenius_subalgebra, is_rigid_invariant, rigidity_map, validate_algebra};

pub fn run_example() -> froblat::Result<bool> {
    let a = ben02();
    let check = validate_algebra(&a);
    print!("{check}");
    let m = rigidity_map(&a.form, &ExactMatrix::identity(a.dim))?;
    println!("basis {:?}\nM =\n{}", a.basis_names, m.matrix);

    let (v, w) = ben02_subspaces();
    for (label, s) in [("V", &v), ("W", &w)] {
        let flags = is_frobenius_subalgebra(&a, s)?;
        println!(
            "{label}: subalgebra {:?}, nondegenerate {}, rigid invariant {}",
            flags.is_unital_subalgebra, flags.is_nondegenerate, flags.is_rigid_invariant
        );
    }
    let vw = v.intersect(&w)?;
    let flags = is_frobenius_subalgebra(&a, &vw)?;
    println!("V∩W: dim {}, nondegenerate {}", vw.dim(), flags.is_nondegenerate);

    // W becomes rigid invariant in a basis adapted to it.
    let p = fixed_basis(&a.form, &w)?.expect("W is nondegenerate");
    let adapted = rigidity_map(&a.form, &p)?;
    println!("W rigid invariant in the adapted basis: {}", is_rigid_invariant(&w, &adapted)?);
    Ok(check.passed() && !flags.is_nondegenerate)
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
