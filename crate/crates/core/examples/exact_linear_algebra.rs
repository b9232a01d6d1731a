// Row reduction, kernels and subspace arithmetic over the rationals.

use froblat::exact::{rat, ExactMatrix, Subspace};

pub fn run_example() -> froblat::Result<(usize, usize)> {
    let a = ExactMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, -1]]);
    let r = a.rref();
    println!("rank {} pivots {:?}\n{}", r.rank, r.pivots, r.reduced);

    let ker = Subspace::kernel(&a);
    let img = Subspace::image(&a);
    println!("kernel dim {}, image dim {}", ker.dim(), img.dim());
    assert_eq!(ker.dim() + img.dim(), a.cols());

    let b = ExactMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
    let inv = b.inverse()?;
    println!("det {} inverse\n{}", b.det(), inv);
    assert!(b.mul(&inv).is_identity());

    let x = Subspace::span_vectors(3, &[vec![rat(1, 1), rat(0, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1), rat(0, 1)]]);
    let y = Subspace::span_vectors(3, &[vec![rat(0, 1), rat(1, 1), rat(1, 1)]]);
    let (meet, sum) = (x.intersect(&y)?, x.sum(&y)?);
    println!("dim(X∩Y) = {}, dim(X+Y) = {}", meet.dim(), sum.dim());
    Ok((meet.dim(), sum.dim()))
}

fn main() -> froblat::Result<()> {
    run_example().map(|_| ())
}
