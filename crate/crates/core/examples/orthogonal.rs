//! Builds the O(3) matrices M_λ(u) at a rational rotation and checks that
//! they multiply like the rotations do.

use num_bigint::BigInt;
use num_rational::BigRational;

use branchkit::orthrep::{cayley_so3, matrix_m, OrthWeight3};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn main() -> branchkit::Result<()> {
    let u = cayley_so3(&q(1, 2), &q(0, 1), &q(-1, 3));
    let v = cayley_so3(&q(2, 1), &q(1, 4), &q(0, 1));
    let w = OrthWeight3::new(2, 0)?;
    let m = matrix_m(&w, &u)?;
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|x| x.to_string()).collect();
        println!("[{}]", row.join(", "));
    }
    let lhs = matrix_m(&w, &u.mul(&v)?)?;
    let rhs = m.mul(&matrix_m(&w, &v)?)?;
    println!("M(uv) = M(u) M(v): {}", lhs == rhs);
    Ok(())
}
