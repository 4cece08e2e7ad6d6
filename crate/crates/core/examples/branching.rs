//! Restricts GL(3) models to GL(2) and audits the dimension count.

use branchkit::glrep::{branch_audit, WeightGL3};

fn main() -> branchkit::Result<()> {
    for (p, m) in [(1, 1), (2, 1), (3, 2)] {
        let w = WeightGL3::new(p, m, 0)?;
        let a = branch_audit(&w)?;
        let xi: Vec<String> = a.xi2.iter().map(|n| format!("({}, {})", n.n1, n.n2)).collect();
        println!("w = ({p}, {m}, 0): dim {} = rank {}; components {}", a.dim_formula, a.nabla_rank, xi.join(" "));
    }
    Ok(())
}
