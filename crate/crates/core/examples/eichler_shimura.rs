//! Builds the matrix 𝒫 for λ₃ = 9 and evaluates the cup-product pairings at
//! the critical points of (l2, l3) = (2, 8).

use num_traits::Zero;

use branchkit::escoh::pairing::{cup_constants, cup_pairing_check, cup_pairings};
use branchkit::escoh::script_p::build_script_p;

fn main() -> branchkit::Result<()> {
    let sp = build_script_p(9, 0)?;
    println!("𝒫 for λ₃ = 9: coefficients in Z[1/2, i]: {}", sp.coefficients_dyadic());
    for m in [5, 6] {
        let c = cup_constants(9, 0, 2, m)?;
        println!("m = {m}: C = {}, prefactor {}, sign {}", c.c, c.prefactor, c.sign_flip);
        for (alpha, minus, plus) in cup_pairings(&sp, 2, m)? {
            if !minus.is_zero() || !plus.is_zero() {
                println!("  α = {alpha}: [∇𝒫_(α,-2), S] = {minus}, [∇𝒫_(α,2), T] = {plus}");
            }
        }
        println!("  closed form holds: {}", cup_pairing_check(&sp, 2, m)?);
    }
    Ok(())
}
