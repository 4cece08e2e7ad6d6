//! Critical points, Hodge types and the constants of the main identity.

use branchkit::lfactors::{gamma_factor, main_constant, PiParams};

fn main() -> branchkit::Result<()> {
    for (l2, l3) in [(2, 4), (2, 8), (4, 6)] {
        let pp = PiParams::new(l2, l3, 0)?;
        println!("(l2, l3) = ({l2}, {l3}): L∞ = {}", gamma_factor(&pp.phi_pair()));
        for m in pp.critical_points() {
            let c = main_constant(&pp, m)?;
            println!("  m = {m}: parity {}, scalar {}, Hodge types {:?}", c.parity, c.scalar, pp.hodge_types(m));
        }
    }
    Ok(())
}
