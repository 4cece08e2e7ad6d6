//! Iwasawa coordinates of a matrix and the exact pullback identities.

use nalgebra::Matrix3;

use branchkit::geom::{df_matrix_check, iota_report, iwasawa_gl3, q_matrix_verify};

fn main() -> branchkit::Result<()> {
    let g = Matrix3::new(2.0, 1.0, 0.0, 0.0, 1.0, 0.5, -1.0, 0.0, 3.0);
    let d = iwasawa_gl3(&g, 1e-12)?;
    println!("coords {:?}, scale {:.6}, residual {:.2e}", d.coords.as_array(), d.coords.scale, d.reconstruction_residual);
    let df = df_matrix_check(1e-5)?;
    println!("dF: derived matrix within {:.1e}, displayed matrix off by {:.1}", df.deviation_derived, df.deviation_displayed);
    println!("Q² exact: {}, Q³ exact: {}", q_matrix_verify(2)?, q_matrix_verify(3)?);
    let r = iota_report()?;
    println!("ι*ω±3 = ι*ω±1 = 0: {}, ι*ω0: {}, ι*ω±2 ∧ ξ: {}", r.odd_vanish, r.omega0, r.haar);
    Ok(())
}
