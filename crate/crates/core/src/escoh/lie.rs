//! Bases of the complexified tangent spaces `p_2 ⊂ gl_2` and `p_3 ⊂ gl_3`,
//! and the adjoint action of rotations on them.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::orthrep::{is_orthogonal, matrix_m, OrthWeight3};
use crate::scalar::GaussianRational;

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

/// `H = diag(1, -1)/2`.
pub fn h_matrix() -> QMatrix {
    let h = GaussianRational::from_frac(1, 2);
    QMatrix::diagonal(&[h.clone(), -h])
}

/// `E = antidiag(1, 1)/2`.
pub fn e_matrix() -> QMatrix {
    let h = GaussianRational::from_frac(1, 2);
    let z = GaussianRational::zero();
    QMatrix::from_rows(vec![vec![z.clone(), h.clone()], vec![h, z]]).expect("2x2")
}

/// The real symmetric matrices `A1, A2, N1, N2, N3`.
pub fn real_basis_gl3() -> [QMatrix; 5] {
    [
        QMatrix::from_int_rows(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]),
        QMatrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]),
        QMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]),
        QMatrix::from_int_rows(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]]),
        QMatrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
    ]
}

/// The basis `X_2, X_1, X_0, X_{-1}, X_{-2}`:
/// `A1 + iN1, N2 + iN3, A2, N2 - iN3, A1 - iN1`.
pub fn lie_basis_gl3() -> [QMatrix; 5] {
    let [a1, a2, n1, n2, n3] = real_basis_gl3();
    let i = g(0, 1);
    let mi = g(0, -1);
    [
        a1.add(&n1.scale_by(&i)).expect("3x3"),
        n2.add(&n3.scale_by(&i)).expect("3x3"),
        a2,
        n2.add(&n3.scale_by(&mi)).expect("3x3"),
        a1.add(&n1.scale_by(&mi)).expect("3x3"),
    ]
}

/// Scalars `c_j` with `(z1,z2,z3) X_j ᵗ(z1,z2,z3) ≡ c_j v_j` modulo the sphere:
/// `(1, 2, -3, -2, 1)`.
pub fn harmonic_scales() -> [GaussianRational; 5] {
    [g(1, 0), g(2, 0), g(-3, 0), g(-2, 0), g(1, 0)]
}

/// Coordinates of a matrix in a basis of matrices, by exact least squares on
/// the entries; errors when the matrix is not in the span.
pub fn coordinates_in(basis: &[QMatrix], m: &QMatrix) -> Result<Vec<GaussianRational>> {
    let n = m.rows() * m.cols();
    let flat = |a: &QMatrix| -> Vec<GaussianRational> {
        (0..a.rows()).flat_map(|r| (0..a.cols()).map(move |c| (r, c))).map(|(r, c)| a.get(r, c).clone()).collect()
    };
    let cols: Vec<Vec<GaussianRational>> = basis.iter().map(flat).collect();
    let target = flat(m);
    let aug = QMatrix::from_fn(n, basis.len() + 1, |r, c| if c < basis.len() { cols[c][r].clone() } else { target[r].clone() });
    let (red, pivots) = aug.rref();
    if pivots.contains(&basis.len()) {
        return Err(Error::InvalidParams("matrix is not in the span of the basis".into()));
    }
    let mut out = vec![GaussianRational::zero(); basis.len()];
    for (r, &p) in pivots.iter().enumerate() {
        out[p] = red.get(r, basis.len()).clone();
    }
    Ok(out)
}

fn conjugation_matrix(basis: &[QMatrix], u: &QMatrix) -> Result<QMatrix> {
    let ui = u.inverse()?;
    let n = basis.len();
    let mut out = QMatrix::zeros(n, n);
    for (c, x) in basis.iter().enumerate() {
        let y = u.mul(x)?.mul(&ui)?;
        for (r, v) in coordinates_in(basis, &y)?.into_iter().enumerate() {
            out.set(r, c, v);
        }
    }
    Ok(out)
}

fn check_rotation(u: &QMatrix, n: usize) -> Result<()> {
    if u.rows() != n || !is_orthogonal(u) || u.det()? != GaussianRational::from_int(1) {
        return Err(Error::NotOrthogonal);
    }
    Ok(())
}

/// Matrix of `X -> u X u⁻¹` on `p_2` in the basis `(E, H)`.
pub fn ad_gl2(u: &QMatrix) -> Result<QMatrix> {
    check_rotation(u, 2)?;
    conjugation_matrix(&[e_matrix(), h_matrix()], u)
}

/// Matrix of `X -> u X u⁻¹` on `p_3` in the basis `X_2, ..., X_{-2}`.
///
/// It equals `D⁻¹ M_{(2,0)}(u) D` with `D = diag(c_j)` from
/// [`harmonic_scales`]; see [`ad_gl3_harmonic`] for the normalised basis in
/// which the action is exactly `M_{(2,0)}(u)`.
pub fn ad_gl3(u: &QMatrix) -> Result<QMatrix> {
    check_rotation(u, 3)?;
    conjugation_matrix(&lie_basis_gl3(), u)
}

/// Matrix of conjugation in the rescaled basis `X_j / c_j`, which matches the
/// O(3) representation matrix `M_{(2,0)}(u)`.
pub fn ad_gl3_harmonic(u: &QMatrix) -> Result<QMatrix> {
    check_rotation(u, 3)?;
    let c = harmonic_scales();
    let basis: Vec<QMatrix> = lie_basis_gl3()
        .iter()
        .zip(&c)
        .map(|(x, s)| x.scale_by(&s.inverse().expect("nonzero scale")))
        .collect();
    conjugation_matrix(&basis, u)
}

/// `M_{(2,0)}(u)`, the matrix through which the wedge calculus acts.
pub fn ad_matrix(u: &QMatrix) -> Result<QMatrix> {
    check_rotation(u, 3)?;
    matrix_m(&OrthWeight3 { lambda: 2, delta: 0 }, u)
}
