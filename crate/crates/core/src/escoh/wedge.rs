//! Exterior powers of a five-dimensional dual space, the matrices `P̃ⁱ`, `Pⁱ`
//! and the forms `ω_3, ..., ω_{-3}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::escoh::lie::ad_matrix;
use crate::matrix::{subsets, Matrix, QMatrix};
use crate::orthrep::{matrix_m, OrthWeight3};
use crate::ring::Ring;
use crate::scalar::GaussianRational;

/// Dimension of the underlying one-form space.
pub const DIM: usize = 5;

/// An element of `Λⁱ V*` with `dim V = 5`, stored on the lexicographic basis
/// of increasing index tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct WedgeForm<T> {
    degree: usize,
    coeffs: Vec<T>,
}

impl<T: Ring> WedgeForm<T> {
    /// Builds a form; the coefficient count must be `binom(5, degree)`.
    pub fn new(degree: usize, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != basis(degree).len() {
            return Err(Error::Shape(format!("{} coefficients for degree {degree}", coeffs.len())));
        }
        Ok(WedgeForm { degree, coeffs })
    }

    /// The zero form.
    pub fn zero(degree: usize) -> Self {
        WedgeForm { degree, coeffs: vec![T::zero(); basis(degree).len()] }
    }

    /// The basis one-form with index `k`.
    pub fn one_form(k: usize) -> Self {
        let mut f = Self::zero(1);
        f.coeffs[k] = T::one();
        f
    }

    /// Degree.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients on the lexicographic basis.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of the basis element with the given increasing indices.
    pub fn coeff(&self, idx: &[usize]) -> T {
        basis(self.degree).iter().position(|b| b == idx).map_or_else(T::zero, |k| self.coeffs[k].clone())
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degrees differ");
        WedgeForm { degree: self.degree, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    /// Multiplication by a ring element.
    pub fn scale(&self, s: &T) -> Self {
        WedgeForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Self) -> Self {
        let d = self.degree + other.degree;
        let target = basis(d);
        let mut coeffs = vec![T::zero(); target.len()];
        if d <= DIM {
            for (a, ca) in basis(self.degree).iter().zip(&self.coeffs) {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in basis(other.degree).iter().zip(&other.coeffs) {
                    if cb.is_zero() || a.iter().any(|x| b.contains(x)) {
                        continue;
                    }
                    let mut merged: Vec<usize> = a.iter().chain(b).copied().collect();
                    let sign = sort_sign(&mut merged);
                    let k = target.iter().position(|t| *t == merged).expect("sorted tuple");
                    let term = ca.clone() * cb.clone();
                    coeffs[k] = if sign > 0 { coeffs[k].clone() + term } else { coeffs[k].clone() - term };
                }
            }
        }
        WedgeForm { degree: d, coeffs }
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Increasing `degree`-tuples of `0..5` in lexicographic order.
pub fn basis(degree: usize) -> Vec<Vec<usize>> {
    subsets(DIM, degree)
}

/// Sorts in place and returns the sign of the permutation.
fn sort_sign(v: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

/// Renders a form with the given names for the basis one-forms.
pub fn render<T: Ring + fmt::Display>(f: &WedgeForm<T>, names: &[&str]) -> String {
    let mut parts = Vec::new();
    for (idx, c) in basis(f.degree).iter().zip(&f.coeffs) {
        if c.is_zero() {
            continue;
        }
        let w: Vec<&str> = idx.iter().map(|&k| names[k]).collect();
        parts.push(format!("({c})*{}", w.join("^")));
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Names of `dX_2, ..., dX_{-2}`.
pub const DX_NAMES: [&str; 5] = ["dX2", "dX1", "dX0", "dX-1", "dX-2"];

fn q(n: i64, d: i64) -> GaussianRational {
    GaussianRational::from_frac(n, d)
}

fn rat_matrix(rows: &[[(i64, i64); 10]]) -> QMatrix {
    QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&(n, d)| q(n, d)).collect()).collect()).expect("10 columns")
}

/// The change of basis `P̃ⁱ` block-diagonalising `Λⁱ` of `M_{(2,0)}` into
/// `M_{(1,0)} ⊕ M_{(3,0)}`, for `i = 2, 3`.
pub fn p_tilde(i: usize) -> Result<QMatrix> {
    const O: (i64, i64) = (0, 1);
    match i {
        2 => Ok(rat_matrix(&[
            [O, O, O, (1, 1), O, O, O, O, O, O],
            [O, O, O, O, (1, 2), O, O, O, O, O],
            [(-1, 5), O, O, O, O, (1, 5), O, O, O, O],
            [O, (-1, 10), O, O, O, O, (1, 20), O, O, O],
            [(3, 5), O, O, O, O, (2, 5), O, O, O, O],
            [O, (1, 5), O, O, O, O, (2, 5), O, O, O],
            [O, O, (-1, 5), O, O, O, O, (1, 5), O, O],
            [O, O, (3, 5), O, O, O, O, (2, 5), O, O],
            [O, O, O, O, O, O, O, O, (1, 2), O],
            [O, O, O, O, O, O, O, O, O, (1, 1)],
        ])),
        3 => Ok(rat_matrix(&[
            [O, O, O, (3, 1), O, O, O, O, O, O],
            [O, O, O, O, (1, 1), O, O, O, O, O],
            [(1, 1), O, O, O, O, (1, 5), O, O, O, O],
            [(-2, 1), O, O, O, O, (3, 5), O, O, O, O],
            [O, (1, 2), O, O, O, O, (3, 10), O, O, O],
            [O, O, (1, 1), O, O, O, O, (1, 5), O, O],
            [O, (-4, 1), O, O, O, O, (3, 5), O, O, O],
            [O, O, (-2, 1), O, O, O, O, (3, 5), O, O],
            [O, O, O, O, O, O, O, O, (1, 1), O],
            [O, O, O, O, O, O, O, O, O, (3, 1)],
        ])),
        _ => Err(Error::OutOfRange(format!("wedge degree {i} (expected 2 or 3)"))),
    }
}

/// The `10 x 7` matrix `Pⁱ` expressing `ω_3, ..., ω_{-3}` on the dX-wedges.
pub fn p_matrix(i: usize) -> Result<QMatrix> {
    let entries: &[(usize, usize, i64, i64)] = match i {
        2 => &[(0, 0, 1, 1), (1, 1, 2, 1), (2, 2, 3, 1), (3, 3, 4, 1), (4, 2, 1, 1), (5, 3, 2, 1), (6, 4, 3, 1), (7, 4, 1, 1), (8, 5, 2, 1), (9, 6, 1, 1)],
        3 => &[(0, 0, 1, 3), (1, 1, 1, 1), (2, 2, 2, 1), (3, 2, 1, 1), (4, 3, 8, 3), (5, 4, 2, 1), (6, 3, 1, 3), (7, 4, 1, 1), (8, 5, 1, 1), (9, 6, 1, 3)],
        _ => return Err(Error::OutOfRange(format!("wedge degree {i} (expected 2 or 3)"))),
    };
    let mut m = QMatrix::zeros(10, 7);
    for &(r, c, n, d) in entries {
        m.set(r, c, q(n, d));
    }
    Ok(m)
}

/// `ᵗ(P̃ⁱ)⁻¹` with its first three columns removed.
pub fn p_from_p_tilde(i: usize) -> Result<QMatrix> {
    let t = p_tilde(i)?.transpose().inverse()?;
    let rows: Vec<usize> = (0..10).collect();
    let cols: Vec<usize> = (3..10).collect();
    Ok(t.submatrix(&rows, &cols))
}

/// The matrix `M̃ⁱ(u)`: the `i`-th compound of `M_{(2,0)}(u)`.
pub fn wedge_ad(i: usize, u: &QMatrix) -> Result<QMatrix> {
    if !(1..=3).contains(&i) {
        return Err(Error::OutOfRange(format!("wedge degree {i}")));
    }
    Ok(ad_matrix(u)?.compound(i))
}

/// Checks `P̃⁻¹ M̃ⁱ(u) P̃ = M_{(1,0)}(u) ⊕ M_{(3,0)}(u)` exactly.
pub fn p_tilde_block_check(i: usize, u: &QMatrix) -> Result<bool> {
    let pt = p_tilde(i)?;
    let lhs = pt.inverse()?.mul(&wedge_ad(i, u)?)?.mul(&pt)?;
    let m1 = matrix_m(&OrthWeight3 { lambda: 1, delta: 0 }, u)?;
    let m3 = matrix_m(&OrthWeight3 { lambda: 3, delta: 0 }, u)?;
    Ok(lhs == QMatrix::block_diag(&[m1, m3]))
}

/// The forms `ω_3, ..., ω_{-3}` of degree `i`: the columns of `Pⁱ`.
pub fn omega_basis(i: usize) -> Result<Vec<WedgeForm<GaussianRational>>> {
    let p = p_matrix(i)?;
    (0..7).map(|c| WedgeForm::new(i, p.col(c))).collect()
}

/// Checks that the contragredient action `ᵗM̃ⁱ(u)⁻¹` on coefficient vectors
/// carries `(ω_3 .. ω_{-3})` to `(ω_3 .. ω_{-3}) ᵗM_{(3,0)}(u)⁻¹`.
pub fn omega_equivariance_check(i: usize, u: &QMatrix) -> Result<bool> {
    let p = p_matrix(i)?;
    let dual = wedge_ad(i, u)?.transpose().inverse()?;
    let m3 = matrix_m(&OrthWeight3 { lambda: 3, delta: 0 }, u)?;
    Ok(dual.mul(&p)? == p.mul(&m3.transpose().inverse()?)?)
}

/// Applies a matrix to the coefficient vector of a form.
pub fn transform<T: Ring>(m: &Matrix<T>, f: &WedgeForm<T>) -> Result<WedgeForm<T>> {
    WedgeForm::new(f.degree, m.mul_vec(&f.coeffs)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_is_antisymmetric() {
        let a = WedgeForm::<GaussianRational>::one_form(0);
        let b = WedgeForm::<GaussianRational>::one_form(3);
        let ab = a.wedge(&b);
        let ba = b.wedge(&a);
        assert_eq!(ab.add(&ba), WedgeForm::zero(2));
        assert!(a.wedge(&a).is_zero());
    }

    #[test]
    fn omega_examples() {
        let w2 = omega_basis(2).unwrap();
        assert_eq!(w2[0].coeff(&[0, 1]), GaussianRational::from_int(1));
        assert_eq!(w2[3].coeff(&[0, 4]), GaussianRational::from_int(4));
        assert_eq!(w2[3].coeff(&[1, 3]), GaussianRational::from_int(2));
        let w3 = omega_basis(3).unwrap();
        assert_eq!(w3[0].coeff(&[0, 1, 2]), GaussianRational::from_frac(1, 3));
    }

    #[test]
    fn p_is_p_tilde_with_columns_removed() {
        assert_eq!(p_from_p_tilde(2).unwrap(), p_matrix(2).unwrap());
        assert_eq!(p_from_p_tilde(3).unwrap(), p_matrix(3).unwrap());
    }
}
