//! The matrix `𝒫(X,Y,Z,A,B,C)` of size `(2λ₃+1) x 7` defined by expanding
//! `(X z1 + Y z2 + Z z3)^w (A z1 + B z2 + C z3)^w v_β` (with `β` running over
//! the weight-3 basis and `w = (λ₃ - 3)/2`) on the v-basis of weight `λ₃`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::glrep::{act_gl3, contraction, gl3_vars, RepElementGL3, WeightGL3};
use crate::matrix::{Matrix, QMatrix};
use crate::orthrep::{matrix_m, monomial_coordinates, v3, z_vars, OrthWeight3};
use crate::poly::{MultiPoly, VariableSet};

/// The matrix `𝒫` for an odd `λ₃ >= 3` and sign `δ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScriptP {
    lambda3: i64,
    delta: u8,
    /// Rows `α = λ₃, ..., -λ₃`; columns `β = 3, ..., -3`.
    entries: Matrix<MultiPoly>,
}

/// `w = (λ₃ - 3)/2` after validating `λ₃`.
pub fn weight_w(lambda3: i64) -> Result<i64> {
    if lambda3 < 3 || lambda3 % 2 == 0 {
        return Err(Error::InvalidWeight(format!("λ₃ = {lambda3} must be odd and at least 3")));
    }
    Ok((lambda3 - 3) / 2)
}

fn joint_vars() -> VariableSet {
    VariableSet::new(&["X", "Y", "Z", "A", "B", "C", "z1", "z2", "z3"])
}

/// Builds `𝒫` by brute-force expansion and sphere reduction.
pub fn build_script_p(lambda3: i64, delta: u8) -> Result<ScriptP> {
    let w = weight_w(lambda3)?;
    if delta > 1 {
        return Err(Error::InvalidWeight(format!("δ = {delta}")));
    }
    let jv = joint_vars();
    let var = |k: usize| MultiPoly::var_idx(&jv, k);
    let lin_x = &(&(&var(0) * &var(6)) + &(&var(1) * &var(7))) + &(&var(2) * &var(8));
    let lin_a = &(&(&var(3) * &var(6)) + &(&var(4) * &var(7))) + &(&var(5) * &var(8));
    let base = &lin_x.pow(w as u32) * &lin_a.pow(w as u32);
    let gl3 = gl3_vars();
    let rows = (2 * lambda3 + 1) as usize;
    let mut entries = Matrix::from_fn(rows, 7, |_, _| MultiPoly::zero(&gl3));
    for (col, beta) in (-3..=3i64).rev().enumerate() {
        let vb = v3(3, beta)?.embed(&jv)?;
        let full = &base * &vb;
        for (ze, coeff) in full.split(&z_vars(), &gl3)? {
            let coords = monomial_coordinates(lambda3, &ze);
            for (row, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let cur = entries.get(row, col).clone();
                entries.set(row, col, &cur + &coeff.scale(c));
            }
        }
    }
    Ok(ScriptP { lambda3, delta, entries })
}

impl ScriptP {
    /// `λ₃`.
    pub fn lambda3(&self) -> i64 {
        self.lambda3
    }

    /// `δ`.
    pub fn delta(&self) -> u8 {
        self.delta
    }

    /// `w = (λ₃ - 3)/2`.
    pub fn w(&self) -> i64 {
        (self.lambda3 - 3) / 2
    }

    /// The GL(3) weight `(w, w, w)` carried by every entry.
    pub fn entry_weight(&self) -> WeightGL3 {
        let w = self.w();
        WeightGL3 { w1p: w, w1m: w, w2: w }
    }

    /// Entry `𝒫_{α, β}`.
    pub fn entry(&self, alpha: i64, beta: i64) -> Result<&MultiPoly> {
        if alpha.abs() > self.lambda3 || beta.abs() > 3 {
            return Err(Error::OutOfRange(format!("(α, β) = ({alpha}, {beta})")));
        }
        Ok(self.entries.get((self.lambda3 - alpha) as usize, (3 - beta) as usize))
    }

    /// Entry `𝒫_{α, β}` as an element of the GL(3) model.
    pub fn element(&self, alpha: i64, beta: i64) -> Result<RepElementGL3> {
        RepElementGL3::new(self.entry(alpha, beta)?.clone(), self.entry_weight())
    }

    /// The whole matrix.
    pub fn matrix(&self) -> &Matrix<MultiPoly> {
        &self.entries
    }

    /// True when every entry lies in the contraction kernel.
    pub fn all_harmonic(&self) -> Result<bool> {
        let wt = self.entry_weight();
        for r in 0..self.entries.rows() {
            for c in 0..self.entries.cols() {
                if !contraction(self.entries.get(r, c), &wt)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True when every coefficient lies in `Z[1/2, i]`.
    pub fn coefficients_dyadic(&self) -> bool {
        (0..self.entries.rows())
            .flat_map(|r| (0..self.entries.cols()).map(move |c| (r, c)))
            .all(|(r, c)| self.entries.get(r, c).terms().all(|(_, x)| x.in_z_half_i()))
    }

    /// Checks `ϱ(u) 𝒫 = M_λ(u)⁻¹ 𝒫 M_{(3,0)}(u)` exactly for a rotation `u`.
    pub fn equivariance_check(&self, u: &QMatrix) -> Result<bool> {
        let wt = self.entry_weight();
        let gl3 = gl3_vars();
        let lift = |m: &QMatrix| m.map(|c| MultiPoly::constant(&gl3, c.clone()));
        let ml = matrix_m(&OrthWeight3 { lambda: self.lambda3, delta: self.delta }, u)?;
        let m3 = matrix_m(&OrthWeight3 { lambda: 3, delta: 0 }, u)?;
        let rhs = lift(&ml.inverse()?).mul(&self.entries)?.mul(&lift(&m3))?;
        for r in 0..self.entries.rows() {
            for c in 0..self.entries.cols() {
                let el = RepElementGL3::new(self.entries.get(r, c).clone(), wt)?;
                if !(act_gl3(u, &el)?.poly() - rhs.get(r, c)).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_weight_is_identity() {
        let p = build_script_p(3, 0).unwrap();
        for a in -3..=3 {
            for b in -3..=3 {
                let e = p.entry(a, b).unwrap();
                let expect = if a == b { MultiPoly::one(&gl3_vars()) } else { MultiPoly::zero(&gl3_vars()) };
                assert_eq!(e, &expect, "entry ({a}, {b})");
            }
        }
    }

    #[test]
    fn rejects_even_weight() {
        assert!(build_script_p(4, 0).is_err());
        assert!(build_script_p(1, 0).is_err());
    }
}
