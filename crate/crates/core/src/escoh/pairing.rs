//! The GL(2)-equivariant pairing on `Sym^n1` and the constants of the cup
//! product of the two Eichler-Shimura classes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::escoh::closed_form::{binomial, double_binomial, s_and_t};
use crate::escoh::script_p::ScriptP;
use crate::glrep::{gl2_vars, nabla_n, WeightGL2};
use crate::lfactors::PiParams;
use crate::poly::MultiPoly;
use crate::scalar::GaussianRational;

/// The bilinear pairing with
/// `[X^i Y^{n1-i}, X^j Y^{n1-j}] = (-1)^i / binom(n1, i)` when `i + j = n1`
/// and zero otherwise.
pub fn pairing_n(n: &WeightGL2, p: &MultiPoly, q: &MultiPoly) -> Result<GaussianRational> {
    let vars = gl2_vars();
    let p = p.embed(&vars)?;
    let q = q.embed(&vars)?;
    let d = n.n1 as u32;
    for f in [&p, &q] {
        if !f.is_zero() && !f.is_homogeneous_in(&[0, 1], d) {
            return Err(Error::DegreeMismatch(format!("expected degree {d} in X, Y")));
        }
    }
    let mut acc = GaussianRational::zero();
    for (e, c) in p.terms() {
        let i = e[0];
        let partner = q.coeff(&[d - i, i]);
        if partner.is_zero() {
            continue;
        }
        let w = GaussianRational::sign_power(i as i64) * GaussianRational::from_bigint(binomial(d as i64, i as i64)).inverse()?;
        acc += c * &partner * w;
    }
    Ok(acc)
}

/// The constants attached to a critical point `m`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CupConstants {
    /// `binom(l3/2-1, m-l3/2-1) binom(l3/2-1, l3/2+l2-m)`.
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub c: BigInt,
    /// `i^{l3/2 + 2 l2 - m - 1}`.
    #[serde(serialize_with = "crate::report::ser_scalar")]
    pub prefactor: GaussianRational,
    /// `(-1)^{m + δ + 1 + w}` with `w = l3/2 - 1`.
    pub sign_flip: i8,
    /// The branching weight `n_m = (l2 - 1, m - l2 - 1)`.
    pub n_m: WeightGL2,
}

/// The branching weight `n_m = (l2 - 1, m - l2 - 1)`.
pub fn n_m(l2: i64, m: i64) -> WeightGL2 {
    WeightGL2 { n1: l2 - 1, n2: m - l2 - 1 }
}

/// Constants of the cup product for `λ₃ = l3 + 1`, at a critical `m`.
pub fn cup_constants(lambda3: i64, delta: u8, l2: i64, m: i64) -> Result<CupConstants> {
    let l3 = lambda3 - 1;
    let pp = PiParams::new(l2, l3, delta)?;
    pp.require_critical(m)?;
    let w = l3 / 2 - 1;
    let n = n_m(l2, m);
    Ok(CupConstants {
        c: double_binomial(w, &n),
        prefactor: GaussianRational::power_of_i(l3 / 2 + 2 * l2 - m - 1),
        sign_flip: if (m + delta as i64 + 1 + w) % 2 == 0 { 1 } else { -1 },
        n_m: n,
    })
}

/// The pairings `[∇^{n_m} 𝒫_{α,-2}, S^{n1}]` and `[∇^{n_m} 𝒫_{α,2}, T^{n1}]`
/// for every row `α` of `𝒫`.
pub fn cup_pairings(p: &ScriptP, l2: i64, m: i64) -> Result<Vec<(i64, GaussianRational, GaussianRational)>> {
    let n = n_m(l2, m);
    let (s, t) = s_and_t();
    let sn = s.pow(n.n1 as u32);
    let tn = t.pow(n.n1 as u32);
    let mut out = Vec::new();
    for alpha in (-p.lambda3()..=p.lambda3()).rev() {
        let minus = pairing_n(&n, &nabla_n(&n, &p.element(alpha, -2)?)?, &sn)?;
        let plus = pairing_n(&n, &nabla_n(&n, &p.element(alpha, 2)?)?, &tn)?;
        out.push((alpha, minus, plus));
    }
    Ok(out)
}

/// Checks the two pairing identities behind the cup-product constants:
/// the first pairing is `δ_{α,-λ2} i^{n1-n2+w} C`, the second
/// `δ_{α,λ2} i^{-n1+n2-w} C`, with `λ2 = l2 + 1`.
pub fn cup_pairing_check(p: &ScriptP, l2: i64, m: i64) -> Result<bool> {
    let n = n_m(l2, m);
    let w = p.w();
    let c = GaussianRational::from_bigint(double_binomial(w, &n));
    let lambda2 = l2 + 1;
    for (alpha, minus, plus) in cup_pairings(p, l2, m)? {
        let em = if alpha == -lambda2 { GaussianRational::power_of_i(n.n1 - n.n2 + w) * c.clone() } else { GaussianRational::zero() };
        let ep = if alpha == lambda2 { GaussianRational::power_of_i(-n.n1 + n.n2 - w) * c.clone() } else { GaussianRational::zero() };
        if minus != em || plus != ep {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_pairings() {
        let v = gl2_vars();
        let x = MultiPoly::var_idx(&v, 0);
        let y = MultiPoly::var_idx(&v, 1);
        let n = WeightGL2 { n1: 1, n2: 0 };
        assert_eq!(pairing_n(&n, &x, &y).unwrap(), GaussianRational::from_int(-1));
        let (s, t) = s_and_t();
        assert_eq!(pairing_n(&n, &t, &s).unwrap(), GaussianRational::from_ints(0, -2));
        let n2 = WeightGL2 { n1: 2, n2: 0 };
        assert!(pairing_n(&n2, &x.pow(2), &x.pow(2)).unwrap().is_zero());
    }
}
