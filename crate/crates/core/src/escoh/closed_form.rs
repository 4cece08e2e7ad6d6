//! Closed formulas for the entries of `𝒫` and for their images under the
//! branching operators, written with `S = -X + iY` and `T = X + iY`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::escoh::script_p::weight_w;
use crate::glrep::{gl2_vars, gl3_vars, nabla_indices, WeightGL2, WeightGL3};
use crate::poly::{MultiPoly, VariableSet};
use crate::scalar::GaussianRational;

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// The coefficient of `X^i Y^j Z^k` in `(X + Y + Z)^e`.
pub fn trinomial(e: i64, i: i64, j: i64, k: i64) -> BigInt {
    if e < 0 || i < 0 || j < 0 || k < 0 || i + j + k != e {
        return BigInt::zero();
    }
    factorial(e) / (factorial(i) * factorial(j) * factorial(k))
}

/// `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `C(w, n) = binom(w, n1 + n2 - w) binom(w, w - n2)`.
pub fn double_binomial(w: i64, n: &WeightGL2) -> BigInt {
    binomial(w, n.n1 + n.n2 - w) * binomial(w, w - n.n2)
}

fn s_t(vars: &VariableSet, x: usize, y: usize) -> (MultiPoly, MultiPoly) {
    let xv = MultiPoly::var_idx(vars, x);
    let yv = MultiPoly::var_idx(vars, y).scale(&GaussianRational::i());
    (&yv - &xv, &yv + &xv)
}

/// `S = -X + iY` and `T = X + iY` in the variables `X, Y`.
pub fn s_and_t() -> (MultiPoly, MultiPoly) {
    s_t(&gl2_vars(), 0, 1)
}

fn gr(n: BigInt) -> GaussianRational {
    GaussianRational::from_bigint(n)
}

fn check_indices(lambda3: i64, alpha: i64, beta: i64) -> Result<i64> {
    let w = weight_w(lambda3)?;
    if alpha.abs() > lambda3 || beta.abs() > 3 {
        return Err(Error::OutOfRange(format!("(α, β) = ({alpha}, {beta}) for λ₃ = {lambda3}")));
    }
    Ok(w)
}

/// The entry `𝒫_{α, β}` from its double trinomial sum.
pub fn closed_form_p_entry(lambda3: i64, alpha: i64, beta: i64) -> Result<MultiPoly> {
    let w = check_indices(lambda3, alpha, beta)?;
    let vars = gl3_vars();
    let (sx, tx) = s_t(&vars, 0, 1);
    let (sa, ta) = s_t(&vars, 3, 4);
    let z = MultiPoly::var_idx(&vars, 2);
    let c_var = MultiPoly::var_idx(&vars, 5);
    let quarter = GaussianRational::from_frac(-1, 4);
    let two = GaussianRational::from_int(2);
    let mut out = MultiPoly::zero(&vars);
    for j in alpha..=alpha + w {
        for a in (j - w)..=j {
            let k = w + alpha + a - 2 * j;
            if k < 0 {
                continue;
            }
            let h1 = trinomial(w, j - a, j - alpha, k);
            if h1.is_zero() {
                continue;
            }
            for b in -beta..=(w - beta) {
                let c = w - a - beta - 2 * b;
                if c < 0 {
                    continue;
                }
                let h2 = trinomial(w, b + a, b + beta, c);
                if h2.is_zero() {
                    continue;
                }
                let sign = GaussianRational::sign_power(j - alpha + b + beta);
                let coeff = two.pow(alpha - beta)? * quarter.pow(j + b)? * gr(&h1 * &h2) * sign;
                let left = &(&sx.pow((j - a) as u32) * &tx.pow((j - alpha) as u32)) * &z.pow(k as u32);
                let right = &(&sa.pow((b + a) as u32) * &ta.pow((b + beta) as u32)) * &c_var.pow(c as u32);
                out = &out + &(&left * &right).scale(&coeff);
            }
        }
    }
    Ok(out)
}

fn check_branch(w: i64, n: &WeightGL2) -> Result<()> {
    nabla_indices(n, &WeightGL3 { w1p: w, w1m: w, w2: w }).map(|_| ())
}

/// The image of `𝒫_{α, β}` under the branching operator of weight `n`, from
/// its single trinomial sum.
pub fn closed_form_nabla_p(lambda3: i64, n: &WeightGL2, alpha: i64, beta: i64) -> Result<MultiPoly> {
    let w = check_indices(lambda3, alpha, beta)?;
    check_branch(w, n)?;
    let vars = gl2_vars();
    let (n1, n2) = (n.n1, n.n2);
    if (n1 + alpha - beta).is_odd() {
        return Ok(MultiPoly::zero(&vars));
    }
    let es = (n1 + alpha - beta) / 2;
    let et = (n1 - alpha + beta) / 2;
    if es < 0 || et < 0 {
        return Ok(MultiPoly::zero(&vars));
    }
    let p = (n1 + alpha + beta) / 2;
    let q = (n1 - alpha - beta) / 2;
    let mut sum = BigInt::zero();
    for b in -beta..=(w - beta) {
        let h1 = trinomial(w, b + p + n2 - w, -b + q, 2 * w - n1 - n2);
        let h2 = trinomial(w, -(b + beta) + w - n2, b + beta, n2);
        let t = h1 * h2;
        if b.is_odd() {
            sum -= t;
        } else {
            sum += t;
        }
    }
    let pref = GaussianRational::from_int(2).pow(-n1)?
        * GaussianRational::sign_power(w + alpha)
        * GaussianRational::power_of_i(n2 + w)
        * gr(sum);
    let (s, t) = s_and_t();
    Ok((&s.pow(es as u32) * &t.pow(et as u32)).scale(&pref))
}

/// The single-term form of [`closed_form_nabla_p`] when `α - β = ±n1`.
pub fn closed_form_b3(lambda3: i64, n: &WeightGL2, alpha: i64, beta: i64) -> Result<MultiPoly> {
    let w = check_indices(lambda3, alpha, beta)?;
    check_branch(w, n)?;
    let (n1, n2) = (n.n1, n.n2);
    let (s, t) = s_and_t();
    let pref = GaussianRational::from_frac(-1, 2).pow(n1)?
        * GaussianRational::power_of_i(n2 + w)
        * gr(double_binomial(w, n));
    if alpha - beta == -n1 {
        Ok(t.pow(n1 as u32).scale(&(pref * GaussianRational::sign_power(n2))))
    } else if alpha - beta == n1 {
        Ok(s.pow(n1 as u32).scale(&(pref * GaussianRational::sign_power(w))))
    } else {
        Err(Error::OutOfRange(format!("α - β = {} is not ±{n1}", alpha - beta)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trinomial_examples() {
        assert_eq!(trinomial(2, 1, 1, 0), BigInt::from(2));
        assert_eq!(trinomial(3, 1, 1, 1), BigInt::from(6));
        assert_eq!(trinomial(3, 1, 1, 0), BigInt::zero());
    }

    #[test]
    fn weight_three_is_trivial() {
        let one = MultiPoly::one(&gl3_vars());
        assert_eq!(closed_form_p_entry(3, 2, 2).unwrap(), one);
        assert!(closed_form_p_entry(3, 2, 1).unwrap().is_zero());
    }
}
