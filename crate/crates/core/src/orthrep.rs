//! Irreducible representations of O(2) and O(3) on polynomial models.
//!
//! The O(3) module of weight `(λ, δ)` is the space of degree-`λ` polynomials
//! in `z1, z2, z3` modulo multiples of `z1² + z2² + z3²`, with `u` acting by
//! `det(u)^δ P((z1, z2, z3) u)`. Cosets are represented by their unique
//! representative of `z3`-degree at most one. The basis
//! `v_{±μ} = (±z1 + i z2)^μ z3^{λ-μ}` is ordered `v_λ, v_{λ-1}, ..., v_{-λ}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::glrep::{compositions, gl2_vars};
use crate::matrix::QMatrix;
use crate::poly::{Exponents, MultiPoly, VariableSet};
use crate::scalar::GaussianRational;

/// The variables `z1, z2, z3`.
pub fn z_vars() -> VariableSet {
    static V: OnceLock<VariableSet> = OnceLock::new();
    V.get_or_init(|| VariableSet::new(&["z1", "z2", "z3"])).clone()
}

/// An O(2) weight in `{(0, 1)} ∪ {(λ, 0) : λ >= 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrthWeight2 {
    pub lambda: i64,
    pub delta: u8,
}

impl OrthWeight2 {
    /// Validated constructor.
    pub fn new(lambda: i64, delta: u8) -> Result<Self> {
        let ok = (lambda == 0 && delta == 1) || (lambda >= 0 && delta == 0);
        if !ok {
            return Err(Error::InvalidWeight(format!("({lambda}, {delta}) is not an O(2) weight")));
        }
        Ok(OrthWeight2 { lambda, delta })
    }

    /// Dimension: 1 for `λ = 0`, else 2.
    pub fn dim(&self) -> usize {
        if self.lambda == 0 {
            1
        } else {
            2
        }
    }
}

/// An O(3) weight `(λ, δ)` with `λ >= 0` and `δ ∈ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrthWeight3 {
    pub lambda: i64,
    pub delta: u8,
}

impl OrthWeight3 {
    /// Validated constructor.
    pub fn new(lambda: i64, delta: u8) -> Result<Self> {
        if lambda < 0 || delta > 1 {
            return Err(Error::InvalidWeight(format!("({lambda}, {delta}) is not an O(3) weight")));
        }
        Ok(OrthWeight3 { lambda, delta })
    }

    /// Dimension `2λ + 1`.
    pub fn dim(&self) -> usize {
        2 * self.lambda as usize + 1
    }
}

/// A coset in the O(3) model, held in reduced form.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicElement {
    poly: MultiPoly,
    weight: OrthWeight3,
}

impl HarmonicElement {
    /// Reduces `p` and attaches the weight; `p` must have degree `λ`.
    pub fn new(p: &MultiPoly, weight: OrthWeight3) -> Result<Self> {
        let poly = reduce_mod_sphere(p)?;
        if !poly.is_zero() && poly.total_degree() != Some(weight.lambda as u32) {
            return Err(Error::DegreeMismatch(format!("expected degree {}", weight.lambda)));
        }
        Ok(HarmonicElement { poly, weight })
    }

    /// The reduced representative.
    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// The weight.
    pub fn weight(&self) -> OrthWeight3 {
        self.weight
    }

    /// Coordinates in the ordered v-basis.
    pub fn coordinates(&self) -> Vec<GaussianRational> {
        coordinates(&self.poly, self.weight.lambda).expect("reduced element of matching degree")
    }
}

/// Rewrites `z3² -> -z1² - z2²` until every monomial has `z3`-degree at most one.
pub fn reduce_mod_sphere(p: &MultiPoly) -> Result<MultiPoly> {
    let vars = z_vars();
    let p = p.embed(&vars)?;
    if !p.is_zero() && p.total_degree().is_some_and(|d| !p.is_homogeneous_in(&[0, 1, 2], d)) {
        return Err(Error::DegreeMismatch("input is not homogeneous".into()));
    }
    let q = &(&MultiPoly::var_idx(&vars, 0).pow(2) + &MultiPoly::var_idx(&vars, 1).pow(2)).scale(&GaussianRational::from_int(-1));
    let mut powers = vec![MultiPoly::one(&vars)];
    let mut out = MultiPoly::zero(&vars);
    for (e, c) in p.terms() {
        let half = (e[2] / 2) as usize;
        while powers.len() <= half {
            let next = powers.last().unwrap() * q;
            powers.push(next);
        }
        let m = MultiPoly::monomial(&vars, vec![e[0], e[1], e[2] % 2], c.clone());
        out = &out + &(&m * &powers[half]);
    }
    Ok(out)
}

/// The reduced monomials of degree `λ` (`z3`-degree at most one), in lex order.
pub fn reduced_monomials(lambda: i64) -> Vec<Exponents> {
    let mut out: Vec<Exponents> = compositions(lambda as u32, 3).into_iter().filter(|e| e[2] <= 1).collect();
    out.sort();
    out
}

/// Index in the ordered basis `v_λ, ..., v_{-λ}` of `v_j`.
pub fn basis_index(lambda: i64, j: i64) -> usize {
    (lambda - j) as usize
}

/// The basis element `v_j = (±z1 + i z2)^{|j|} z3^{λ-|j|}` (sign of `j`), reduced.
pub fn v3(lambda: i64, j: i64) -> Result<MultiPoly> {
    if lambda < 0 || j.abs() > lambda {
        return Err(Error::OutOfRange(format!("index {j} for λ = {lambda}")));
    }
    let vars = z_vars();
    let sign = GaussianRational::from_int(if j >= 0 { 1 } else { -1 });
    let base = &MultiPoly::var_idx(&vars, 0).scale(&sign) + &MultiPoly::var_idx(&vars, 1).scale(&GaussianRational::i());
    let p = &base.pow(j.unsigned_abs() as u32) * &MultiPoly::var_idx(&vars, 2).pow((lambda - j.abs()) as u32);
    reduce_mod_sphere(&p)
}

/// The O(2) basis element `(±X + i Y)^μ` (sign of `j`, `|j| = μ`).
pub fn v2(mu: &OrthWeight2, j: i64) -> Result<MultiPoly> {
    if j.abs() != mu.lambda {
        return Err(Error::OutOfRange(format!("index {j} for O(2) weight λ = {}", mu.lambda)));
    }
    let vars = gl2_vars();
    let sign = GaussianRational::from_int(if j >= 0 { 1 } else { -1 });
    let base = &MultiPoly::var_idx(&vars, 0).scale(&sign) + &MultiPoly::var_idx(&vars, 1).scale(&GaussianRational::i());
    Ok(base.pow(mu.lambda as u32))
}

struct BasisChange {
    index: HashMap<Exponents, usize>,
    inverse: QMatrix,
}

fn basis_change(lambda: i64) -> Arc<BasisChange> {
    static CACHE: OnceLock<Mutex<HashMap<i64, Arc<BasisChange>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().expect("basis cache").get(&lambda) {
        return b.clone();
    }
    let mons = reduced_monomials(lambda);
    let index: HashMap<Exponents, usize> = mons.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    let n = mons.len();
    let mut b = QMatrix::zeros(n, n);
    for (col, j) in (-lambda..=lambda).rev().enumerate() {
        let v = v3(lambda, j).expect("index in range");
        for (e, c) in v.terms() {
            b.set(index[e], col, c.clone());
        }
    }
    let inverse = b.inverse().expect("the v-basis spans the reduced monomials");
    let bc = Arc::new(BasisChange { index, inverse });
    cache.lock().expect("basis cache").insert(lambda, bc.clone());
    bc
}

/// Coordinates of a degree-`λ` polynomial (reduced on the fly) in the v-basis.
pub fn coordinates(p: &MultiPoly, lambda: i64) -> Result<Vec<GaussianRational>> {
    let r = reduce_mod_sphere(p)?;
    let bc = basis_change(lambda);
    let mut vec = vec![GaussianRational::zero(); bc.index.len()];
    for (e, c) in r.terms() {
        let k = *bc.index.get(e).ok_or_else(|| Error::DegreeMismatch(format!("monomial of wrong degree for λ = {lambda}")))?;
        vec[k] = c.clone();
    }
    bc.inverse.mul_vec(&vec)
}

/// Coordinates of the monomial `z^e` of degree `λ` in the v-basis.
pub fn monomial_coordinates(lambda: i64, e: &[u32]) -> Vec<GaussianRational> {
    let p = MultiPoly::monomial(&z_vars(), e.to_vec(), GaussianRational::one());
    coordinates(&p, lambda).expect("monomial of degree λ")
}

/// True when `ᵗu u = 1`.
pub fn is_orthogonal(u: &QMatrix) -> bool {
    u.rows() == u.cols() && u.transpose().mul(u).is_ok_and(|m| m == QMatrix::identity(u.rows()))
}

/// Substitutes `(z1, z2, z3) u` into a polynomial in `z1, z2, z3`.
pub fn substitute_row(p: &MultiPoly, u: &QMatrix) -> Result<MultiPoly> {
    let vars = z_vars();
    let images: Vec<MultiPoly> = (0..3)
        .map(|j| (0..3).fold(MultiPoly::zero(&vars), |acc, i| &acc + &MultiPoly::var_idx(&vars, i).scale(u.get(i, j))))
        .collect();
    let r = p.eval_in(&images);
    Ok(if r.vars().is_empty() { MultiPoly::constant(&vars, r.coeff(&[])) } else { r })
}

/// The matrix of `u` on the O(3) model of weight `w` in the v-basis.
pub fn matrix_m(w: &OrthWeight3, u: &QMatrix) -> Result<QMatrix> {
    if u.rows() != 3 || !is_orthogonal(u) {
        return Err(Error::NotOrthogonal);
    }
    let d = u.det()?.pow(w.delta as i64)?;
    let n = w.dim();
    let mut out = QMatrix::zeros(n, n);
    for (col, j) in (-w.lambda..=w.lambda).rev().enumerate() {
        let img = substitute_row(&v3(w.lambda, j)?, u)?.scale(&d);
        for (row, c) in coordinates(&img, w.lambda)?.into_iter().enumerate() {
            out.set(row, col, c);
        }
    }
    Ok(out)
}

/// The rotation `(1 - S)(1 + S)⁻¹` for `S = [[0,a,b],[-a,0,c],[-b,-c,0]]`.
pub fn cayley_so3(a: &BigRational, b: &BigRational, c: &BigRational) -> QMatrix {
    let g = |q: &BigRational| GaussianRational::from_rational(q.clone());
    let z = GaussianRational::zero();
    let s = QMatrix::from_rows(vec![
        vec![z.clone(), g(a), g(b)],
        vec![-g(a), z.clone(), g(c)],
        vec![-g(b), -g(c), z],
    ])
    .expect("3x3");
    let id = QMatrix::identity(3);
    let plus = id.add(&s).expect("same shape");
    let minus = id.sub(&s).expect("same shape");
    minus.mul(&plus.inverse().expect("1 + S is invertible for real skew S")).expect("3x3")
}

/// The rotation `[[1-t², 2t], [-2t, 1-t²]] / (1 + t²)`.
pub fn cayley_so2(t: &BigRational) -> QMatrix {
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let den = &one + t * t;
    let c = GaussianRational::from_rational((&one - t * t) / &den);
    let s = GaussianRational::from_rational(&two * t / &den);
    QMatrix::from_rows(vec![vec![c.clone(), s.clone()], vec![-s, c]]).expect("2x2")
}

/// A random rational with numerator and denominator drawn from small ranges.
pub fn random_rational<R: Rng>(rng: &mut R, span: i64) -> BigRational {
    let n = rng.random_range(-span..=span);
    let d = rng.random_range(1..=span);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A random rational rotation from the Cayley parametrisation.
pub fn random_cayley<R: Rng>(rng: &mut R) -> QMatrix {
    let a = random_rational(rng, 5);
    let b = random_rational(rng, 5);
    let c = random_rational(rng, 5);
    cayley_so3(&a, &b, &c)
}

/// The embedding `u -> diag(u, 1)` of O(2) into O(3).
pub fn embed_o2(u: &QMatrix) -> QMatrix {
    QMatrix::block_diag(&[u.clone(), QMatrix::identity(1)])
}

/// The O(2) weights occurring in the restriction of `w`: `(0, δ)` and
/// `(μ, 0)` for `1 <= μ <= λ`.
pub fn sigma(w: &OrthWeight3) -> Vec<OrthWeight2> {
    let mut out = vec![OrthWeight2 { lambda: 0, delta: w.delta }];
    out.extend((1..=w.lambda).map(|mu| OrthWeight2 { lambda: mu, delta: 0 }));
    out
}

fn check_sigma(mu: &OrthWeight2, w: &OrthWeight3) -> Result<()> {
    if !sigma(w).contains(mu) {
        return Err(Error::OutOfRange(format!("({}, {}) does not occur in the restriction", mu.lambda, mu.delta)));
    }
    Ok(())
}

/// Coordinates of a polynomial in `X, Y` on the O(2) basis `(v_μ, v_{-μ})`
/// (a single coordinate when `μ = 0`).
pub fn o2_coordinates(mu: &OrthWeight2, p: &MultiPoly) -> Result<Vec<GaussianRational>> {
    let vars = gl2_vars();
    let p = p.embed(&vars)?;
    if mu.lambda == 0 {
        return match p.as_constant() {
            Some(c) => Ok(vec![c]),
            None if p.is_zero() => Ok(vec![GaussianRational::zero()]),
            None => Err(Error::DegreeMismatch("expected a constant".into())),
        };
    }
    let l = mu.lambda as u32;

    let vp = v2(mu, mu.lambda)?;
    let vm = v2(mu, -mu.lambda)?;
    let m = QMatrix::from_rows(vec![
        vec![vp.coeff(&[l, 0]), vm.coeff(&[l, 0])],
        vec![vp.coeff(&[0, l]), vm.coeff(&[0, l])],
    ])?;
    let xy = m.solve(&[p.coeff(&[l, 0]), p.coeff(&[0, l])])?;
    let back = &vp.scale(&xy[0]) + &vm.scale(&xy[1]);
    if back != p {
        return Err(Error::InvalidParams("polynomial is not in the span of v_μ, v_{-μ}".into()));
    }
    Ok(xy)
}

/// The O(2)-equivariant embedding `v_{±μ} -> (±1)^δ v_{±μ}` into the model of `w`.
pub fn o3_branch_embed(mu: &OrthWeight2, w: &OrthWeight3, p: &MultiPoly) -> Result<HarmonicElement> {
    check_sigma(mu, w)?;
    let coords = o2_coordinates(mu, p)?;
    let vars = z_vars();
    let mut out = MultiPoly::zero(&vars);
    if mu.lambda == 0 {
        out = v3(w.lambda, 0)?.scale(&coords[0]);
    } else {
        let sign = GaussianRational::sign_power(w.delta as i64);
        out = &out + &v3(w.lambda, mu.lambda)?.scale(&coords[0]);
        out = &out + &v3(w.lambda, -mu.lambda)?.scale(&(&coords[1] * &sign));
    }
    HarmonicElement::new(&out, *w)
}

/// The left inverse of [`o3_branch_embed`] that kills the other components.
pub fn o3_branch_project(w: &OrthWeight3, mu: &OrthWeight2, h: &HarmonicElement) -> Result<MultiPoly> {
    check_sigma(mu, w)?;
    let c = h.coordinates();
    let vars = gl2_vars();
    if mu.lambda == 0 {
        return Ok(MultiPoly::constant(&vars, c[basis_index(w.lambda, 0)].clone()));
    }
    let sign = GaussianRational::sign_power(w.delta as i64);
    let a = c[basis_index(w.lambda, mu.lambda)].clone();
    let b = &c[basis_index(w.lambda, -mu.lambda)] * &sign;
    Ok(&v2(mu, mu.lambda)?.scale(&a) + &v2(mu, -mu.lambda)?.scale(&b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn reduction_examples() {
        let z = z_vars();
        let p = |s: &str| MultiPoly::parse(s, &z).unwrap();
        assert_eq!(reduce_mod_sphere(&p("z3^2")).unwrap(), p("-z1^2 - z2^2"));
        assert_eq!(reduce_mod_sphere(&p("z1*z2")).unwrap(), p("z1*z2"));
        assert!(reduce_mod_sphere(&p("z1^3 + z1*z2^2 + z1*z3^2")).unwrap().is_zero());
    }

    #[test]
    fn basis_examples() {
        let z = z_vars();
        let p = |s: &str| MultiPoly::parse(s, &z).unwrap();
        assert_eq!(v3(1, 0).unwrap(), p("z3"));
        assert_eq!(v3(2, -2).unwrap(), p("z1^2 - 2*i*z1*z2 - z2^2"));
        assert_eq!(v3(2, 0).unwrap(), p("-z1^2 - z2^2"));
    }

    #[test]
    fn cayley_quarter_turn() {
        let u = cayley_so3(&q(1), &q(0), &q(0));
        assert_eq!(u, QMatrix::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]));
    }

    #[test]
    fn quarter_turn_is_diagonal() {
        let u = QMatrix::from_int_rows(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 1]]);
        let m = matrix_m(&OrthWeight3::new(1, 0).unwrap(), &u).unwrap();
        let i = GaussianRational::i();
        assert_eq!(m, QMatrix::diagonal(&[i.clone(), GaussianRational::one(), -i]));
    }
}
