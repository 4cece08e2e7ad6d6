//! Polynomial models of irreducible algebraic representations of GL(2) and
//! GL(3), and the differential operators realising the branching GL(3) to GL(2).
//!
//! A GL(3) representation of weight `(w1p, w1m, w2)` is the space of
//! polynomials in `X, Y, Z; A, B, C`, bi-homogeneous of degrees
//! `(w1p, w1m)`, that are annihilated by the contraction
//! `d²/dXdA + d²/dYdB + d²/dZdC`. The group acts by
//! `det(g)^w2 P((X,Y,Z) g; (A,B,C) ᵗg⁻¹)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::poly::{Exponents, MultiPoly, VariableSet};
use crate::scalar::GaussianRational;

/// The variables `X, Y, Z, A, B, C` of the GL(3) model.
pub fn gl3_vars() -> VariableSet {
    static V: OnceLock<VariableSet> = OnceLock::new();
    V.get_or_init(|| VariableSet::new(&["X", "Y", "Z", "A", "B", "C"])).clone()
}

/// The variables `X, Y` of the GL(2) model.
pub fn gl2_vars() -> VariableSet {
    static V: OnceLock<VariableSet> = OnceLock::new();
    V.get_or_init(|| VariableSet::new(&["X", "Y"])).clone()
}

/// Weight `(n1, n2)` of the GL(2) model `Sym^n1 ⊗ det^n2`, of highest weight
/// `(n1 + n2, n2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightGL2 {
    pub n1: i64,
    pub n2: i64,
}

impl WeightGL2 {
    /// Validated constructor.
    pub fn new(n1: i64, n2: i64) -> Result<Self> {
        if n1 < 0 {
            return Err(Error::InvalidWeight(format!("n1 = {n1} must be nonnegative")));
        }
        Ok(WeightGL2 { n1, n2 })
    }

    /// Dimension `n1 + 1`.
    pub fn dim(&self) -> usize {
        self.n1 as usize + 1
    }
}

/// Weight `(w1p, w1m, w2)` of the GL(3) model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightGL3 {
    pub w1p: i64,
    pub w1m: i64,
    pub w2: i64,
}

impl WeightGL3 {
    /// Validated constructor.
    pub fn new(w1p: i64, w1m: i64, w2: i64) -> Result<Self> {
        if w1p < 0 || w1m < 0 {
            return Err(Error::InvalidWeight(format!("({w1p}, {w1m}, {w2}) needs w1p, w1m >= 0")));
        }
        Ok(WeightGL3 { w1p, w1m, w2 })
    }

    /// The diagonal weight `(w, w, w)`.
    pub fn diagonal(w: i64) -> Result<Self> {
        Self::new(w, w, w)
    }

    /// True for weights of the form `(w, w, w)`.
    pub fn is_diagonal(&self) -> bool {
        self.w1p == self.w1m && self.w1m == self.w2
    }
}

/// Closed-form dimension `(w1p+1)(w1m+1)(w1p+w1m+2)/2`.
pub fn dim_l3(w: &WeightGL3) -> u64 {
    let (p, m) = (w.w1p as u64, w.w1m as u64);
    (p + 1) * (m + 1) * (p + m + 2) / 2
}

/// An element of the GL(3) model: a polynomial in the contraction kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct RepElementGL3 {
    poly: MultiPoly,
    weight: WeightGL3,
}

impl RepElementGL3 {
    /// Checks bi-homogeneity and membership in the contraction kernel.
    pub fn new(poly: MultiPoly, weight: WeightGL3) -> Result<Self> {
        let poly = poly.embed(&gl3_vars())?;
        check_bidegree(&poly, &weight)?;
        if !contraction(&poly, &weight)?.is_zero() {
            return Err(Error::InvalidParams("polynomial is not annihilated by the contraction".into()));
        }
        Ok(RepElementGL3 { poly, weight })
    }

    /// The underlying polynomial.
    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// The weight.
    pub fn weight(&self) -> WeightGL3 {
        self.weight
    }

    /// The same polynomial with a different Tate twist `w2`.
    pub fn twist(&self, w2: i64) -> Self {
        RepElementGL3 { poly: self.poly.clone(), weight: WeightGL3 { w2, ..self.weight } }
    }
}

fn check_bidegree(p: &MultiPoly, w: &WeightGL3) -> Result<()> {
    if p.is_zero() {
        return Ok(());
    }
    if !p.is_homogeneous_in(&[0, 1, 2], w.w1p as u32) || !p.is_homogeneous_in(&[3, 4, 5], w.w1m as u32) {
        return Err(Error::DegreeMismatch(format!("expected bi-degree ({}, {})", w.w1p, w.w1m)));
    }
    Ok(())
}

/// The contraction `d²/dXdA + d²/dYdB + d²/dZdC` on bi-degree `(w1p, w1m)`.
pub fn contraction(p: &MultiPoly, w: &WeightGL3) -> Result<MultiPoly> {
    let p = p.embed(&gl3_vars())?;
    check_bidegree(&p, w)?;
    let mut out = MultiPoly::zero(&gl3_vars());
    for k in 0..3 {
        out = &out + &p.derivative_idx(k, 1).derivative_idx(k + 3, 1);
    }
    Ok(out)
}

/// Monomials of bi-degree `(p, m)` in `X, Y, Z; A, B, C`, in lex order.
pub fn bidegree_monomials(p: u32, m: u32) -> Vec<Exponents> {
    let left = compositions(p, 3);
    let right = compositions(m, 3);
    let mut out = Vec::with_capacity(left.len() * right.len());
    for l in &left {
        for r in &right {
            out.push(l.iter().chain(r).copied().collect());
        }
    }
    out.sort();
    out
}

/// Exponent vectors of length `parts` summing to `total`.
pub fn compositions(total: u32, parts: usize) -> Vec<Exponents> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Matrix of the contraction from bi-degree `(p, m)` to `(p-1, m-1)` in the
/// monomial bases.
pub fn contraction_matrix(p: u32, m: u32) -> QMatrix {
    let src = bidegree_monomials(p, m);
    if p == 0 || m == 0 {
        return QMatrix::zeros(0, src.len());
    }
    let dst = bidegree_monomials(p - 1, m - 1);
    let index: HashMap<&Exponents, usize> = dst.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let mut out = QMatrix::zeros(dst.len(), src.len());
    for (c, e) in src.iter().enumerate() {
        for k in 0..3 {
            if e[k] > 0 && e[k + 3] > 0 {
                let mut t = e.clone();
                t[k] -= 1;
                t[k + 3] -= 1;
                let r = index[&t];
                let v = out.get(r, c) + GaussianRational::from_int((e[k] * e[k + 3]) as i64);
                out.set(r, c, v);
            }
        }
    }
    out
}

/// Dimension of the contraction kernel by exact linear algebra.
pub fn kernel_dimension(p: u32, m: u32) -> usize {
    let mat = contraction_matrix(p, m);
    mat.cols() - mat.rank()
}

type BasisCache = HashMap<(u32, u32), Arc<Vec<MultiPoly>>>;

/// A basis of the GL(3) model of bi-degree `(p, m)`, computed once and cached.
pub fn kernel_basis(p: u32, m: u32) -> Arc<Vec<MultiPoly>> {
    static CACHE: OnceLock<Mutex<BasisCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().expect("basis cache").get(&(p, m)) {
        return b.clone();
    }
    let mons = bidegree_monomials(p, m);
    let vars = gl3_vars();
    let basis: Vec<MultiPoly> = if p == 0 || m == 0 {
        mons.iter().map(|e| MultiPoly::monomial(&vars, e.clone(), GaussianRational::one())).collect()
    } else {
        contraction_matrix(p, m)
            .kernel()
            .into_iter()
            .map(|v| MultiPoly::from_terms(&vars, mons.iter().cloned().zip(v)))
            .collect()
    };
    let basis = Arc::new(basis);
    cache.lock().expect("basis cache").insert((p, m), basis.clone());
    basis
}

/// The image of `p` under `x -> x g` for a row of variables `x`, i.e. each
/// variable `x_j` is replaced by `sum_i x_i g[i][j]`.
fn row_substitution(names: &[&str], g: &QMatrix, vars: &VariableSet) -> Result<Vec<(String, MultiPoly)>> {
    let mut out = Vec::with_capacity(names.len());
    for (j, name) in names.iter().enumerate() {
        let mut img = MultiPoly::zero(vars);
        for (i, src) in names.iter().enumerate() {
            img = &img + &MultiPoly::var(vars, src)?.scale(g.get(i, j));
        }
        out.push((name.to_string(), img));
    }
    Ok(out)
}

fn check_square(g: &QMatrix, n: usize) -> Result<GaussianRational> {
    if g.rows() != n || g.cols() != n {
        return Err(Error::Shape(format!("expected a {n}x{n} matrix")));
    }
    let d = g.det()?;
    if d.is_zero() {
        return Err(Error::Singular("group element".into()));
    }
    Ok(d)
}

/// Applies `det(g)^w2 P((X,Y,Z) g; (A,B,C) ᵗg⁻¹)`.
pub fn act_gl3(g: &QMatrix, p: &RepElementGL3) -> Result<RepElementGL3> {
    let d = check_square(g, 3)?;
    let vars = gl3_vars();
    let mut bind = row_substitution(&["X", "Y", "Z"], g, &vars)?;
    let gi_t = g.inverse()?.transpose();
    bind.extend(row_substitution(&["A", "B", "C"], &gi_t, &vars)?);
    let refs: Vec<(&str, MultiPoly)> = bind.iter().map(|(n, q)| (n.as_str(), q.clone())).collect();
    let out = p.poly.substitute(&refs, &vars)?.scale(&d.pow(p.weight.w2)?);
    Ok(RepElementGL3 { poly: out, weight: p.weight })
}

/// Applies `det(g)^n2 P((X,Y) g)` to a polynomial in `X, Y`.
pub fn act_gl2(g: &QMatrix, p: &MultiPoly, n: &WeightGL2) -> Result<MultiPoly> {
    let d = check_square(g, 2)?;
    let vars = gl2_vars();
    let p = p.embed(&vars)?;
    if !p.is_zero() && !p.is_homogeneous_in(&[0, 1], n.n1 as u32) {
        return Err(Error::DegreeMismatch(format!("expected degree {} in X, Y", n.n1)));
    }
    let bind = row_substitution(&["X", "Y"], g, &vars)?;
    let refs: Vec<(&str, MultiPoly)> = bind.iter().map(|(n, q)| (n.as_str(), q.clone())).collect();
    Ok(p.substitute(&refs, &vars)?.scale(&d.pow(n.n2)?))
}

/// The embedding `g -> diag(g, 1)` of GL(2) into GL(3).
pub fn embed_gl2(g: &QMatrix) -> QMatrix {
    QMatrix::block_diag(&[g.clone(), QMatrix::identity(1)])
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(1/k!l!) d^{k+l}P/dZ^k dC^l` evaluated at `(X, Y, 0; -Y, X, 0)`.
pub fn nabla_kl(k: i64, l: i64, p: &RepElementGL3) -> Result<MultiPoly> {
    let w = p.weight;
    if k < 0 || l < 0 || k > w.w1p || l > w.w1m {
        return Err(Error::OutOfRange(format!("(k, l) = ({k}, {l}) for weight ({}, {})", w.w1p, w.w1m)));
    }
    let d = p.poly.derivative_idx(2, k as u32).derivative_idx(5, l as u32);
    let scale = GaussianRational::from_rational(BigRational::new(BigInt::one(), factorial(k) * factorial(l)));
    let xy = gl2_vars();
    let x = MultiPoly::var_idx(&xy, 0);
    let y = MultiPoly::var_idx(&xy, 1);
    let zero = MultiPoly::zero(&xy);
    let images = [x.clone(), y.clone(), zero.clone(), -&y, x, zero];
    Ok(d.eval_in(&images).embed(&xy)?.scale(&scale))
}

/// The index set of GL(2) weights occurring in the restriction of weight `w`,
/// ordered by `n1` then `n2`.
pub fn xi2_set(w: &WeightGL3) -> Vec<WeightGL2> {
    let mut out = Vec::new();
    for n2 in (w.w2 - w.w1m)..=w.w2 {
        for s in w.w2..=(w.w1p + w.w2) {
            let n1 = s - n2;
            if n1 >= 0 {
                out.push(WeightGL2 { n1, n2 });
            }
        }
    }
    out.sort();
    out
}

/// The operator indices `(k, l)` attached to `n`.
pub fn nabla_indices(n: &WeightGL2, w: &WeightGL3) -> Result<(i64, i64)> {
    let k = w.w1p + w.w2 - n.n1 - n.n2;
    let l = w.w1m - w.w2 + n.n2;
    if n.n1 < 0 || k < 0 || k > w.w1p || l < 0 || l > w.w1m {
        return Err(Error::OutOfRange(format!("({}, {}) is not in the branching set", n.n1, n.n2)));
    }
    Ok((k, l))
}

/// The branching operator onto the GL(2) component of weight `n`.
pub fn nabla_n(n: &WeightGL2, p: &RepElementGL3) -> Result<MultiPoly> {
    let (k, l) = nabla_indices(n, &p.weight)?;
    nabla_kl(k, l, p)
}

/// Rank of the joint map `P -> (nabla_kl P)_{k,l}` on the model of weight `w`.
pub fn branching_rank(w: &WeightGL3) -> Result<usize> {
    let basis = kernel_basis(w.w1p as u32, w.w1m as u32);
    let mut columns: Vec<Vec<GaussianRational>> = Vec::with_capacity(basis.len());
    for b in basis.iter() {
        let el = RepElementGL3 { poly: b.clone(), weight: *w };
        let mut col = Vec::new();
        for n in xi2_set(w) {
            let img = nabla_n(&n, &el)?;
            for i in 0..=n.n1 as u32 {
                col.push(img.coeff(&[i, n.n1 as u32 - i]));
            }
        }
        columns.push(col);
    }
    let rows = columns.first().map_or(0, Vec::len);
    let m = QMatrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone());
    Ok(m.rank())
}

/// Summary of the branching data of a weight.
#[derive(Clone, Debug, Serialize)]
pub struct BranchAudit {
    /// The GL(3) weight.
    pub weight: WeightGL3,
    /// The GL(2) weights in the restriction.
    pub xi2: Vec<WeightGL2>,
    /// The closed-form dimension.
    pub dim_formula: u64,
    /// The dimension of the contraction kernel.
    pub dim_kernel: usize,
    /// The sum of the GL(2) dimensions over `xi2`.
    pub dim_sum: u64,
    /// The rank of the joint branching map.
    pub nabla_rank: usize,
}

/// Computes Ξ₂(w) and checks the dimension count three ways.
pub fn branch_audit(w: &WeightGL3) -> Result<BranchAudit> {
    let xi2 = xi2_set(w);
    Ok(BranchAudit {
        weight: *w,
        dim_sum: xi2.iter().map(|n| n.dim() as u64).sum(),
        xi2,
        dim_formula: dim_l3(w),
        dim_kernel: kernel_basis(w.w1p as u32, w.w1m as u32).len(),
        nabla_rank: branching_rank(w)?,
    })
}
