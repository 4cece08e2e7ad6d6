//! Iwasawa coordinates on GL(3, R), their differentials at the identity, the
//! left-translation Jacobian, the matrices `Qⁱ` expressing `ω_j` on
//! coordinate forms, and the pullback of these forms to GL(2).

use num_rational::BigRational;
use nalgebra::{Complex, Matrix3, SMatrix};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::escoh::lie::{lie_basis_gl3, real_basis_gl3};
use crate::escoh::wedge::p_matrix;
use crate::matrix::{Matrix, QMatrix};
use crate::poly::{MultiPoly, VariableSet};
use crate::ratfun::RationalFunction;
use crate::ring::Ring;
use crate::scalar::GaussianRational;

/// Matrix of rational functions.
pub type RfMatrix = Matrix<RationalFunction>;

/// Coordinates `(y1, y2, x1, x2, x3)` and the positive scalar of the
/// decomposition `g = F(y, x) · scale · k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IwasawaCoords {
    /// `y1 > 0`.
    pub y1: f64,
    /// `y2 > 0`.
    pub y2: f64,
    /// `x1`.
    pub x1: f64,
    /// `x2`.
    pub x2: f64,
    /// `x3`.
    pub x3: f64,
    /// `scale > 0`.
    pub scale: f64,
}

impl IwasawaCoords {
    /// `(y1, y2, x1, x2, x3)`.
    pub fn as_array(&self) -> [f64; 5] {
        [self.y1, self.y2, self.x1, self.x2, self.x3]
    }

    /// `F = [[y1 y2, y1 x2, x3], [0, y1, x1], [0, 0, 1]]`.
    pub fn f_matrix(&self) -> Matrix3<f64> {
        f_matrix(&self.as_array())
    }
}

/// `F` at coordinates `(y1, y2, x1, x2, x3)`.
pub fn f_matrix(c: &[f64; 5]) -> Matrix3<f64> {
    let [y1, y2, x1, x2, x3] = *c;
    Matrix3::new(y1 * y2, y1 * x2, x3, 0.0, y1, x1, 0.0, 0.0, 1.0)
}

/// The decomposition `g = F · scale · k` with `k` orthogonal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IwasawaDecomposition {
    /// Coordinates and scale.
    pub coords: IwasawaCoords,
    /// The orthogonal factor.
    pub k: [[f64; 3]; 3],
    /// `max |ᵗk k - 1|`.
    pub orthogonality_residual: f64,
    /// `|F scale k - g| / |g|` in the Frobenius norm.
    pub reconstruction_residual: f64,
}

/// Iwasawa coordinates of an invertible `g` from the closed formulas.
pub fn iwasawa_gl3(g: &Matrix3<f64>, tol: f64) -> Result<IwasawaDecomposition> {
    if g.determinant().abs() <= tol {
        return Err(Error::Singular(format!("|det g| <= {tol}")));
    }
    let r = |i: usize| g.row(i).transpose();
    let (top, mid, bot) = (r(0), r(1), r(2));
    let n = bot.dot(&bot);
    let x1 = mid.dot(&bot) / n;
    let x3 = top.dot(&bot) / n;
    let rad1 = mid.dot(&mid) / n - x1 * x1;
    if rad1 <= 0.0 {
        return Err(Error::Numeric(format!("negative radicand {rad1} for y1")));
    }
    let y1 = rad1.sqrt();
    let x2 = (top.dot(&mid) / n - x1 * x3) / (y1 * y1);
    let rad2 = top.dot(&top) / n - x3 * x3 - x2 * x2 * y1 * y1;
    if rad2 <= 0.0 {
        return Err(Error::Numeric(format!("negative radicand {rad2} for y2")));
    }
    let y2 = rad2.sqrt() / y1;
    let coords = IwasawaCoords { y1, y2, x1, x2, x3, scale: n.sqrt() };
    let f = coords.f_matrix() * coords.scale;
    let finv = f.try_inverse().ok_or_else(|| Error::Singular("F is singular".into()))?;
    let k = finv * g;
    let orth = (k.transpose() * k - Matrix3::identity()).abs().max();
    if orth > tol.max(1e-9) {
        return Err(Error::Numeric(format!("k is not orthogonal (residual {orth})")));
    }
    let recon = (f * k - g).norm() / g.norm();
    Ok(IwasawaDecomposition {
        coords,
        k: [[k[(0, 0)], k[(0, 1)], k[(0, 2)]], [k[(1, 0)], k[(1, 1)], k[(1, 2)]], [k[(2, 0)], k[(2, 1)], k[(2, 2)]]],
        orthogonality_residual: orth,
        reconstruction_residual: recon,
    })
}

fn coords_of(g: &Matrix3<f64>) -> Result<[f64; 5]> {
    Ok(iwasawa_gl3(g, 1e-12)?.coords.as_array())
}

/// A random matrix with entries in `[-1, 1]` and condition number below
/// `max_cond`.
pub fn random_well_conditioned<R: Rng>(rng: &mut R, max_cond: f64) -> Matrix3<f64> {
    loop {
        let g = Matrix3::from_fn(|_, _| rng.random_range(-1.0..=1.0));
        let sv = g.singular_values();
        let (hi, lo) = (sv.max(), sv.min());
        if lo > 0.0 && hi / lo < max_cond {
            return g;
        }
    }
}

fn to_f64(m: &QMatrix) -> Matrix3<f64> {
    Matrix3::from_fn(|r, c| m.get(r, c).to_f64_pair().0)
}

fn central_difference(dir: &Matrix3<f64>, h: f64) -> Result<[f64; 5]> {
    let plus = coords_of(&(dir * h).exp())?;
    let minus = coords_of(&(dir * -h).exp())?;
    Ok(std::array::from_fn(|k| (plus[k] - minus[k]) / (2.0 * h)))
}

/// Derivatives at `1₃` of the coordinates along `X_2, ..., X_{-2}` by central
/// differences of `t -> coords(exp(t X))`, with the real and imaginary parts
/// of each `X_j` treated separately. Rows follow `(y1, y2, x1, x2, x3)`.
pub fn df_numeric(h: f64) -> Result<SMatrix<Complex<f64>, 5, 5>> {
    let mut out = SMatrix::<Complex<f64>, 5, 5>::zeros();
    for (col, x) in lie_basis_gl3().iter().enumerate() {
        let re = Matrix3::from_fn(|r, c| x.get(r, c).to_f64_pair().0);
        let im = Matrix3::from_fn(|r, c| x.get(r, c).to_f64_pair().1);
        let dre = central_difference(&re, h)?;
        let dim = central_difference(&im, h)?;
        for row in 0..5 {
            out[(row, col)] = Complex::new(dre[row], dim[row]);
        }
    }
    Ok(out)
}

/// The displayed matrix of `dF` in the basis `X_2, ..., X_{-2}`.
pub fn df_displayed() -> QMatrix {
    let g = GaussianRational::from_ints;
    QMatrix::from_rows(vec![
        vec![g(1, 0), g(0, 0), g(1, 0), g(0, 0), g(1, 0)],
        vec![g(-2, 0), g(0, 0), g(0, 0), g(0, 0), g(-2, 0)],
        vec![g(0, 0), g(0, 1), g(0, 0), g(0, 1), g(0, 0)],
        vec![g(0, -2), g(0, 0), g(0, 0), g(0, 0), g(0, 2)],
        vec![g(0, 0), g(1, 0), g(0, 0), g(-1, 0), g(0, 0)],
    ])
    .expect("5x5")
}

/// The matrix of `dF` obtained from the coordinate formulas, frozen from
/// [`df_numeric`] (all entries are Gaussian integers).
pub fn df_derived() -> QMatrix {
    let g = GaussianRational::from_ints;
    QMatrix::from_rows(vec![
        vec![g(-1, 0), g(0, 0), g(3, 0), g(0, 0), g(-1, 0)],
        vec![g(2, 0), g(0, 0), g(0, 0), g(0, 0), g(2, 0)],
        vec![g(0, 0), g(0, 2), g(0, 0), g(0, -2), g(0, 0)],
        vec![g(0, 2), g(0, 0), g(0, 0), g(0, 0), g(0, -2)],
        vec![g(0, 0), g(2, 0), g(0, 0), g(2, 0), g(0, 0)],
    ])
    .expect("5x5")
}

fn deviation(num: &SMatrix<Complex<f64>, 5, 5>, exact: &QMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..5 {
        for c in 0..5 {
            let (re, im) = exact.get(r, c).to_f64_pair();
            worst = worst.max((num[(r, c)] - Complex::new(re, im)).norm());
        }
    }
    worst
}

/// Finite-difference comparison of `dF` against the displayed and the
/// derived matrices.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DfCheck {
    /// Step size.
    pub h: f64,
    /// Largest entrywise deviation from [`df_displayed`].
    pub deviation_displayed: f64,
    /// Largest entrywise deviation from [`df_derived`].
    pub deviation_derived: f64,
    /// Largest coordinate derivative along the antisymmetric directions.
    pub so3_response: f64,
}

/// Runs the finite-difference check of `dF` with step `h ∈ [1e-8, 1e-3]`.
pub fn df_matrix_check(h: f64) -> Result<DfCheck> {
    if !(1e-8..=1e-3).contains(&h) {
        return Err(Error::OutOfRange(format!("step size {h}")));
    }
    let num = df_numeric(h)?;
    let mut so3: f64 = 0.0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut a = Matrix3::zeros();
        a[(i, j)] = 1.0;
        a[(j, i)] = -1.0;
        so3 = central_difference(&a, h)?.iter().fold(so3, |m, v| m.max(v.abs()));
    }
    Ok(DfCheck { h, deviation_displayed: deviation(&num, &df_displayed()), deviation_derived: deviation(&num, &df_derived()), so3_response: so3 })
}

/// The real directions `A1, A2, N1, N2, N3` as floating-point matrices.
pub fn real_directions() -> [Matrix3<f64>; 5] {
    real_basis_gl3().map(|m| to_f64(&m))
}

/// Variables `y1, y2, x1, x2, x3`.
pub fn coord_vars() -> VariableSet {
    VariableSet::new(&["y1", "y2", "x1", "x2", "x3"])
}

fn rf(vars: &VariableSet, num: &str, den: &str) -> RationalFunction {
    RationalFunction::new(MultiPoly::parse(num, vars).expect("numerator"), MultiPoly::parse(den, vars).expect("denominator"))
        .expect("nonzero denominator")
}

fn rf_const(vars: &VariableSet, c: &GaussianRational) -> RationalFunction {
    RationalFunction::constant(vars, c.clone())
}

fn sparse(vars: &VariableSet, rows: usize, cols: usize, entries: &[(usize, usize, &str, &str)]) -> RfMatrix {
    let mut m = Matrix::from_fn(rows, cols, |_, _| rf_const(vars, &GaussianRational::from_int(0)));
    for &(r, c, n, d) in entries {
        m.set(r, c, rf(vars, n, d));
    }
    m
}

/// The displayed left-translation Jacobian.
pub fn left_jacobian() -> RfMatrix {
    sparse(
        &coord_vars(),
        5,
        5,
        &[(0, 0, "1", "y1"), (1, 1, "1", "y2"), (2, 2, "1", "y1"), (2, 4, "-x2", "y1*y2"), (3, 3, "1", "y2"), (4, 4, "1", "y1*y2")],
    )
}

fn f_symbolic(vars: &VariableSet, names: [&str; 5]) -> Result<RfMatrix> {
    let v = |k: usize| RationalFunction::var(vars, names[k]);
    let zero = rf_const(vars, &GaussianRational::from_int(0));
    let one = rf_const(vars, &GaussianRational::from_int(1));
    let (y1, y2, x1, x2, x3) = (v(0)?, v(1)?, v(2)?, v(3)?, v(4)?);
    Matrix::from_rows(vec![
        vec![y1.clone() * y2, y1.clone() * x2, x3],
        vec![zero.clone(), y1, x1],
        vec![zero.clone(), zero, one],
    ])
}

/// The Jacobian of `c' -> coords(F(c)⁻¹ F(c'))` at `c' = c`, transposed, by
/// exact composition of the coordinate functions.
pub fn left_jacobian_symbolic() -> Result<RfMatrix> {
    let big = VariableSet::new(&["y1", "y2", "x1", "x2", "x3", "Y1", "Y2", "X1", "X2", "X3"]);
    let primed = ["Y1", "Y2", "X1", "X2", "X3"];
    let h = f_symbolic(&big, ["y1", "y2", "x1", "x2", "x3"])?.inverse()?.mul(&f_symbolic(&big, primed)?)?;
    let e = h.get(1, 1).clone();
    let coords = [e.clone(), h.get(0, 0).clone() / e.clone(), h.get(1, 2).clone(), h.get(0, 1).clone() / e, h.get(0, 2).clone()];
    let cv = coord_vars();
    let back: Vec<(&str, RationalFunction)> =
        primed.iter().zip(cv.names()).map(|(p, n)| Ok((*p, RationalFunction::var(&cv, n)?))).collect::<Result<_>>()?;
    let mut out = Matrix::from_fn(5, 5, |_, _| rf_const(&cv, &GaussianRational::from_int(0)));
    for (c, f) in coords.iter().enumerate() {
        for (r, p) in primed.iter().enumerate() {
            out.set(r, c, f.partial_derivative(p)?.substitute(&back, &cv)?);
        }
    }
    Ok(out)
}

/// Finite-difference deviation of [`left_jacobian`] at a point.
pub fn left_jacobian_numeric_deviation(point: &[f64; 5], h: f64) -> Result<f64> {
    let g_inv = f_matrix(point).try_inverse().ok_or_else(|| Error::Singular("F(point)".into()))?;
    let values: Vec<GaussianRational> = point.iter().map(|&x| f64_to_rational(x)).collect::<Result<_>>()?;
    let j = left_jacobian();
    let mut worst: f64 = 0.0;
    for r in 0..5 {
        let mut plus = *point;
        let mut minus = *point;
        plus[r] += h;
        minus[r] -= h;
        let cp = coords_of(&(g_inv * f_matrix(&plus)))?;
        let cm = coords_of(&(g_inv * f_matrix(&minus)))?;
        for c in 0..5 {
            let d = (cp[c] - cm[c]) / (2.0 * h);
            let exact = j.get(r, c).evaluate(&values)?.to_f64_pair().0;
            worst = worst.max((d - exact).abs());
        }
    }
    Ok(worst)
}

fn f64_to_rational(x: f64) -> Result<GaussianRational> {
    BigRational::from_float(x)
        .map(GaussianRational::from_rational)
        .ok_or_else(|| Error::Numeric(format!("{x} is not finite")))
}

/// The pullback matrix `J · ᵗM⁻¹` with `M` the displayed `dF`: column `j`
/// expresses the left-invariant dual form of `X_j` on `dy1, ..., dx3`.
pub fn pullback_matrix() -> Result<RfMatrix> {
    let cv = coord_vars();
    let mt_inv = df_displayed().transpose().inverse()?.map(|c| rf_const(&cv, c));
    left_jacobian().mul(&mt_inv)
}

/// `Qⁱ = Λⁱ(J ᵗM⁻¹) Pⁱ`, derived.
pub fn q_matrix(i: usize) -> Result<RfMatrix> {
    let cv = coord_vars();
    let p = p_matrix(i)?.map(|c| rf_const(&cv, c));
    pullback_matrix()?.compound(i).mul(&p)
}

/// The displayed matrices `Q²` and `Q³`.
pub fn q_matrix_displayed(i: usize) -> Result<RfMatrix> {
    let cv = coord_vars();
    let (d1, d2) = ("8*y1*y2^2", "y1^2*y2");
    let entries: Vec<(usize, usize, &str, &str)> = match i {
        2 => vec![
            (0, 1, "1", "2*y1*y2"),
            (0, 5, "-1", "2*y1*y2"),
            (1, 2, "x2 + i*y2", "2*y1^2*y2"),
            (1, 4, "x2 - i*y2", "2*y1^2*y2"),
            (2, 1, "-i", "2*y1*y2"),
            (2, 5, "-i", "2*y1*y2"),
            (3, 2, "-1", "2*y1^2*y2"),
            (3, 4, "-1", "2*y1^2*y2"),
            (4, 0, "x2 + i*y2", d1),
            (4, 2, "-x2 + 5*i*y2", d1),
            (4, 4, "-x2 - 5*i*y2", d1),
            (4, 6, "x2 - i*y2", d1),
            (5, 1, "-i", "4*y2^2"),
            (5, 3, "i", "2*y2^2"),
            (5, 5, "-i", "4*y2^2"),
            (6, 0, "-1", d1),
            (6, 2, "1", d1),
            (6, 4, "1", d1),
            (6, 6, "-1", d1),
            (7, 0, "i*x2 - y2", d1),
            (7, 2, "-3*i*x2 - 3*y2", d1),
            (7, 4, "3*i*x2 - 3*y2", d1),
            (7, 6, "-i*x2 - y2", d1),
            (8, 3, "i", d2),
            (9, 0, "i", d1),
            (9, 2, "-3*i", d1),
            (9, 4, "3*i", d1),
            (9, 6, "-i", d1),
        ],
        3 => {
            let (e, f, g, h) = ("24*y1^2*y2^2", "8*y1^2*y2^2", "48*y1*y2^3", "16*y1*y2^3");
            vec![
                (0, 0, "x2 + i*y2", e),
                (0, 2, "x2 - i*y2", f),
                (0, 4, "x2 + i*y2", f),
                (0, 6, "x2 - i*y2", e),
                (1, 3, "-i", "3*y1*y2^2"),
                (2, 0, "-1", e),
                (2, 2, "-1", f),
                (2, 4, "-1", f),
                (2, 6, "-1", e),
                (3, 0, "i*x2 - y2", e),
                (3, 2, "i*x2 + y2", f),
                (3, 4, "-i*x2 + y2", f),
                (3, 6, "-i*x2 - y2", e),
                (4, 3, "-i", "6*y1^3*y2"),
                (5, 0, "i", e),
                (5, 2, "i", f),
                (5, 4, "-i", f),
                (5, 6, "-i", e),
                (6, 0, "i*x2 - y2", g),
                (6, 2, "-i*x2 + 3*y2", h),
                (6, 4, "i*x2 + 3*y2", h),
                (6, 6, "-i*x2 - y2", g),
                (7, 1, "-i", f),
                (7, 3, "-i", "12*y1^2*y2^2"),
                (7, 5, "-i", f),
                (8, 0, "i", g),
                (8, 2, "-i", h),
                (8, 4, "i", h),
                (8, 6, "-i", g),
                (9, 1, "1", f),
                (9, 5, "-1", f),
            ]
        }
        _ => return Err(Error::OutOfRange(format!("wedge degree {i} (expected 2 or 3)"))),
    };
    Ok(sparse(&cv, 10, 7, &entries))
}

/// Entries `(row, col)` where the derived and displayed `Qⁱ` differ.
pub fn q_matrix_mismatches(i: usize) -> Result<Vec<(usize, usize)>> {
    let a = q_matrix(i)?;
    let b = q_matrix_displayed(i)?;
    Ok((0..10).flat_map(|r| (0..7).map(move |c| (r, c))).filter(|&(r, c)| a.get(r, c) != b.get(r, c)).collect())
}

/// True when the derived `Qⁱ` equals the displayed one exactly.
pub fn q_matrix_verify(i: usize) -> Result<bool> {
    Ok(q_matrix_mismatches(i)?.is_empty())
}

/// Variables `y1, u, x2` of GL(2), with `y2 = u²`.
pub fn iota_vars() -> VariableSet {
    VariableSet::new(&["y1", "u", "x2"])
}

/// Pullbacks of `ω_3, ..., ω_{-3}` to the GL(2) coordinates.
#[derive(Clone, Debug)]
pub struct IotaPullback {
    /// Rows `dy1∧dy2, dy1∧dx2, dy2∧dx2`; columns `ω_3, ..., ω_{-3}`.
    pub omega: RfMatrix,
    /// Coefficients on `dy1∧dx2∧dy2` of `ω_2 ∧ ξ_-` and `ω_{-2} ∧ ξ_+`.
    pub wedge_xi: [RationalFunction; 2],
}

fn iota_from(q2: &RfMatrix, u_sign: i64) -> Result<IotaPullback> {
    let iv = iota_vars();
    let s = GaussianRational::from_int(u_sign);
    let u = RationalFunction::var(&iv, "u")?.scale(&s);
    let y1 = RationalFunction::var(&iv, "y1")?;
    let zero = rf_const(&iv, &GaussianRational::from_int(0));
    let one = rf_const(&iv, &GaussianRational::from_int(1));
    let dy1 = u.inv()?;
    let dy2 = -(y1.clone() * u.pow(-3)?).scale(&GaussianRational::from_frac(1, 2));
    let l = Matrix::from_rows(vec![
        vec![dy1, dy2, zero.clone()],
        vec![zero.clone(), one.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), one],
        vec![zero.clone(), zero.clone(), zero.clone()],
    ])?;
    let y2 = u.pow(2)?;
    let bindings = [("y1", y1 / u.clone()), ("y2", y2.clone()), ("x1", zero.clone()), ("x3", zero.clone())];
    let mut q = q2.clone();
    for r in 0..q.rows() {
        for c in 0..q.cols() {
            q.set(r, c, q2.get(r, c).substitute(&bindings, &iv)?);
        }
    }
    let omega = l.compound(2).transpose().mul(&q)?;
    let i = GaussianRational::i();
    let xi = |sign: i64| -> (RationalFunction, RationalFunction) {
        let inv = y2.inv().expect("y2 is nonzero");
        (inv.scale(&i), inv.scale(&GaussianRational::from_int(sign)))
    };
    let top = |col: usize, sign: i64| -> RationalFunction {
        let (qc, rc) = xi(sign);
        let a = omega.get(0, col).clone();
        let b = omega.get(1, col).clone();
        -(a * rc - b * qc)
    };
    Ok(IotaPullback { wedge_xi: [top(1, -1), top(5, 1)], omega })
}

/// Pullback along `ι` of the forms `ω_j` given by the displayed `Q²`.
pub fn iota_pullback_forms() -> Result<IotaPullback> {
    iota_from(&q_matrix_displayed(2)?, 1)
}

/// Outcome of the four pullback identities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IotaReport {
    /// `ι*ω_{±3} = ι*ω_{±1} = 0`.
    pub odd_vanish: bool,
    /// `ι*ω_0 = (i / 2y2²) dy2∧dx2`.
    pub omega0: bool,
    /// `ι*ω_{±2}` equals the displayed three-term expression.
    pub omega_pm2: bool,
    /// The derived coefficients of `ι*ω_{±2}` on `dy1∧dy2, dy1∧dx2, dy2∧dx2`.
    pub omega_pm2_derived: Vec<Vec<String>>,
    /// `ι*ω_{±2} ∧ ξ_∓ = dy1∧dx2∧dy2 / (y1 y2²)`.
    pub haar: bool,
    /// The pullbacks are unchanged by `u -> -u`.
    pub sign_invariant: bool,
}

/// Checks the pullback identities exactly.
pub fn iota_report() -> Result<IotaReport> {
    let iv = iota_vars();
    let pb = iota_pullback_forms()?;
    let flipped = iota_from(&q_matrix_displayed(2)?, -1)?;
    let zero = rf_const(&iv, &GaussianRational::from_int(0));
    let col = |c: usize| -> Vec<RationalFunction> { (0..3).map(|r| pb.omega.get(r, c).clone()).collect() };
    let odd_vanish = [0, 2, 4, 6].iter().all(|&c| col(c).iter().all(|e| e == &zero));
    let omega0 = col(3) == vec![zero.clone(), zero.clone(), rf(&iv, "i", "2*u^4")];
    let plus = vec![rf(&iv, "1", "2*y1*u^2"), rf(&iv, "-i", "2*y1*u^2"), rf(&iv, "-i", "4*u^4")];
    let minus = vec![rf(&iv, "-1", "2*y1*u^2"), rf(&iv, "-i", "2*y1*u^2"), rf(&iv, "-i", "4*u^4")];
    let omega_pm2 = col(1) == plus && col(5) == minus;
    let haar_density = rf(&iv, "1", "y1*u^4");
    let haar = pb.wedge_xi.iter().all(|w| w == &haar_density);
    let sign_invariant = (0..3).all(|r| (0..7).all(|c| pb.omega.get(r, c) == flipped.omega.get(r, c)))
        && pb.wedge_xi.iter().zip(&flipped.wedge_xi).all(|(a, b)| a == b);
    let omega_pm2_derived = [1, 5].iter().map(|&c| col(c).iter().map(|e| e.to_string()).collect()).collect();
    Ok(IotaReport { odd_vanish, omega0, omega_pm2, omega_pm2_derived, haar, sign_invariant })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_coordinates() {
        let d = iwasawa_gl3(&Matrix3::identity(), 1e-12).unwrap();
        assert_eq!(d.coords.as_array(), [1.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(d.coords.scale, 1.0);
    }

    #[test]
    fn diagonal_coordinates() {
        let d = iwasawa_gl3(&Matrix3::from_diagonal(&nalgebra::Vector3::new(2.0, 1.0, 1.0)), 1e-12).unwrap();
        assert_eq!(d.coords.as_array(), [1.0, 2.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn singular_is_rejected() {
        assert!(iwasawa_gl3(&Matrix3::zeros(), 1e-12).is_err());
    }
}
