//! Verification batteries for every module and the JSON report they produce.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use nalgebra::Matrix3;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::escoh::closed_form::{closed_form_b3, closed_form_nabla_p, closed_form_p_entry, double_binomial, s_and_t};
use crate::escoh::lie::{ad_gl2, ad_gl3, ad_gl3_harmonic, ad_matrix, harmonic_scales};
use crate::escoh::pairing::{cup_constants, cup_pairing_check, pairing_n};
use crate::escoh::script_p::build_script_p;
use crate::escoh::wedge::{omega_equivariance_check, p_from_p_tilde, p_matrix, p_tilde_block_check};
use crate::geom::{self, df_matrix_check, iwasawa_gl3, random_well_conditioned};
use crate::glrep::{
    act_gl2, act_gl3, branching_rank, dim_l3, embed_gl2, gl2_vars, kernel_basis, nabla_n, xi2_set, RepElementGL3, WeightGL2, WeightGL3,
};
use crate::lfactors::{self, dual, gamma_c, gamma_r, tensor, GammaFactor, GammaKind, PiParams, WeilParameter, WeilSummand};
use crate::matrix::QMatrix;
use crate::orthrep::{
    cayley_so2, matrix_m, random_cayley, random_rational, reduce_mod_sphere, reduced_monomials, sigma, v3, OrthWeight3,
};
use crate::poly::MultiPoly;
use crate::scalar::GaussianRational;

/// Version tag of the report format.
pub const SCHEMA: &str = "branchkit/1";

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 6] = ["glrep", "orthrep", "escoh", "geom", "lfactors", "all"];

/// One failed case.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseFailure {
    /// Suite the case belongs to.
    pub suite: String,
    /// Name of the check.
    pub case: String,
    /// Inputs in canonical text.
    pub inputs: String,
    /// Expected value in canonical text.
    pub expected: String,
    /// Observed value in canonical text.
    pub actual: String,
}

/// Counts for one suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteSummary {
    /// Suite name.
    pub suite: String,
    /// Effective size cap used by the suite.
    pub weight_cap: i64,
    /// Number of cases.
    pub count: usize,
    /// Number of passing cases.
    pub pass: usize,
}

/// The outcome of [`run_suite`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    /// Always [`SCHEMA`].
    pub schema: String,
    /// Requested suite.
    pub suite: String,
    /// Random seed.
    pub seed: u64,
    /// Requested size cap.
    pub max_weight: i64,
    /// Total number of cases.
    pub count: usize,
    /// Number of passing cases.
    pub pass: usize,
    /// Per-suite counts.
    pub suites: Vec<SuiteSummary>,
    /// Every failed case.
    pub failures: Vec<CaseFailure>,
    /// Elapsed time, only present when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl VerifyReport {
    /// True when every case passed.
    pub fn all_passed(&self) -> bool {
        self.pass == self.count
    }

    /// Process exit status: 0 when everything passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    /// Compact JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Options of a verification run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Size cap (weights, `λ`, `λ₃` or `l3` depending on the suite).
    pub max_weight: i64,
    /// Random seed.
    pub seed: u64,
    /// Floating-point tolerance of the geometry suite.
    pub tol: f64,
    /// Include the elapsed time in the report.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_weight: 3, seed: 1, tol: 1e-10, timing: false }
    }
}

struct Tally {
    suite: String,
    cap: i64,
    count: usize,
    pass: usize,
    failures: Vec<CaseFailure>,
}

impl Tally {
    fn new(suite: &str, cap: i64) -> Self {
        Tally { suite: suite.into(), cap, count: 0, pass: 0, failures: Vec::new() }
    }

    fn record(&mut self, case: &str, inputs: impl Display, expected: impl Display, actual: impl Display, ok: bool) {
        self.count += 1;
        if ok {
            self.pass += 1;
        } else {
            self.failures.push(CaseFailure {
                suite: self.suite.clone(),
                case: case.into(),
                inputs: inputs.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn check(&mut self, case: &str, inputs: impl Display, outcome: Result<bool>) {
        match outcome {
            Ok(ok) => self.record(case, inputs, "true", ok, ok),
            Err(e) => self.record(case, inputs, "true", format!("error: {e}"), false),
        }
    }

    fn summary(&self) -> SuiteSummary {
        SuiteSummary { suite: self.suite.clone(), weight_cap: self.cap, count: self.count, pass: self.pass }
    }
}

/// A random invertible `n x n` matrix with small rational entries.
pub fn random_rational_gl<R: Rng>(rng: &mut R, n: usize) -> QMatrix {
    loop {
        let g = QMatrix::from_fn(n, n, |_, _| GaussianRational::from_rational(random_rational(rng, 4)));
        if g.det().is_ok_and(|d| !d.is_zero()) {
            return g;
        }
    }
}

/// A random element of the model of weight `w` with small integer
/// coordinates on the kernel basis.
pub fn random_element<R: Rng>(rng: &mut R, w: &WeightGL3) -> Result<RepElementGL3> {
    let basis = kernel_basis(w.w1p as u32, w.w1m as u32);
    let mut p = MultiPoly::zero(&crate::glrep::gl3_vars());
    for b in basis.iter() {
        let c = GaussianRational::from_ints(rng.random_range(-3..=3), rng.random_range(-3..=3));
        p = &p + &b.scale(&c);
    }
    RepElementGL3::new(p, *w)
}

/// `∇ⁿ(ρ_w(ι g) p) = ρ_n(g) ∇ⁿ p` for every `n ∈ Ξ₂(w)`.
pub fn nabla_equivariance(g: &QMatrix, p: &RepElementGL3) -> Result<bool> {
    let moved = act_gl3(&embed_gl2(g), p)?;
    for n in xi2_set(&p.weight()) {
        let lhs = nabla_n(&n, &moved)?;
        let rhs = act_gl2(g, &nabla_n(&n, p)?, &n)?;
        if !(&lhs - &rhs).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The scalar `x·1₃` acts by `x^{3 w2 + w1p - w1m}` and commutes with every
/// `∇ⁿ`.
pub fn central_character_check(x: i64, p: &RepElementGL3) -> Result<bool> {
    let w = p.weight();
    let xg = GaussianRational::from_int(x);
    let g = QMatrix::identity(3).scale_by(&xg);
    let moved = act_gl3(&g, p)?;
    let chi = xg.pow(3 * w.w2 + w.w1p - w.w1m)?;
    for n in xi2_set(&w) {
        if !(&nabla_n(&n, &moved)? - &nabla_n(&n, p)?.scale(&chi)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `M_λ(u u') = M_λ(u) M_λ(u')`.
pub fn m_homomorphism(w: &OrthWeight3, u: &QMatrix, u2: &QMatrix) -> Result<bool> {
    Ok(matrix_m(w, &u.mul(u2)?)? == matrix_m(w, u)?.mul(&matrix_m(w, u2)?)?)
}

/// `v^λ_j · v^{λ'}_{j'} ≡ v^{λ+λ'}_{j+j'}` modulo the sphere for every
/// index pair.
pub fn multiplicativity(l1: i64, l2: i64) -> Result<bool> {
    for j1 in -l1..=l1 {
        for j2 in -l2..=l2 {
            let prod = reduce_mod_sphere(&(&v3(l1, j1)? * &v3(l2, j2)?))?;
            if !(&prod - &reduce_mod_sphere(&v3(l1 + l2, j1 + j2)?)?).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[ρ_n(g) p, ρ_{(n1,0)}(g) q]_n = det(g)^{n1+n2} [p, q]_n`.
pub fn pairing_equivariance(n: &WeightGL2, g: &QMatrix, p: &MultiPoly, q: &MultiPoly) -> Result<bool> {
    let lhs = pairing_n(n, &act_gl2(g, p, n)?, &act_gl2(g, q, &WeightGL2 { n1: n.n1, n2: 0 })?)?;
    let rhs = g.det()?.pow(n.n1 + n.n2)? * pairing_n(n, p, q)?;
    Ok(lhs == rhs)
}

/// `[T^{n1}, S^{n1}] = (-2i)^{n1}`.
pub fn pairing_ts(n1: i64) -> Result<bool> {
    let (s, t) = s_and_t();
    let n = WeightGL2 { n1, n2: 0 };
    Ok(pairing_n(&n, &t.pow(n1 as u32), &s.pow(n1 as u32))? == GaussianRational::from_ints(0, -2).pow(n1)?)
}

/// `Ad(u)` on `(E, H)` equals `u⁻²`.
pub fn ad_gl2_check(u: &QMatrix) -> Result<bool> {
    let ui = u.inverse()?;
    Ok(ad_gl2(u)? == ui.mul(&ui)?)
}

/// Conjugation on `X_2..X_{-2}` equals `D⁻¹ M_{(2,0)}(u) D`, and equals
/// `M_{(2,0)}(u)` in the basis `X_j / c_j`.
pub fn ad_gl3_check(u: &QMatrix) -> Result<bool> {
    let d = QMatrix::diagonal(&harmonic_scales());
    let m2 = ad_matrix(u)?;
    Ok(ad_gl3(u)? == d.inverse()?.mul(&m2)?.mul(&d)? && ad_gl3_harmonic(u)? == m2)
}

fn random_gl2_poly<R: Rng>(rng: &mut R, degree: i64) -> MultiPoly {
    let vars = gl2_vars();
    let d = degree as u32;
    MultiPoly::from_terms(
        &vars,
        (0..=d).map(|i| (vec![i, d - i], GaussianRational::from_ints(rng.random_range(-3..=3), rng.random_range(-3..=3)))),
    )
}

fn glrep_suite(t: &mut Tally, rng: &mut ChaCha8Rng, draws: usize) {
    let cap = t.cap;
    for w1p in 0..=cap {
        for w1m in 0..=cap {
            let w = WeightGL3 { w1p, w1m, w2: 0 };
            let input = format!("w = ({w1p}, {w1m}, 0)");
            let kd = kernel_basis(w1p as u32, w1m as u32).len() as u64;
            t.record("dimension formula", &input, dim_l3(&w), kd, dim_l3(&w) == kd);
            match branching_rank(&w) {
                Ok(r) => t.record("branching rank", &input, dim_l3(&w), r, r as u64 == dim_l3(&w)),
                Err(e) => t.record("branching rank", &input, dim_l3(&w), e, false),
            }
            for _ in 0..draws {
                let g = random_rational_gl(rng, 2);
                let outcome = random_element(rng, &w).and_then(|p| nabla_equivariance(&g, &p));
                t.check("GL(2) equivariance", format!("{input}, g = {}", flat(&g)), outcome);
            }
            let outcome = random_element(rng, &w).and_then(|p| central_character_check(2, &p));
            t.check("central character", &input, outcome);
        }
    }
}

fn flat(m: &QMatrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|r| m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", rows.join("; "))
}

fn orthrep_suite(t: &mut Tally, rng: &mut ChaCha8Rng, draws: usize) {
    let cap = t.cap;
    for lambda in 0..=cap {
        let dim = reduced_monomials(lambda).len();
        t.record("reduced monomial count", format!("λ = {lambda}"), 2 * lambda + 1, dim, dim as i64 == 2 * lambda + 1);
        for delta in 0..=1u8 {
            let w = OrthWeight3 { lambda, delta };
            let total: usize = sigma(&w).iter().map(|m| m.dim()).sum();
            t.record("branching completeness", format!("λ = {lambda}, δ = {delta}"), 2 * lambda + 1, total, total as i64 == 2 * lambda + 1);
            for _ in 0..draws {
                let u = random_cayley(rng);
                let u2 = random_cayley(rng);
                t.check("M homomorphism", format!("λ = {lambda}, δ = {delta}, u = {}, u' = {}", flat(&u), flat(&u2)), m_homomorphism(&w, &u, &u2));
            }
        }
    }
    for l1 in 0..=cap {
        for l2 in 0..=cap.min(6 - l1) {
            if l1 + l2 <= 6 {
                t.check("v-basis multiplicativity", format!("(λ, λ') = ({l1}, {l2})"), multiplicativity(l1, l2));
            }
        }
    }
}

fn escoh_suite(t: &mut Tally, rng: &mut ChaCha8Rng, draws: usize) {
    for _ in 0..draws {
        let s = random_rational(rng, 5);
        let u = cayley_so2(&s);
        t.check("Ad on p_2 is u^-2", format!("u = {}", flat(&u)), ad_gl2_check(&u));
        let u3 = random_cayley(rng);
        t.check("Ad on p_3 in the rescaled basis", format!("u = {}", flat(&u3)), ad_gl3_check(&u3));
        for i in [2, 3] {
            t.check("P-tilde block diagonalisation", format!("i = {i}, u = {}", flat(&u3)), p_tilde_block_check(i, &u3));
            t.check("omega equivariance", format!("i = {i}, u = {}", flat(&u3)), omega_equivariance_check(i, &u3));
        }
    }
    for i in [2, 3] {
        t.check("P from P-tilde", format!("i = {i}"), p_from_p_tilde(i).and_then(|a| Ok(a == p_matrix(i)?)));
    }
    let cap = t.cap;
    let mut lambda3 = 3;
    while lambda3 <= cap {
        script_p_cases(t, rng, lambda3, draws);
        lambda3 += 2;
    }
    for n1 in 0..=6 {
        t.check("[T^n1, S^n1] = (-2i)^n1", format!("n1 = {n1}"), pairing_ts(n1));
    }
    for n1 in 0..=4 {
        let n = WeightGL2 { n1, n2: rng.random_range(-2..=2) };
        let g = random_rational_gl(rng, 2);
        let p = random_gl2_poly(rng, n1);
        let q = random_gl2_poly(rng, n1);
        t.check("pairing equivariance", format!("n = ({}, {}), g = {}", n.n1, n.n2, flat(&g)), pairing_equivariance(&n, &g, &p, &q));
    }
    let mut l3 = 2;
    while l3 < cap {
        for l2 in 1..l3 {
            let pp = PiParams::new(l2, l3, 0).expect("valid");
            let sp = match build_script_p(l3 + 1, 0) {
                Ok(sp) => sp,
                Err(e) => {
                    t.record("cup pairings", format!("l3 = {l3}"), "matrix", e, false);
                    continue;
                }
            };
            for m in pp.critical_points() {
                t.check("cup pairings", format!("(l2, l3, m) = ({l2}, {l3}, {m})"), cup_pairing_check(&sp, l2, m));
                for delta in 0..=1u8 {
                    let outcome = cup_constants(l3 + 1, delta, l2, m).and_then(|c| {
                        let main = lfactors::main_constant(&PiParams::new(l2, l3, delta)?, m)?;
                        Ok(c.sign_flip == main.parity && c.c == double_binomial(l3 / 2 - 1, &c.n_m))
                    });
                    t.check("parity coherence", format!("(l2, l3, δ, m) = ({l2}, {l3}, {delta}, {m})"), outcome);
                }
            }
        }
        l3 += 2;
    }
}

fn script_p_cases(t: &mut Tally, rng: &mut ChaCha8Rng, lambda3: i64, draws: usize) {
    let input = format!("λ₃ = {lambda3}");
    let sp = match build_script_p(lambda3, 0) {
        Ok(sp) => sp,
        Err(e) => {
            t.record("script P construction", &input, "matrix", e, false);
            return;
        }
    };
    t.record("script P dyadic coefficients", &input, true, sp.coefficients_dyadic(), sp.coefficients_dyadic());
    t.check("script P harmonic entries", &input, sp.all_harmonic());
    for _ in 0..draws.min(5) {
        let u = random_cayley(rng);
        t.check("script P equivariance", format!("{input}, u = {}", flat(&u)), sp.equivariance_check(&u));
    }
    let mut b1 = Ok(true);
    let mut b2 = Ok(true);
    let mut b3 = Ok(true);
    let xi = xi2_set(&sp.entry_weight());
    for alpha in -lambda3..=lambda3 {
        for beta in -3..=3 {
            if let Ok(true) = b1 {
                b1 = closed_form_p_entry(lambda3, alpha, beta).and_then(|cf| Ok((&cf - sp.entry(alpha, beta)?).is_zero()));
            }
            let el = match sp.element(alpha, beta) {
                Ok(el) => el,
                Err(e) => {
                    b2 = Err(e);
                    continue;
                }
            };
            for n in &xi {
                let direct = nabla_n(n, &el);
                if let Ok(true) = b2 {
                    b2 = direct.clone().and_then(|d| Ok((&d - &closed_form_nabla_p(lambda3, n, alpha, beta)?).is_zero()));
                }
                if (alpha - beta).abs() == n.n1 {
                    if let Ok(true) = b3 {
                        b3 = direct.and_then(|d| Ok((&d - &closed_form_b3(lambda3, n, alpha, beta)?).is_zero()));
                    }
                }
            }
        }
    }
    t.check("closed form of script P entries", &input, b1);
    t.check("closed form of branched entries", &input, b2);
    t.check("single-term closed form", &input, b3);
}

fn geom_suite(t: &mut Tally, rng: &mut ChaCha8Rng, tol: f64) {
    let mut worst: f64 = 0.0;
    let mut failed = None;
    for _ in 0..1000 {
        let g = random_well_conditioned(rng, 1e3);
        match iwasawa_gl3(&g, 1e-12) {
            Ok(d) => worst = worst.max(d.reconstruction_residual.max(d.orthogonality_residual)),
            Err(e) => failed = Some(e),
        }
    }
    match failed {
        Some(e) => t.record("Iwasawa round trip", "1000 random matrices", format!("< {tol:e}"), e, false),
        None => t.record("Iwasawa round trip", "1000 random matrices", format!("< {tol:e}"), format!("{worst:e}"), worst < tol),
    }
    let id = iwasawa_gl3(&Matrix3::identity(), 1e-12).map(|d| d.coords.as_array());
    t.record("identity coordinates", "g = 1", "[1, 1, 0, 0, 0]", format!("{id:?}"), id.as_ref().is_ok_and(|c| *c == [1.0, 1.0, 0.0, 0.0, 0.0]));
    match df_matrix_check(1e-5) {
        Ok(c) => {
            t.record("dF against the displayed matrix", "h = 1e-5", "< 1e-7", format!("{:e}", c.deviation_displayed), c.deviation_displayed < 1e-7);
            t.record("dF against the derived matrix", "h = 1e-5", "< 1e-7", format!("{:e}", c.deviation_derived), c.deviation_derived < 1e-7);
            t.record("dF along so(3)", "h = 1e-5", "0", format!("{:e}", c.so3_response), c.so3_response < 1e-7);
        }
        Err(e) => t.record("dF", "h = 1e-5", "check", e, false),
    }
    let point = [1.0, 2.0, 0.0, 3.0, 0.0];
    match geom::left_jacobian_numeric_deviation(&point, 1e-5) {
        Ok(d) => t.record("left Jacobian by finite differences", "(1, 2, 0, 3, 0)", "< 1e-7", format!("{d:e}"), d < 1e-7),
        Err(e) => t.record("left Jacobian by finite differences", "(1, 2, 0, 3, 0)", "< 1e-7", e, false),
    }
    t.check(
        "left Jacobian by exact composition",
        "symbolic",
        geom::left_jacobian_symbolic().map(|j| {
            let d = geom::left_jacobian();
            (0..5).all(|r| (0..5).all(|c| j.get(r, c) == d.get(r, c)))
        }),
    );
    for i in [2, 3] {
        match geom::q_matrix_mismatches(i) {
            Ok(m) => t.record("Q matrix", format!("i = {i}"), "[]", format!("{m:?}"), m.is_empty()),
            Err(e) => t.record("Q matrix", format!("i = {i}"), "[]", e, false),
        }
    }
    match geom::iota_report() {
        Ok(r) => {
            t.record("iota pullback of ω±3, ω±1", "", true, r.odd_vanish, r.odd_vanish);
            t.record("iota pullback of ω0", "", true, r.omega0, r.omega0);
            t.record(
                "iota pullback of ω±2",
                "",
                "[1/(2y1y2), -i/(2y1y2), -i/(4y2^2)] and [-1/(2y1y2), -i/(2y1y2), -i/(4y2^2)] with y2 = u^2",
                format!("{:?}", r.omega_pm2_derived),
                r.omega_pm2,
            );
            t.record("iota pullback wedge xi", "", true, r.haar, r.haar);
            t.record("iota pullback sign of u", "", true, r.sign_invariant, r.sign_invariant);
        }
        Err(e) => t.record("iota pullback", "", "report", e, false),
    }
}

fn lfactors_suite(t: &mut Tally, rng: &mut ChaCha8Rng) {
    let cap = t.cap;
    let mut l3 = 2;
    while l3 <= cap {
        for l2 in 1..l3 {
            let pp = PiParams::new(l2, l3, 0).expect("valid");
            let a = pp.critical_points();
            let b = pp.critical_points_by_poles();
            let c = pp.critical_points_by_hodge();
            t.record("critical region three ways", format!("(l2, l3) = ({l2}, {l3})"), format!("{a:?}"), format!("{b:?} {c:?}"), a == b && a == c);
            for delta in 0..=1u8 {
                let pp = PiParams::new(l2, l3, delta).expect("valid");
                for &m in &a {
                    let ok = lfactors::assembly_identity(&pp, m) && lfactors::main_constant(&pp, m).is_ok();
                    t.record("assembly identity", format!("(l2, l3, δ, m) = ({l2}, {l3}, {delta}, {m})"), true, ok, ok);
                }
            }
        }
        l3 += 2;
    }
    for (l2, l3, expect) in [(2, 8, vec![5, 6]), (4, 6, vec![5, 6]), (2, 4, vec![3, 4])] {
        let got = PiParams::new(l2, l3, 0).map(|p| p.critical_points());
        t.record("critical spot value", format!("({l2}, {l3})"), format!("{expect:?}"), format!("{got:?}"), got.as_ref() == Ok(&expect));
    }
    let pp = PiParams::new(2, 8, 0).expect("valid");
    let mc = lfactors::main_constant(&pp, 5);
    let ok = mc.as_ref().is_ok_and(|c| c.parity == -1 && c.scalar == GaussianRational::from_int(3));
    t.record("main constant", "(2, 8, 0, 5)", "parity -1, scalar 3", format!("{mc:?}"), ok);
    let mut dup = true;
    for a2 in -6..=6 {
        let a = BigRational::new(a2.into(), 2.into());
        let r1 = GammaFactor { kind: GammaKind::R, shift: a.clone() };
        let r2 = GammaFactor { kind: GammaKind::R, shift: a.clone() + BigRational::one() };
        let c = GammaFactor { kind: GammaKind::C, shift: a.clone() };
        for s2 in -40..=40 {
            let s = BigRational::new(s2.into(), 2.into());
            dup &= (r1.has_pole_at(&s) || r2.has_pole_at(&s)) == c.has_pole_at(&s);
        }
    }
    t.record("duplication at the level of poles", "shifts in (1/2)Z", true, dup, dup);
    let pi = std::f64::consts::PI;
    let vals = [(gamma_r(1.0), 1.0, "Γ_R(1)"), (gamma_c(1.0), 1.0 / pi, "Γ_C(1)"), (gamma_c(2.0), 1.0 / (2.0 * pi * pi), "Γ_C(2)")];
    for (got, want, name) in vals {
        t.record("Gamma value", name, format!("{want:.15}"), format!("{got:.15}"), (got - want).abs() < 1e-12);
    }
    for _ in 0..10 {
        let p = random_weil(rng);
        let q = random_weil(rng);
        match (tensor(&p, &q), tensor(&dual(&p), &dual(&q))) {
            (Ok(a), Ok(b)) => t.record("dual of tensor", format!("{p} ; {q}"), &b, dual(&a), dual(&a) == b),
            (a, b) => t.record("dual of tensor", format!("{p} ; {q}"), format!("{b:?}"), format!("{a:?}"), a.is_err() && b.is_err()),
        }
    }
}

fn random_weil<R: Rng>(rng: &mut R) -> WeilParameter {
    let mut parts = Vec::new();
    for _ in 0..rng.random_range(1..=2) {
        let nu = random_rational(rng, 4);
        if rng.random_bool(0.5) {
            parts.push(WeilSummand::Dim1 { nu, delta: rng.random_range(0..=1) });
        } else {
            parts.push(WeilSummand::Dim2 { nu, l: rng.random_range(0..=6) });
        }
    }
    WeilParameter::new(parts)
}

fn run_one(name: &str, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Tally {
    let mw = opts.max_weight;
    match name {
        "glrep" => {
            let mut t = Tally::new(name, mw.clamp(0, 4));
            glrep_suite(&mut t, rng, 3);
            t
        }
        "orthrep" => {
            let mut t = Tally::new(name, mw.clamp(0, 6));
            orthrep_suite(&mut t, rng, 5);
            t
        }
        "escoh" => {
            let mut t = Tally::new(name, mw.clamp(3, 9));
            escoh_suite(&mut t, rng, 5);
            t
        }
        "geom" => {
            let mut t = Tally::new(name, 0);
            geom_suite(&mut t, rng, opts.tol);
            t
        }
        _ => {
            let mut t = Tally::new(name, mw.clamp(2, 40));
            lfactors_suite(&mut t, rng);
            t
        }
    }
}

/// Runs the named suite (or `all`) and optionally writes the JSON report.
pub fn run_suite(name: &str, max_weight: i64, seed: u64, out: Option<&Path>) -> Result<VerifyReport> {
    run_suite_with(name, &VerifyOptions { max_weight, seed, ..VerifyOptions::default() }, out)
}

/// [`run_suite`] with every option.
pub fn run_suite_with(name: &str, opts: &VerifyOptions, out: Option<&Path>) -> Result<VerifyReport> {
    if !SUITES.contains(&name) {
        return Err(Error::Usage(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", "))));
    }
    let start = Instant::now();
    let names: Vec<&str> = if name == "all" { SUITES[..5].to_vec() } else { vec![name] };
    let mut suites = Vec::new();
    let mut failures = Vec::new();
    for n in names {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let t = run_one(n, opts, &mut rng);
        suites.push(t.summary());
        failures.extend(t.failures);
    }
    let report = VerifyReport {
        schema: SCHEMA.into(),
        suite: name.into(),
        seed: opts.seed,
        max_weight: opts.max_weight,
        count: suites.iter().map(|s| s.count).sum(),
        pass: suites.iter().map(|s| s.pass).sum(),
        suites,
        failures,
        wall_time_ms: opts.timing.then(|| start.elapsed().as_millis()),
    };
    if let Some(path) = out {
        write_atomic(path, &report.to_json())?;
    }
    Ok(report)
}

/// Writes `text` to a sibling temporary file and renames it over `path`.
pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let file = path.file_name().ok_or_else(|| Error::Io(format!("{}: not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.tmp", file.to_string_lossy()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.write_all(b"\n").map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_a_usage_error() {
        assert!(matches!(run_suite("nope", 1, 1, None), Err(Error::Usage(_))));
    }

    #[test]
    fn lfactors_suite_passes() {
        let r = run_suite("lfactors", 20, 1, None).unwrap();
        assert_eq!(r.pass, r.count, "{:?}", r.failures);
    }
}
