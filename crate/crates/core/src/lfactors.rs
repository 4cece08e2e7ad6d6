//! Weil-group parameters at the real place, their Γ- and ε-factors, critical
//! points of `L(s, π⁽³⁾ x π⁽²⁾)` and the exact constants attached to them.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::escoh::closed_form::binomial;
use crate::scalar::GaussianRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An irreducible summand of a real Weil-group parameter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeilSummand {
    /// The character `φ^δ_ν`.
    Dim1 {
        /// Twist `ν`.
        nu: BigRational,
        /// Sign `δ ∈ {0, 1}`.
        delta: u8,
    },
    /// The induced representation `φ_{ν,l}` with `l >= 0`.
    Dim2 {
        /// Twist `ν`.
        nu: BigRational,
        /// Weight `l`.
        l: i64,
    },
}

impl WeilSummand {
    /// `φ^δ_ν`.
    pub fn dim1(nu: BigRational, delta: u8) -> Result<Self> {
        if delta > 1 {
            return Err(Error::InvalidParams(format!("δ = {delta}")));
        }
        Ok(WeilSummand::Dim1 { nu, delta })
    }

    /// `φ_{ν,l}`.
    pub fn dim2(nu: BigRational, l: i64) -> Result<Self> {
        if l < 0 {
            return Err(Error::InvalidParams(format!("l = {l} is negative")));
        }
        Ok(WeilSummand::Dim2 { nu, l })
    }

    /// The twist `ν`.
    pub fn nu(&self) -> &BigRational {
        match self {
            WeilSummand::Dim1 { nu, .. } | WeilSummand::Dim2 { nu, .. } => nu,
        }
    }

    fn with_nu(&self, nu: BigRational) -> Self {
        match self {
            WeilSummand::Dim1 { delta, .. } => WeilSummand::Dim1 { nu, delta: *delta },
            WeilSummand::Dim2 { l, .. } => WeilSummand::Dim2 { nu, l: *l },
        }
    }
}

impl fmt::Display for WeilSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeilSummand::Dim1 { nu, delta } => write!(f, "phi^{delta}_{nu}"),
            WeilSummand::Dim2 { nu, l } => write!(f, "phi_({nu},{l})"),
        }
    }
}

/// A finite direct sum of summands, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeilParameter(Vec<WeilSummand>);

impl WeilParameter {
    /// The sum of the given summands.
    pub fn new(mut summands: Vec<WeilSummand>) -> Self {
        summands.sort();
        WeilParameter(summands)
    }

    /// The summands in canonical order.
    pub fn summands(&self) -> &[WeilSummand] {
        &self.0
    }

    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.0.iter().map(|s| if matches!(s, WeilSummand::Dim1 { .. }) { 1 } else { 2 }).sum()
    }

    /// Direct sum.
    pub fn direct_sum(&self, other: &WeilParameter) -> Self {
        WeilParameter::new(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl fmt::Display for WeilParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn tensor_summands(a: &WeilSummand, b: &WeilSummand) -> Result<Vec<WeilSummand>> {
    let nu = a.nu() + b.nu();
    Ok(match (a, b) {
        (WeilSummand::Dim1 { delta: d1, .. }, WeilSummand::Dim1 { delta: d2, .. }) => {
            vec![WeilSummand::Dim1 { nu, delta: (d1 + d2) % 2 }]
        }
        (WeilSummand::Dim1 { .. }, WeilSummand::Dim2 { l, .. }) | (WeilSummand::Dim2 { l, .. }, WeilSummand::Dim1 { .. }) => {
            vec![WeilSummand::Dim2 { nu, l: *l }]
        }
        (WeilSummand::Dim2 { l: l1, .. }, WeilSummand::Dim2 { l: l2, .. }) => {
            if l1 == l2 {
                return Err(Error::InvalidParams(format!("tensor of two summands with equal weight l = {l1}")));
            }
            vec![WeilSummand::Dim2 { nu: nu.clone(), l: l1 + l2 }, WeilSummand::Dim2 { nu, l: (l1 - l2).abs() }]
        }
    })
}

/// Tensor product, distributed over direct sums. Fails on a pair of
/// two-dimensional summands of equal weight.
pub fn tensor(p: &WeilParameter, q: &WeilParameter) -> Result<WeilParameter> {
    let mut out = Vec::new();
    for a in &p.0 {
        for b in &q.0 {
            out.extend(tensor_summands(a, b)?);
        }
    }
    Ok(WeilParameter::new(out))
}

/// Contragredient: every `ν` is negated.
pub fn dual(p: &WeilParameter) -> WeilParameter {
    WeilParameter::new(p.0.iter().map(|s| s.with_nu(-s.nu().clone())).collect())
}

/// The two archimedean Γ-functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GammaKind {
    /// `Γ_R(s) = π^{-s/2} Γ(s/2)`.
    R,
    /// `Γ_C(s) = 2 (2π)^{-s} Γ(s)`.
    C,
}

/// A factor `Γ_R(s + shift)` or `Γ_C(s + shift)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaFactor {
    /// Which Γ-function.
    pub kind: GammaKind,
    /// The shift of the argument.
    pub shift: BigRational,
}

impl GammaFactor {
    /// True when the factor has a pole at `s`.
    pub fn has_pole_at(&self, s: &BigRational) -> bool {
        let x = s + &self.shift;
        if !x.is_integer() || x.is_positive() {
            return false;
        }
        match self.kind {
            GammaKind::C => true,
            GammaKind::R => x.to_integer().is_even(),
        }
    }

    /// Numerical value at a real `s`.
    pub fn eval(&self, s: f64) -> f64 {
        let x = s + rational_to_f64(&self.shift);
        match self.kind {
            GammaKind::R => gamma_r(x),
            GammaKind::C => gamma_c(x),
        }
    }
}

impl fmt::Display for GammaFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GammaKind::R => "R",
            GammaKind::C => "C",
        };
        if self.shift.is_zero() {
            write!(f, "Gamma_{k}(s)")
        } else if self.shift.is_negative() {
            write!(f, "Gamma_{k}(s - {})", -self.shift.clone())
        } else {
            write!(f, "Gamma_{k}(s + {})", self.shift)
        }
    }
}

/// A product of Γ-factors, compared as a multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaProduct(Vec<GammaFactor>);

impl GammaProduct {
    /// The product of the given factors.
    pub fn new(mut factors: Vec<GammaFactor>) -> Self {
        factors.sort();
        GammaProduct(factors)
    }

    /// The factors in canonical order.
    pub fn factors(&self) -> &[GammaFactor] {
        &self.0
    }

    /// True when some factor has a pole at `s`.
    pub fn has_pole_at(&self, s: &BigRational) -> bool {
        self.0.iter().any(|g| g.has_pole_at(s))
    }

    /// Substitutes `s -> s + t`.
    pub fn shift_by(&self, t: &BigRational) -> Self {
        GammaProduct::new(self.0.iter().map(|g| GammaFactor { kind: g.kind, shift: &g.shift + t }).collect())
    }

    /// Numerical value at a real `s`.
    pub fn eval(&self, s: f64) -> f64 {
        self.0.iter().map(|g| g.eval(s)).product()
    }
}

impl fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `L_∞(s, φ)`: `φ_{ν,l} -> Γ_C(s + ν + l/2)` and `φ^δ_ν -> Γ_R(s + ν + δ)`.
pub fn gamma_factor(p: &WeilParameter) -> GammaProduct {
    GammaProduct::new(
        p.0.iter()
            .map(|s| match s {
                WeilSummand::Dim1 { nu, delta } => GammaFactor { kind: GammaKind::R, shift: nu + q(*delta as i64, 1) },
                WeilSummand::Dim2 { nu, l } => GammaFactor { kind: GammaKind::C, shift: nu + q(*l, 2) },
            })
            .collect(),
    )
}

/// The exponent `e` (mod 4) with `ε_∞ = i^e`: `l + 1` for `φ_{ν,l}` and `δ`
/// for `φ^δ_ν`, added over summands.
pub fn epsilon_exponent(p: &WeilParameter) -> i64 {
    p.0.iter()
        .map(|s| match s {
            WeilSummand::Dim1 { delta, .. } => *delta as i64,
            WeilSummand::Dim2 { l, .. } => l + 1,
        })
        .sum::<i64>()
        .rem_euclid(4)
}

fn rational_to_f64(x: &BigRational) -> f64 {
    let n: f64 = x.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = x.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

/// `Γ_R(s) = π^{-s/2} Γ(s/2)`.
pub fn gamma_r(s: f64) -> f64 {
    PI.powf(-s / 2.0) * gamma(s / 2.0)
}

/// `Γ_C(s) = 2 (2π)^{-s} Γ(s)`.
pub fn gamma_c(s: f64) -> f64 {
    2.0 * (2.0 * PI).powf(-s) * gamma(s)
}

/// The weights of a pair of cohomological cuspidal representations of GL(3)
/// and GL(2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PiParams {
    /// GL(2) weight `l2 >= 1`.
    pub l2: i64,
    /// GL(3) weight, even, `l3 > l2`.
    pub l3: i64,
    /// Sign `δ ∈ {0, 1}`.
    pub delta: u8,
}

impl PiParams {
    /// Validates `l2 >= 1`, `l3 >= 2` even, `l2 < l3`, `δ ∈ {0, 1}`.
    pub fn new(l2: i64, l3: i64, delta: u8) -> Result<Self> {
        if l2 < 1 || l3 < 2 || l3 % 2 != 0 || l2 >= l3 || delta > 1 {
            return Err(Error::InvalidParams(format!("(l2, l3, δ) = ({l2}, {l3}, {delta})")));
        }
        Ok(PiParams { l2, l3, delta })
    }

    /// `ν₂ = -l2/2 + 1/2`.
    pub fn nu2(&self) -> BigRational {
        q(1 - self.l2, 2)
    }

    /// `ν₃ = -l3/2 + 1`.
    pub fn nu3(&self) -> BigRational {
        q(1 - self.l3 / 2, 1)
    }

    /// The parameter `φ_{ν₂,l2}` of `π⁽²⁾`.
    pub fn phi2(&self) -> WeilParameter {
        WeilParameter::new(vec![WeilSummand::Dim2 { nu: self.nu2(), l: self.l2 }])
    }

    /// The parameter `φ_{ν₃,l3} ⊕ φ^δ_{ν₃}` of `π⁽³⁾`.
    pub fn phi3(&self) -> WeilParameter {
        WeilParameter::new(vec![
            WeilSummand::Dim2 { nu: self.nu3(), l: self.l3 },
            WeilSummand::Dim1 { nu: self.nu3(), delta: self.delta },
        ])
    }

    /// The parameter of `π⁽³⁾ x π⁽²⁾`.
    pub fn phi_pair(&self) -> WeilParameter {
        tensor(&self.phi3(), &self.phi2()).expect("l2 < l3 excludes equal weights")
    }

    /// `L_∞(s - 3/2, π⁽³⁾ x π⁽²⁾)` in the motivic variable `s`.
    pub fn motivic_gamma(&self) -> GammaProduct {
        gamma_factor(&self.phi_pair()).shift_by(&q(-3, 2))
    }

    /// `L_∞(1 - (s - 3/2), dual)` read as a product in `s`: each factor
    /// `Γ(s' + b)` of the dual becomes `Γ(5/2 + b - s)`; returned as the list
    /// of `(kind, 5/2 + b)` so that the argument is `shift - s`.
    pub fn dual_motivic_gamma(&self) -> Vec<GammaFactor> {
        gamma_factor(&dual(&self.phi_pair()))
            .factors()
            .iter()
            .map(|g| GammaFactor { kind: g.kind, shift: &g.shift + q(5, 2) })
            .collect()
    }

    /// Critical points from the closed-form intervals.
    pub fn critical_points(&self) -> Vec<i64> {
        let h = self.l3 / 2;
        if self.l2 <= h {
            (h + 1..=h + self.l2).collect()
        } else {
            (self.l2 + 1..=self.l3).collect()
        }
    }

    /// Critical points from the pole sets of the two Γ-products.
    pub fn critical_points_by_poles(&self) -> Vec<i64> {
        let bound = self.l2 + self.l3 + 4;
        let g = self.motivic_gamma();
        let d = self.dual_motivic_gamma();
        (-bound..=bound)
            .filter(|&m| {
                let s = q(m, 1);
                let dual_pole = d.iter().any(|f| GammaFactor { kind: f.kind, shift: f.shift.clone() - &s }.has_pole_at(&BigRational::zero()));
                !g.has_pole_at(&s) && !dual_pole
            })
            .collect()
    }

    /// Critical points from the Hodge criterion.
    pub fn critical_points_by_hodge(&self) -> Vec<i64> {
        let bound = self.l2 + self.l3 + 4;
        (-bound..=bound).filter(|&m| self.critical_by_hodge(m)).collect()
    }

    /// True when `m` is critical.
    pub fn is_critical(&self, m: i64) -> bool {
        self.critical_points().contains(&m)
    }

    /// Errors with [`Error::NotCritical`] unless `m` is critical.
    pub fn require_critical(&self, m: i64) -> Result<()> {
        if self.is_critical(m) {
            Ok(())
        } else {
            Err(Error::NotCritical { l2: self.l2, l3: self.l3, m })
        }
    }

    /// The six Hodge types of the Tate-twisted motive at `m`.
    pub fn hodge_types(&self, m: i64) -> [(i64, i64); 6] {
        let (l2, l3, h) = (self.l2, self.l3, self.l3 / 2);
        [
            (l3 + l2 - m, -m),
            (l3 - m, l2 - m),
            (h + l2 - m, h - m),
            (h - m, h + l2 - m),
            (l2 - m, l3 - m),
            (-m, l3 + l2 - m),
        ]
    }

    /// True when no Hodge type straddles the critical line.
    pub fn critical_by_hodge(&self, m: i64) -> bool {
        self.hodge_types(m).iter().all(|&(p, q)| (p <= -1 && q >= 0) || (p >= 0 && q <= -1))
    }
}

/// The parity and scalar of the main identity at a critical point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainConstant {
    /// `(-1)^{m + δ + l3/2}`.
    pub parity: i8,
    /// `(-1)^δ i^{l3/2-m+1} binom(l3/2-1, m-l3/2-1) binom(l3/2-1, l3/2+l2-m)`.
    #[serde(serialize_with = "crate::report::ser_scalar")]
    pub scalar: GaussianRational,
}

fn sign(k: i64) -> i8 {
    if k.is_even() {
        1
    } else {
        -1
    }
}

/// `binom(l3/2-1, m-l3/2-1) binom(l3/2-1, l3/2+l2-m)`.
pub fn critical_binomials(pp: &PiParams, m: i64) -> BigInt {
    let h = pp.l3 / 2;
    binomial(h - 1, m - h - 1) * binomial(h - 1, h + pp.l2 - m)
}

/// Checks `(-1)^{δ+l2+1} i^{l3/2+2l2-m-1} = (-1)^δ i^{l3/2-m+1}`.
pub fn assembly_identity(pp: &PiParams, m: i64) -> bool {
    let d = pp.delta as i64;
    let h = pp.l3 / 2;
    let lhs = GaussianRational::sign_power(d + pp.l2 + 1) * GaussianRational::power_of_i(h + 2 * pp.l2 - m - 1);
    let rhs = GaussianRational::sign_power(d) * GaussianRational::power_of_i(h - m + 1);
    lhs == rhs
}

/// The constant of the main identity at a critical `m`.
pub fn main_constant(pp: &PiParams, m: i64) -> Result<MainConstant> {
    pp.require_critical(m)?;
    if !assembly_identity(pp, m) {
        return Err(Error::Numeric(format!("assembly identity fails at m = {m}")));
    }
    let d = pp.delta as i64;
    let h = pp.l3 / 2;
    let scalar = GaussianRational::sign_power(d)
        * GaussianRational::power_of_i(h - m + 1)
        * GaussianRational::from_bigint(critical_binomials(pp, m));
    Ok(MainConstant { parity: sign(m + d + h), scalar })
}

/// Secondary constants at a critical point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuxConstants {
    /// Exponent `l3/2 + l2 - 3m` of the power of `i` in the modified factor.
    pub modified_exponent: i64,
    /// `(-1)^{δ+m} i^{l2-1} C⁻¹`, the normalisation of the branching map.
    #[serde(serialize_with = "crate::report::ser_scalar")]
    pub nabla_coefficient: GaussianRational,
    /// `(-1)^{δ+l2+1}`.
    pub e_infinity: i8,
    /// `ω_{π⁽²⁾,∞}(-1) = (-1)^{l2+1}`.
    pub omega2: i8,
    /// `ω_{π⁽³⁾,∞}(-1) = -(-1)^δ`.
    pub omega3: i8,
    /// `(-1)^{δ+λ2}` with `λ2 = l2 + 1`.
    pub period_sign: i8,
}

/// Secondary constants at a critical `m`.
pub fn aux_constants(pp: &PiParams, m: i64) -> Result<AuxConstants> {
    pp.require_critical(m)?;
    let d = pp.delta as i64;
    let c = GaussianRational::from_bigint(critical_binomials(pp, m));
    Ok(AuxConstants {
        modified_exponent: pp.l3 / 2 + pp.l2 - 3 * m,
        nabla_coefficient: GaussianRational::sign_power(d + m) * GaussianRational::power_of_i(pp.l2 - 1) * c.inverse()?,
        e_infinity: sign(d + pp.l2 + 1),
        omega2: sign(pp.l2 + 1),
        omega3: -sign(d),
        period_sign: sign(d + pp.l2 + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_examples() {
        assert_eq!(PiParams::new(2, 8, 0).unwrap().critical_points(), vec![5, 6]);
        assert_eq!(PiParams::new(4, 6, 0).unwrap().critical_points(), vec![5, 6]);
        assert_eq!(PiParams::new(2, 4, 1).unwrap().critical_points(), vec![3, 4]);
    }

    #[test]
    fn pole_method_agrees() {
        let pp = PiParams::new(2, 8, 0).unwrap();
        assert_eq!(pp.critical_points_by_poles(), vec![5, 6]);
        assert_eq!(pp.critical_points_by_hodge(), vec![5, 6]);
    }

    #[test]
    fn main_constant_examples() {
        let pp = PiParams::new(2, 8, 0).unwrap();
        let c5 = main_constant(&pp, 5).unwrap();
        assert_eq!((c5.parity, c5.scalar), (-1, GaussianRational::from_int(3)));
        let c6 = main_constant(&pp, 6).unwrap();
        assert_eq!((c6.parity, c6.scalar), (1, GaussianRational::from_ints(0, -3)));
        assert!(main_constant(&pp, 7).is_err());
    }
}
