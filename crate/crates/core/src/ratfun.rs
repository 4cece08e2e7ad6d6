//! Rational functions `num / den` over Q(i).
//!
//! No polynomial gcd is taken. When the denominator is a single monomial the
//! common monomial content is cancelled, which keeps the Laurent-type
//! expressions that arise in coordinate geometry small. Equality is decided by
//! cross-multiplication.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Exponents, MultiPoly, VariableSet};
use crate::ring::Ring;
use crate::scalar::GaussianRational;

/// A quotient of two polynomials over the same variable set.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    /// Builds `num / den`; errors when `den` is zero.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RationalFunction { num, den };
        r.normalize();
        Ok(r)
    }

    /// A polynomial viewed as a rational function.
    pub fn from_poly(p: MultiPoly) -> Self {
        let one = MultiPoly::one(p.vars());
        RationalFunction { num: p, den: one }
    }

    /// A constant over the given variables.
    pub fn constant(vars: &VariableSet, c: GaussianRational) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    /// The variable `name`.
    pub fn var(vars: &VariableSet, name: &str) -> Result<Self> {
        Ok(Self::from_poly(MultiPoly::var(vars, name)?))
    }

    /// Parses `num` or `(num)/(den)` in canonical polynomial syntax.
    pub fn parse(s: &str, vars: &VariableSet) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let mut depth = 1;
            for (k, ch) in rest.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                if depth == 0 {
                    let num = &rest[..k];
                    let tail = rest[k + 1..].trim();
                    if tail.is_empty() {
                        return Ok(Self::from_poly(MultiPoly::parse(num, vars)?));
                    }
                    if let Some(den) = tail.strip_prefix('/') {
                        let den = den.trim().trim_start_matches('(').trim_end_matches(')');
                        return Self::new(MultiPoly::parse(num, vars)?, MultiPoly::parse(den, vars)?);
                    }
                    break;
                }
            }
        }
        Ok(Self::from_poly(MultiPoly::parse(t, vars)?))
    }

    /// Numerator.
    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    /// Denominator.
    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    /// Variables of the numerator (and denominator).
    pub fn vars(&self) -> &VariableSet {
        self.num.vars()
    }

    /// True when the denominator is a single monomial.
    pub fn has_monomial_denominator(&self) -> bool {
        self.den.num_terms() == 1
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Integer power.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_u(e.unsigned_abs() as u32))
    }

    /// Partial derivative by the quotient rule.
    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        let k = self.vars().index_of(var)?;
        let dn = self.num.derivative_idx(k, 1);
        let dd = self.den.derivative_idx(k, 1);
        Self::new(&(&dn * &self.den) - &(&self.num * &dd), &self.den * &self.den)
    }

    /// Substitutes rational functions over `target` for named variables; the
    /// remaining variables must exist in `target`.
    pub fn substitute(&self, bindings: &[(&str, RationalFunction)], target: &VariableSet) -> Result<Self> {
        let mut images = Vec::with_capacity(self.vars().len());
        for (name, _) in bindings {
            self.vars().index_of(name)?;
        }
        for name in self.vars().names() {
            match bindings.iter().find(|(n, _)| n == name) {
                Some((_, img)) => images.push(img.clone()),
                None => images.push(Self::var(target, name)?),
            }
        }
        let n = self.num.eval_in(&images);
        let d = self.den.eval_in(&images);
        let out = (n * d.inv()?).reattach(target);
        Ok(out)
    }

    /// Evaluates at scalar values of all variables.
    pub fn evaluate(&self, values: &[GaussianRational]) -> Result<GaussianRational> {
        let d = self.den.evaluate(values);
        Ok(self.num.evaluate(values) * d.inverse()?)
    }

    /// Moves constants created over the empty variable set onto `target`.
    fn reattach(self, target: &VariableSet) -> Self {
        let fix = |p: MultiPoly| if p.vars().is_empty() { MultiPoly::constant(target, p.coeff(&[])) } else { p };
        RationalFunction { num: fix(self.num), den: fix(self.den) }
    }

    fn normalize(&mut self) {
        if self.num.vars().is_empty() && !self.den.vars().is_empty() {
            self.num = MultiPoly::constant(self.den.vars(), self.num.coeff(&[]));
        }
        if self.den.vars().is_empty() && !self.num.vars().is_empty() {
            self.den = MultiPoly::constant(self.num.vars(), self.den.coeff(&[]));
        }
        if self.num.is_zero() {
            self.den = MultiPoly::one(self.num.vars());
            return;
        }
        if self.den.num_terms() == 1 {
            let (de, dc) = self.den.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let mut common: Exponents = de.clone();
            for (e, _) in self.num.terms() {
                for (c, &x) in common.iter_mut().zip(e) {
                    *c = (*c).min(x);
                }
            }
            let inv = dc.inverse().expect("nonzero leading coefficient");
            let vars = self.num.vars().clone();
            self.num = MultiPoly::from_terms(
                &vars,
                self.num.terms().map(|(e, c)| (e.iter().zip(&common).map(|(a, b)| a - b).collect(), c * &inv)),
            );
            self.den = MultiPoly::monomial(&vars, de.iter().zip(&common).map(|(a, b)| a - b).collect(), GaussianRational::one());
        } else {
            let lc = self.den.leading_term().map(|(_, c)| c.clone()).unwrap();
            if !lc.is_one() {
                let inv = lc.inverse().expect("nonzero leading coefficient");
                self.num = self.num.scale(&inv);
                self.den = self.den.scale(&inv);
            }
        }
    }

    fn add_signed(&self, other: &Self, sign: i64) -> Self {
        let s = GaussianRational::from_int(sign);
        if self.has_monomial_denominator() && other.has_monomial_denominator() && self.den.vars() == other.den.vars() {
            let (ea, _) = self.den.leading_term().unwrap();
            let (eb, _) = other.den.leading_term().unwrap();
            let l: Exponents = ea.iter().zip(eb).map(|(a, b)| *a.max(b)).collect();
            let vars = self.den.vars().clone();
            let fa = MultiPoly::monomial(&vars, l.iter().zip(ea).map(|(x, y)| x - y).collect(), GaussianRational::one());
            let fb = MultiPoly::monomial(&vars, l.iter().zip(eb).map(|(x, y)| x - y).collect(), s);
            let num = &(&self.num * &fa) + &(&other.num * &fb);
            return Self::new(num, MultiPoly::monomial(&vars, l, GaussianRational::one())).expect("nonzero denominator");
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den).scale(&s);
        Self::new(num, &self.den * &other.den).expect("nonzero denominator")
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den) || (&(&self.num * &other.den) - &(&other.num * &self.den)).is_zero()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::from_poly(MultiPoly::constant(&VariableSet::new(&[]), GaussianRational::zero()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::from_poly(MultiPoly::one(&VariableSet::new(&[])))
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_signed(&rhs, 1)
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_signed(&rhs, -1)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Div for RationalFunction {
    type Output = Self;
    /// Panics on division by zero; use [`RationalFunction::inv`] to handle it.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero")
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Ring for RationalFunction {
    fn from_scalar(c: &GaussianRational) -> Self {
        RationalFunction::from_poly(MultiPoly::constant(&VariableSet::new(&[]), c.clone()))
    }
    fn scale(&self, c: &GaussianRational) -> Self {
        let mut r = RationalFunction { num: self.num.scale(c), den: self.den.clone() };
        r.normalize();
        r
    }
}

impl Field for RationalFunction {
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
