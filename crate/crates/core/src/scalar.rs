//! Exact Gaussian rationals `a + b*i` with `a, b` in Q.
//!
//! Both parts are stored as reduced [`BigRational`] values, so structural
//! equality coincides with equality of field elements.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of the field Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    /// Builds `re + im*i`.
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    /// The integer `n` as a Gaussian rational.
    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// The rational `num/den`; panics when `den == 0`.
    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// The Gaussian integer `a + b*i`.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    /// Embeds a rational number.
    pub fn from_rational(q: BigRational) -> Self {
        Self::new(q, BigRational::zero())
    }

    /// Embeds a big integer.
    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    /// Real part.
    pub fn re(&self) -> &BigRational {
        &self.re
    }

    /// Imaginary part.
    pub fn im(&self) -> &BigRational {
        &self.im
    }

    /// True when the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// The rational norm `re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Integer power for exponents known to be nonnegative.
    pub fn powu(&self, e: u32) -> Self {
        self.pow(e as i64).expect("nonnegative exponent")
    }

    /// `i^k` for any integer `k`, reduced modulo 4.
    pub fn power_of_i(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::from_ints(1, 0),
            1 => Self::from_ints(0, 1),
            2 => Self::from_ints(-1, 0),
            _ => Self::from_ints(0, -1),
        }
    }

    /// `(-1)^k`.
    pub fn sign_power(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    /// If `self = u * i^k` with `u` a positive rational, returns `(u, k mod 4)`.
    pub fn as_i_power_multiple(&self) -> Option<(BigRational, i64)> {
        match (self.re.is_zero(), self.im.is_zero()) {
            (false, true) if self.re.is_positive() => Some((self.re.clone(), 0)),
            (false, true) => Some((-self.re.clone(), 2)),
            (true, false) if self.im.is_positive() => Some((self.im.clone(), 1)),
            (true, false) => Some((-self.im.clone(), 3)),
            _ => None,
        }
    }

    /// True when both parts have denominators that are powers of two,
    /// i.e. the element lies in Z[1/2, i].
    pub fn in_z_half_i(&self) -> bool {
        fn dyadic(q: &BigRational) -> bool {
            let mut d = q.denom().clone();
            let two = BigInt::from(2);
            while d.is_even() {
                d /= &two;
            }
            d.is_one()
        }
        dyadic(&self.re) && dyadic(&self.im)
    }

    /// Approximate complex value as `(re, im)` doubles.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Canonical text form, identical to [`fmt::Display`].
    pub fn to_canonical(&self) -> String {
        self.to_string()
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GaussianRational::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| {
    GaussianRational::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
});
forward_binop!(Div, div, |a, b| a * &b.inverse().expect("division by zero"));

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, rhs: GaussianRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Renders `a/b + c/d*i`, suppressing zero parts; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |q: &BigRational| -> String {
            if q.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", fmt_rational(q))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => {
                if self.im.is_negative() {
                    write!(f, "-{}", imag(&-self.im.clone()))
                } else {
                    write!(f, "{}", imag(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}", fmt_rational(&self.re), sign, imag(&self.im.abs()))
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse(format!("bad rational `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(BigRational::new(n, d))
    } else {
        Ok(BigRational::from_integer(s.parse().map_err(|_| err())?))
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Parses sums of rational and `q*i` terms, e.g. `-1/2`, `3*i`, `1/2 - i`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for k in 1..bytes.len() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/' && bytes[k - 1] != b'*' {
                terms.push(&compact[start..k]);
                start = k;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = GaussianRational::zero();
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(t)),
            };
            let value = if body == "i" {
                GaussianRational::i()
            } else if let Some(c) = body.strip_suffix("*i") {
                GaussianRational::new(BigRational::zero(), parse_rational(c)?)
            } else {
                GaussianRational::from_rational(parse_rational(body)?)
            };
            acc += if neg { -value } else { value };
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(GaussianRational::power_of_i(0), GaussianRational::one());
        assert_eq!(GaussianRational::power_of_i(2), -GaussianRational::one());
        assert_eq!(GaussianRational::power_of_i(-1), -GaussianRational::i());
        assert_eq!(GaussianRational::i().pow(7).unwrap(), GaussianRational::power_of_i(7));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let z = GaussianRational::from_ints(1, 1);
        assert_eq!(z.inverse().unwrap(), g("1/2 - 1/2*i"));
        assert_eq!(GaussianRational::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rendering_round_trips() {
        for s in ["0", "3", "-3/2", "i", "-i", "1/2*i", "-1/2*i", "1/2 + 3*i", "-7/3 - 5/4*i", "2 + i"] {
            let z = g(s);
            assert_eq!(z.to_string(), s);
            assert_eq!(g(&z.to_string()), z);
        }
    }

    #[test]
    fn dyadic_membership() {
        assert!(g("3/8 - 5/2*i").in_z_half_i());
        assert!(!g("1/3").in_z_half_i());
    }
}
