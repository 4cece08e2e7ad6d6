//! A minimal commutative-ring interface used by generic matrix code and by
//! polynomial evaluation in arbitrary coefficient rings.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::GaussianRational;

/// Commutative ring containing the Gaussian rationals as scalars.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Image of a scalar under the structure map Q(i) -> R.
    fn from_scalar(c: &GaussianRational) -> Self;

    /// Multiplication by a scalar.
    fn scale(&self, c: &GaussianRational) -> Self {
        self.clone() * Self::from_scalar(c)
    }

    /// Nonnegative integer power by repeated squaring.
    fn pow_u(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Ring for GaussianRational {
    fn from_scalar(c: &GaussianRational) -> Self {
        c.clone()
    }
    fn scale(&self, c: &GaussianRational) -> Self {
        self * c
    }
}
