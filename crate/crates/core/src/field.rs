//! Fields: rings with a fallible inverse.

use crate::error::Result;
use crate::ring::Ring;
use crate::scalar::GaussianRational;

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Inverse; errors on zero.
    fn try_inv(&self) -> Result<Self>;
}

impl Field for GaussianRational {
    fn try_inv(&self) -> Result<Self> {
        self.inverse()
    }
}
