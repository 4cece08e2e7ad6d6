//! Serialization helpers that write exact scalars as strings.

use num_bigint::BigInt;
use serde::Serializer;

use crate::scalar::GaussianRational;

/// Serializes a Gaussian rational through its canonical string form.
pub fn ser_scalar<S: Serializer>(x: &GaussianRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_canonical())
}

/// Serializes a big integer as a decimal string.
pub fn ser_bigint<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}
