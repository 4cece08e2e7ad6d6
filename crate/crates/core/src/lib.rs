//! Exact and numerical tools for branching laws, archimedean cohomology and
//! critical values of L-functions on GL(3) x GL(2).

pub mod error;
pub mod escoh;
pub mod field;
pub mod geom;
pub mod glrep;
pub mod lfactors;
pub mod matrix;
pub mod orthrep;
pub mod poly;
pub mod ratfun;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::GaussianRational;
