//! Exact-arithmetic certificates for an eight-plane arrangement in P^3:
//! Jacobian-ring invariants, characteristic-subvariety geometry, iterated
//! symmetric-square Higgs images, and the Lie-theoretic classification data
//! backing them. Everything is computed over Q; no floating point anywhere.

use std::fmt;

pub mod arrangement;
pub mod certificate;
pub mod charvar;
pub mod ideal;
pub mod lie;
pub mod matrix;
pub mod plethysm;
pub mod poly;
pub mod rational;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed internal data: shape mismatches, invalid permutations, etc.
    Structural(String),
    /// A documented contract was violated (e.g. non-bihomogeneous input to a
    /// bigraded reduction).
    Contract(String),
    /// User-supplied input was rejected (bad file, degenerate arrangement).
    Input(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Structural(m) => write!(f, "structural error: {m}"),
            Error::Contract(m) => write!(f, "contract violation: {m}"),
            Error::Input(m) => write!(f, "input rejected: {m}"),
        }
    }
}

impl std::error::Error for Error {}

/// Run independent closures, in parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub(crate) fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
