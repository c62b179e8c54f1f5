//! Spectral machinery for the Hermite operator `H = -Δ + |x|²` on ℝⁿ.
//!
//! The crate evaluates Hermite and Laguerre eigenfunctions stably to high
//! degree, builds quadrature rules for their products against power weights,
//! converts sampled functions to truncated eigenfunction expansions and back,
//! applies spectral multipliers (Bochner-Riesz means, band indicators,
//! Littlewood-Paley pieces, square functions, wave kernels), and estimates
//! weighted operator norms of band projections as finite eigenproblems.
//!
//! Everything here is pure computation over `alloc`; file formats, caching,
//! the CLI and parallel experiment drivers live in the companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod expansion;
pub mod gamma;
pub mod hermite;
pub mod laguerre;
pub mod quadrature;
pub mod report;
pub mod scaled;
pub mod spectral;
pub mod weighted;

use core::fmt;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar argument violated a precondition.
    InvalidArgument(&'static str),
    /// Point dimension does not match the multi-index dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// Requested degree exceeds what the rule or solver is configured for.
    DegreeTooLarge { requested: usize, max: usize },
    /// Evaluation point outside the validated range of a formula or rule.
    OutOfRange(&'static str),
    /// A multiplier or input produced a non-finite value.
    NonFinite(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::DegreeTooLarge { requested, max } => {
                write!(f, "degree {requested} exceeds configured maximum {max}")
            }
            Error::OutOfRange(m) => write!(f, "out of validated range: {m}"),
            Error::NonFinite(m) => write!(f, "non-finite value: {m}"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
