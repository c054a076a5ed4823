//! Constructions and machine-checked identities for relativistic spin-1/2 and spin-1 wave
//! equations: Dirac and self/anti-self charge-conjugate spinors, discrete symmetries on a
//! one-particle Fock space, Maxwell-like and Weinberg–Tucker–Hammer spin-1 equations, and
//! mode-expansion relations.

pub mod algebra;
pub mod dirac;
pub mod error;
pub mod exact;
pub mod exec;
pub mod fockalg;
pub mod majorana;
pub mod matrix;
pub mod maxwell;
pub mod modeexpand;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod suites;
pub mod weinberg;

pub use error::{Error, Result};

/// Default tolerance for identity residuals.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Tolerance for tables with exact small-integer entries.
pub const TABLE_TOL: f64 = 1e-12;

/// `SPINORLAB_TOL` if set to a positive number, else [`DEFAULT_TOL`].
pub fn default_tolerance() -> f64 {
    std::env::var("SPINORLAB_TOL")
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|t| *t > 0.0 && t.is_finite())
        .unwrap_or(DEFAULT_TOL)
}
