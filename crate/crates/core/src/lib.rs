//! Numerical machinery around the second moment of the Riemann zeta function
//! on the critical line.
//!
//! The crate evaluates the Riemann-Siegel function `Z(t)` (with
//! `|Z(t)| = |zeta(1/2 + it)|`), integrates `Z(t)^2` by oscillation-resolving
//! panel quadrature with persistent checkpointing, solves for the increasing
//! function `phi1(T)` defined by
//!
//! ```text
//! int_0^T |zeta(1/2+it)|^2 dt = phi1 ln(phi1) + (c - ln 2pi) phi1 + c0
//! ```
//!
//! (`c` = Euler's constant), iterates its inverse to build the chain
//! `T < T1 < T2 < ... < Tk`, and checks a family of asymptotic laws tying the
//! resulting increments of the integral to `(1 - c) T`, to the prime-counting
//! function, and to each other.

pub mod constants;
pub mod error;
pub mod ladder;
pub mod laws;
pub mod primes;
pub mod quadrature;
pub mod zeta;

pub use constants::Constants;
pub use error::{Error, Result};
pub use ladder::{LadderPoint, ReverseSequence};
pub use laws::{LawId, LawReport, ResidualDiagnostic};
pub use quadrature::{CheckpointStore, QuadratureResult};

/// Smallest height at which the public evaluators are supported.
pub const T_MIN: f64 = 10.0;
