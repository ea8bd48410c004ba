//! The scalar bundle every formula in the crate refers to.

use crate::error::{Error, Result};

/// Euler's constant `c`.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `ln(2 pi)`.
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Configuration constants for the ladder and the laws.
///
/// `lambda1 = 2c - 1 - ln 2pi` and `lambda2 = c - ln 2pi` are always
/// recomputed from `c` so they can never drift out of sync.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Constants {
    /// Euler's constant.
    pub c: f64,
    /// Additive constant in the defining equation of `phi1` (from the
    /// Titchmarsh-Kober-Atkinson formula; no established numeric value, so it
    /// defaults to 0 and is exposed for sensitivity experiments).
    pub c0: f64,
    /// Error-term exponent `a` in `[1/4, 1/3]` used by residual diagnostics.
    pub a_exp: f64,
    /// Small `delta` added to `a` in diagnostic ratios.
    pub delta: f64,
}

impl Constants {
    pub fn new(c0: f64, a_exp: f64, delta: f64) -> Result<Self> {
        if !(0.25..=1.0 / 3.0 + 1e-15).contains(&a_exp) {
            return Err(Error::InvalidParameter(format!(
                "a_exp must lie in [1/4, 1/3], got {a_exp}"
            )));
        }
        if !(delta > 0.0) || !c0.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "need delta > 0 and finite c0, got delta = {delta}, c0 = {c0}"
            )));
        }
        Ok(Self {
            c: EULER_GAMMA,
            c0,
            a_exp,
            delta,
        })
    }

    /// Complementary Euler constant `1 - c`.
    pub fn c_bar(&self) -> f64 {
        1.0 - self.c
    }

    /// `2c - 1 - ln 2pi`.
    pub fn lambda1(&self) -> f64 {
        2.0 * self.c - 1.0 - LN_2PI
    }

    /// `c - ln 2pi`.
    pub fn lambda2(&self) -> f64 {
        self.c - LN_2PI
    }

    pub fn with_c0(mut self, c0: f64) -> Self {
        self.c0 = c0;
        self
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self {
            c: EULER_GAMMA,
            c0: 0.0,
            a_exp: 1.0 / 3.0,
            delta: 0.05,
        }
    }
}
