//! Frozen-phase oscillator decomposition of `Z(t)` over a short window
//! anchored at `x`:
//!
//! ```text
//! Z(t) ~ sum_{n <= tau(x)} (2/sqrt(n)) cos(t omega_n(x) + psi(x)),
//! tau(x) = sqrt(x/2pi),  omega_n = ln(tau(x)/n),  psi(x) = -x/2 - pi/8,
//! ```
//!
//! valid for `t in [x, x + v]` with `v <= x^(1/4)` up to a remainder
//! `O(x^(-1/4))`. This is a diagnostic approximation only; quadrature always
//! evaluates `Z` exactly.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::T_MIN;

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct Oscillator {
    pub n: usize,
    /// `2/sqrt(n)`
    pub amplitude: f64,
    /// `ln(tau(x)/n)`, strictly decreasing in `n`, nonnegative for `n <= tau`.
    pub omega: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectralWindow {
    /// Window anchor.
    pub x: f64,
    /// Window length, `0 < v <= x^(1/4)`.
    pub v: f64,
    /// `sqrt(x/2pi)`.
    pub tau: f64,
    /// Phase constant `-x/2 - pi/8`.
    pub psi: f64,
    pub oscillators: Vec<Oscillator>,
}

pub fn spectral_window(x: f64, v: f64) -> Result<SpectralWindow> {
    if !(x >= T_MIN) {
        return Err(Error::BelowTMin(x));
    }
    let vmax = x.powf(0.25);
    if !(v > 0.0 && v <= vmax) {
        return Err(Error::InvalidParameter(format!(
            "window length v = {v} outside (0, x^(1/4) = {vmax}]"
        )));
    }
    let tau = (x / (2.0 * PI)).sqrt();
    let oscillators = (1..=tau as usize)
        .map(|n| Oscillator {
            n,
            amplitude: 2.0 / (n as f64).sqrt(),
            omega: (tau / n as f64).ln(),
        })
        .collect();
    Ok(SpectralWindow {
        x,
        v,
        tau,
        psi: -0.5 * x - PI / 8.0,
        oscillators,
    })
}

pub fn spectral_z(w: &SpectralWindow, t: f64) -> Result<f64> {
    if !(t >= w.x && t <= w.x + w.v) {
        return Err(Error::InvalidParameter(format!(
            "t = {t} outside window [{}, {}]",
            w.x,
            w.x + w.v
        )));
    }
    Ok(w.oscillators
        .iter()
        .map(|o| o.amplitude * (t * o.omega + w.psi).cos())
        .sum())
}
