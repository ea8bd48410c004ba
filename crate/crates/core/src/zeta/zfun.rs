//! The real function `Z(t)` with `|Z(t)| = |zeta(1/2 + it)|`.
//!
//! Above the crossover height the Riemann-Siegel main sum of length
//! `floor(sqrt(t/2pi))` is used together with tabulated remainder correction
//! terms C0..C4; below it the zeta function itself is summed by
//! Euler-Maclaurin and rotated by the phase `theta(t)`.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

use super::rs_tables;
use super::theta::theta_any;
use crate::error::{Error, Result};
use crate::T_MIN;

/// Crossover height between the Euler-Maclaurin and Riemann-Siegel paths.
pub const T_CROSSOVER: f64 = 200.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Method {
    RiemannSiegel,
    EulerMaclaurin,
}

/// One evaluation of `Z(t)`.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ZSample {
    pub t: f64,
    pub z: f64,
    /// Main-sum length: `floor(sqrt(t/2pi))` for Riemann-Siegel, the
    /// truncation point of the Dirichlet series for Euler-Maclaurin.
    pub terms_used: usize,
    pub method: Method,
}

pub fn z(t: f64) -> Result<ZSample> {
    if !(t >= T_MIN) {
        return Err(Error::BelowTMin(t));
    }
    Ok(if t < T_CROSSOVER {
        let (z, n) = z_euler_maclaurin(t);
        ZSample {
            t,
            z,
            terms_used: n,
            method: Method::EulerMaclaurin,
        }
    } else {
        let (z, n) = z_riemann_siegel(t);
        ZSample {
            t,
            z,
            terms_used: n,
            method: Method::RiemannSiegel,
        }
    })
}

/// `Z(t)` for any `t >= 0`; the quadrature head segment starts at 0.
pub fn z_value_any(t: f64) -> f64 {
    if t < T_CROSSOVER {
        z_euler_maclaurin(t).0
    } else {
        z_riemann_siegel(t).0
    }
}

const TABLE_LEN: usize = 4096;

/// (ln n, 1/sqrt(n)) for n = 1..=TABLE_LEN, covering t up to ~1e8.
fn term_table() -> &'static [(f64, f64)] {
    static TABLE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (1..=TABLE_LEN)
            .map(|n| ((n as f64).ln(), 1.0 / (n as f64).sqrt()))
            .collect()
    })
}

fn cheb(coeffs: &[f64], x: f64) -> f64 {
    let (mut b0, mut b1) = (0.0, 0.0);
    for &c in coeffs.iter().rev() {
        let next = 2.0 * x * b0 - b1 + c;
        b1 = b0;
        b0 = next;
    }
    b0 - x * b1
}

pub(crate) fn z_riemann_siegel(t: f64) -> (f64, usize) {
    let a = (t / (2.0 * PI)).sqrt();
    let n = a as usize;
    let p = a - n as f64;
    let th = theta_any(t);

    let mut sum = 0.0;
    if n <= TABLE_LEN {
        for &(ln_k, inv_sqrt_k) in &term_table()[..n] {
            sum += inv_sqrt_k * (th - t * ln_k).cos();
        }
    } else {
        for k in 1..=n {
            sum += (th - t * (k as f64).ln()).cos() / (k as f64).sqrt();
        }
    }
    sum *= 2.0;

    let x = 2.0 * p - 1.0;
    let inv_a = 1.0 / a;
    let mut corr = cheb(&rs_tables::C4_CHEB, x);
    corr = corr * inv_a + cheb(&rs_tables::C3_CHEB, x);
    corr = corr * inv_a + cheb(&rs_tables::C2_CHEB, x);
    corr = corr * inv_a + cheb(&rs_tables::C1_CHEB, x);
    corr = corr * inv_a + cheb(&rs_tables::C0_CHEB, x);
    let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
    (sum + sign * corr / a.sqrt(), n)
}

/// `zeta(1/2 + it)` by Euler-Maclaurin, rotated onto the real axis.
pub(crate) fn z_euler_maclaurin(t: f64) -> (f64, usize) {
    // B_{2k} / (2k)! for k = 1..8
    const BERN: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30_240.0,
        -1.0 / 1_209_600.0,
        1.0 / 47_900_160.0,
        -5.284_190_138_687_493e-10,
        1.338_253_653_068_467_9e-11,
        -3.389_680_296_322_582_7e-13,
    ];
    let n = 24.max((1.3 * t).ceil() as usize);
    let s = Complex64::new(0.5, t);

    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..=n {
        let k = k as f64;
        // k^{-s} = k^{-1/2} e^{-it ln k}
        let phase = -t * k.ln();
        sum += Complex64::from_polar(1.0 / k.sqrt(), phase);
    }
    let nf = n as f64;
    let n_minus_s = Complex64::from_polar(nf.powf(-0.5), -t * nf.ln());
    // tail: N^{1-s}/(s-1) - N^{-s}/2 + sum_k B_{2k}/(2k)! * prod(s..s+2k-2) * N^{1-s-2k}
    sum += n_minus_s * nf / (s - 1.0) - 0.5 * n_minus_s;
    let mut factor = n_minus_s * s / nf; // s * N^{-s-1}
    for (k, b) in BERN.iter().enumerate() {
        sum += b * factor;
        let j = 2.0 * (k as f64) + 1.0;
        factor = factor * (s + j) * (s + (j + 1.0)) / (nf * nf);
    }

    let rotation = Complex64::from_polar(1.0, theta_any(t));
    ((rotation * sum).re, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_below_minimum() {
        assert!(z(9.99).is_err());
    }

    #[test]
    fn main_sum_length() {
        let s = z(1e6).unwrap();
        assert_eq!(s.method, Method::RiemannSiegel);
        assert_eq!(s.terms_used, (1e6 / (2.0 * PI)).sqrt() as usize);
        assert!(s.z.is_finite());
    }

    #[test]
    fn paths_agree_in_overlap_band() {
        // Around the crossover both evaluations must agree to 1e-6.
        let mut t = 150.0;
        while t <= 400.0 {
            let (rs, _) = z_riemann_siegel(t);
            let (em, _) = z_euler_maclaurin(t);
            assert!(
                (rs - em).abs() < 1e-6,
                "t = {t}: riemann_siegel {rs} vs euler_maclaurin {em}"
            );
            t += 7.3;
        }
    }

    #[test]
    fn small_t_is_finite_down_to_zero() {
        // Head-segment path: Z(0) = zeta(1/2) ~ -1.4603545
        let z0 = z_value_any(0.0);
        assert!((z0 - (-1.460_354_508_809_586_8)).abs() < 1e-9, "Z(0) = {z0}");
        for i in 0..40 {
            assert!(z_value_any(i as f64 * 0.25).is_finite());
        }
    }

    #[test]
    fn first_zero_bracketed() {
        // First critical-line zero at t ~ 14.134725
        let lo = z(14.0).unwrap().z;
        let hi = z(14.3).unwrap().z;
        assert!(lo * hi < 0.0, "no sign change: {lo}, {hi}");
    }
}
