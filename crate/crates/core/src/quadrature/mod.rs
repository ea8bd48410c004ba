//! Panel quadrature of `Z(t)^2` and the checkpointed Hardy-Littlewood
//! integral `J(T) = int_0^T Z(t)^2 dt`.
//!
//! The fastest component of `Z^2` oscillates with instantaneous frequency
//! `ln(t/2pi)` (the `2 theta(t)` term), so a panel of width `w` carries at
//! most `w ln(t/2pi)` radians of that phase. Panels are sized to a fixed
//! phase budget well inside what the Gauss-Legendre pair resolves: the value
//! is G64 (exact at this budget to ~1e-19 for a pure tone), the error
//! estimate the embedded `|G64 - G32|` difference, with bisection refinement
//! on the rare panel that exceeds its share of the tolerance.

mod gauss;
mod store;

pub use store::{Checkpoint, CheckpointStore};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::zeta::z_value_any;

/// Default absolute tolerance per unit of interval length. Law residuals of
/// interest are orders of magnitude above this.
pub const DEFAULT_TOL_PER_UNIT: f64 = 1e-3;

const MAX_DEPTH: u32 = 14;

/// Absolute noise of the embedded error estimate per unit of panel width,
/// set a factor above the observed ~1e-9 evaluation accuracy of `Z`.
const EST_NOISE_PER_UNIT: f64 = 4e-9;

/// Node/weight pairs of the 16-point rule on `[-1, 1]`, for reuse by callers
/// integrating functions other than `Z^2`.
pub(crate) fn gl16() -> impl Iterator<Item = (f64, f64)> {
    gauss::GL16_NODES
        .iter()
        .copied()
        .zip(gauss::GL16_WEIGHTS.iter().copied())
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct QuadratureResult {
    pub a: f64,
    pub b: f64,
    /// Integral of `Z(t)^2` over `[a, b]`; nonnegative.
    pub value: f64,
    pub err_estimate: f64,
    pub panels: usize,
}

/// Radians of `2 theta` phase allowed across one panel. G32 still resolves a
/// pure tone at this budget to ~1e-9 (half-range omega = 28 against the
/// resolution limit ~2n), so the embedded estimate stays meaningful.
const PANEL_PHASE_BUDGET: f64 = 56.0;

/// Largest panel width regardless of height (covers the slow low-t region).
const PANEL_WIDTH_CAP: f64 = 2.0;

/// Panel width from the phase budget, capped at 2.
fn panel_width(t: f64) -> f64 {
    let l = (t / (2.0 * PI)).ln();
    if l <= PANEL_PHASE_BUDGET / PANEL_WIDTH_CAP {
        PANEL_WIDTH_CAP
    } else {
        PANEL_PHASE_BUDGET / l
    }
}

fn z2(t: f64) -> f64 {
    let z = z_value_any(t);
    z * z
}

fn gl_sum(nodes: &[f64], weights: &[f64], mid: f64, half: f64) -> f64 {
    let mut s = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        s += w * z2(mid + half * x);
    }
    s * half
}

/// One panel with embedded error estimate and bisection refinement.
fn panel(t0: f64, t1: f64, budget: f64, depth: u32) -> (f64, f64, usize) {
    let mid = 0.5 * (t0 + t1);
    let half = 0.5 * (t1 - t0);
    let fine = gl_sum(&gauss::GL64_NODES, &gauss::GL64_WEIGHTS, mid, half);
    let coarse = gl_sum(&gauss::GL32_NODES, &gauss::GL32_WEIGHTS, mid, half);
    let err = (fine - coarse).abs();
    // noise floor of the pair estimate: Z is evaluated to ~1e-9 absolute, so
    // |G64 - G32| bottoms out near that rate times the width. The noise
    // shrinks with the width exactly as the budget does, so refining below
    // the floor recurses to MAX_DEPTH without gaining accuracy.
    let floor = EST_NOISE_PER_UNIT * (t1 - t0);
    if err <= budget.max(floor) || depth >= MAX_DEPTH || t1 - t0 < 1e-9 {
        return (fine, err, 1);
    }
    let (vl, el, pl) = panel(t0, mid, 0.5 * budget, depth + 1);
    let (vr, er, pr) = panel(mid, t1, 0.5 * budget, depth + 1);
    (vl + vr, el + er, pl + pr)
}

/// Integral of `Z(t)^2` over `[a, b]` with absolute tolerance `tol`.
///
/// The panel decomposition is a deterministic function of `(a, b, tol)`, so
/// identical inputs give bit-identical results.
pub fn integrate_z2(a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if !(a >= 0.0 && b >= a && b.is_finite()) {
        return Err(Error::InvalidInterval(a, b));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tol must be > 0, got {tol}")));
    }
    if a == b {
        return Ok(QuadratureResult {
            a,
            b,
            value: 0.0,
            err_estimate: 0.0,
            panels: 0,
        });
    }
    let length = b - a;
    let mut value = 0.0;
    let mut err = 0.0;
    let mut panels = 0;
    let mut t = a;
    while t < b {
        let t_next = (t + panel_width(t)).min(b);
        let budget = tol * (t_next - t) / length;
        let (v, e, p) = panel(t, t_next, budget, 0);
        value += v;
        err += e;
        panels += p;
        t = t_next;
    }
    if err > tol {
        return Err(Error::NonConvergence {
            a,
            b,
            value,
            err_estimate: err,
            tol,
        });
    }
    Ok(QuadratureResult {
        a,
        b,
        value,
        err_estimate: err,
        panels,
    })
}

/// `J(T)` with checkpoint reuse: integrates only the gap above the nearest
/// stored height, writing checkpoints at every power-of-sqrt(10) grid height
/// crossed and at `T` itself.
pub fn hl_integral(t: f64, tol_per_unit: f64, store: &mut CheckpointStore) -> Result<QuadratureResult> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidInterval(0.0, t));
    }
    if store.get(0.0).is_none() {
        store.insert(0.0, 0.0, f64::MIN_POSITIVE);
    }
    if let Some(hit) = store.get(t) {
        return Ok(QuadratureResult {
            a: 0.0,
            b: t,
            value: hit.j,
            err_estimate: hit.tol,
            panels: 0,
        });
    }
    let base = store
        .nearest_at_or_below(t)
        .expect("store holds a record at 0");
    let mut j = base.j;
    let mut tol_acc = base.tol;
    let mut panels = 0;
    let mut lo = base.t;
    for stop in grid_heights(lo, t).chain(std::iter::once(t)) {
        let seg_tol = (tol_per_unit * (stop - lo)).max(1e-12);
        let r = integrate_z2(lo, stop, seg_tol)?;
        j += r.value;
        tol_acc += r.err_estimate.max(seg_tol * 1e-3);
        panels += r.panels;
        store.insert(stop, j, tol_acc);
        lo = stop;
    }
    Ok(QuadratureResult {
        a: 0.0,
        b: t,
        value: j,
        err_estimate: tol_acc,
        panels,
    })
}

/// Powers of sqrt(10) strictly inside `(lo, hi)`, ascending, starting at 10.
fn grid_heights(lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    let mut m = 2i32; // 10^(2/2) = 10
    std::iter::from_fn(move || loop {
        let h = 10f64.powf(m as f64 / 2.0);
        if h >= hi {
            return None;
        }
        m += 1;
        if h > lo {
            return Some(h);
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_interval() {
        let r = integrate_z2(100.0, 100.0, 1e-3).unwrap();
        assert_eq!(r.value, 0.0);
        assert_eq!(r.panels, 0);
    }

    #[test]
    fn rejects_bad_intervals() {
        assert!(integrate_z2(10.0, 5.0, 1e-3).is_err());
        assert!(integrate_z2(-1.0, 5.0, 1e-3).is_err());
        assert!(integrate_z2(1.0, 5.0, 0.0).is_err());
    }

    #[test]
    fn panel_width_respects_phase_budget() {
        for &t in &[10.0, 200.0, 1e4, 1e6, 1e8] {
            let w = panel_width(t);
            assert!(w <= PANEL_WIDTH_CAP);
            let phase = w * (t / (2.0 * PI)).ln();
            assert!(phase <= PANEL_PHASE_BUDGET + 1e-9, "phase {phase} at {t}");
        }
    }

    #[test]
    fn additivity_small_scale() {
        let tol = 1e-6;
        let whole = integrate_z2(20.0, 120.0, tol).unwrap().value;
        let left = integrate_z2(20.0, 70.0, tol).unwrap().value;
        let right = integrate_z2(70.0, 120.0, tol).unwrap().value;
        assert!((whole - left - right).abs() <= 2.0 * tol);
    }

    #[test]
    fn determinism() {
        let r1 = integrate_z2(50.0, 350.0, 1e-4).unwrap();
        let r2 = integrate_z2(50.0, 350.0, 1e-4).unwrap();
        assert_eq!(r1.value.to_bits(), r2.value.to_bits());
        assert_eq!(r1.panels, r2.panels);
    }

    #[test]
    fn checkpoint_reuse_is_idempotent() {
        let mut store = CheckpointStore::new();
        let first = hl_integral(500.0, DEFAULT_TOL_PER_UNIT, &mut store).unwrap();
        assert!(first.panels > 0);
        let second = hl_integral(500.0, DEFAULT_TOL_PER_UNIT, &mut store).unwrap();
        assert_eq!(second.panels, 0, "cache hit must do no panel work");
        assert_eq!(first.value.to_bits(), second.value.to_bits());
    }

    #[test]
    fn grid_checkpoints_are_written() {
        let mut store = CheckpointStore::new();
        hl_integral(400.0, DEFAULT_TOL_PER_UNIT, &mut store).unwrap();
        // sqrt(10)-grid: 10, 31.6.., 100, 316.2.. all inside (0, 400)
        for m in 2..=5 {
            let h = 10f64.powf(m as f64 / 2.0);
            assert!(store.get(h).is_some(), "missing grid record at {h}");
        }
    }

    #[test]
    fn monotone_in_t() {
        let mut store = CheckpointStore::new();
        let j1 = hl_integral(150.0, DEFAULT_TOL_PER_UNIT, &mut store).unwrap().value;
        let j2 = hl_integral(250.0, DEFAULT_TOL_PER_UNIT, &mut store).unwrap().value;
        assert!(j2 >= j1);
    }

    #[test]
    fn zero_height() {
        let mut store = CheckpointStore::new();
        let r = hl_integral(0.0, DEFAULT_TOL_PER_UNIT, &mut store).unwrap();
        assert_eq!(r.value, 0.0);
    }
}
