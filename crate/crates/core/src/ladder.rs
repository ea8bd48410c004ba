//! The increasing function `phi1(T)` defined as the root of
//!
//! ```text
//! g(w) := w ln w + (c - ln 2pi) w + c0  =  J(T),
//! ```
//!
//! its inverse, and the reverse-iteration chain `T < T1 < ... < Tk` with
//! `phi1(T^r) = T^(r-1)`.

use crate::constants::{Constants, LN_2PI};
use crate::error::{Error, Result};
use crate::quadrature::{hl_integral, CheckpointStore, DEFAULT_TOL_PER_UNIT};
use crate::zeta::z_value_any;

/// Relative tolerance of the forward root solve (cheap scalar equation).
const FORWARD_TOL: f64 = 1e-12;
/// Relative tolerance of the inverse solve (each residual costs quadrature).
/// A notch below the round-trip guarantee of 1e-10 so second-order effects
/// cannot push a round trip over it.
const INVERSE_TOL: f64 = 1e-11;
/// Smallest height at which the root equation is safely monotone.
const LADDER_T_MIN: f64 = 100.0;

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct LadderPoint {
    pub t: f64,
    /// `J(t)`.
    pub j: f64,
    /// The solved root `phi1(t)`.
    pub phi1: f64,
    /// Root-equation residual `g(phi1) - j` at the solution.
    pub residual: f64,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ReverseSequence {
    pub base: f64,
    pub k: usize,
    /// `[T, T1, ..., Tk]`, strictly increasing.
    pub points: Vec<f64>,
}

/// `g(w) = w ln w + (c - ln 2pi) w + c0`.
fn g(w: f64, consts: &Constants) -> f64 {
    w * w.ln() + (consts.c - LN_2PI) * w + consts.c0
}

/// `g'(w) = ln w + 1 + c - ln 2pi`, positive for `w` above ~1.3.
fn g_prime(w: f64, consts: &Constants) -> f64 {
    w.ln() + 1.0 + consts.c - LN_2PI
}

/// Solve `g(w) = j` for the unique root above the monotonicity guard.
///
/// Newton iteration on a convex increasing function; converges from any
/// starting point in the guarded region, with a step clamp for safety.
pub fn phi1_from_j(j: f64, w_guess: f64, consts: &Constants) -> Result<(f64, f64)> {
    // g' > 0 for w > e^(ln 2pi - 1 - c); stay a factor above it
    let w_guard = (LN_2PI - 1.0 - consts.c).exp() * 1.5;
    let mut w = w_guess.max(w_guard * 2.0);
    for _ in 0..200 {
        let f = g(w, consts) - j;
        let step = f / g_prime(w, consts);
        let mut next = w - step;
        if !(next > w_guard) {
            next = 0.5 * (w + w_guard);
        }
        if (next - w).abs() <= FORWARD_TOL * w {
            let residual = g(next, consts) - j;
            return Ok((next, residual));
        }
        w = next;
    }
    Err(Error::RootNonConvergence(format!(
        "phi1 root solve stalled at w = {w} for j = {j}"
    )))
}

/// `phi1(t)`: solve the defining equation against `J(t)`.
pub fn phi1(t: f64, consts: &Constants, store: &mut CheckpointStore) -> Result<LadderPoint> {
    if !(t >= LADDER_T_MIN) {
        return Err(Error::InvalidParameter(format!(
            "ladder operations need t >= {LADDER_T_MIN}, got {t}"
        )));
    }
    let j = hl_integral(t, DEFAULT_TOL_PER_UNIT, store)?.value;
    let (w, residual) = phi1_from_j(j, t, consts)?;
    Ok(LadderPoint {
        t,
        j,
        phi1: w,
        residual,
    })
}

/// `d phi1 / dt = Z(t)^2 / (ln phi1 + 1 + c - ln 2pi)`, by implicit
/// differentiation of the defining equation; positive wherever `Z(t) != 0`.
pub fn phi1_derivative(p: &LadderPoint, consts: &Constants) -> f64 {
    let z = z_value_any(p.t);
    z * z / g_prime(p.phi1, consts)
}

/// The inverse ladder: the unique `x > t_target` with `phi1(x) = t_target`,
/// i.e. `J(x) = g(t_target)`.
///
/// Newton steps use `J'(x) = Z(x)^2` and fall back to bisection whenever the
/// derivative is too flat (near a zero of `Z`) or a step leaves the bracket.
pub fn phi1_inverse(t_target: f64, consts: &Constants, store: &mut CheckpointStore) -> Result<f64> {
    if !(t_target >= LADDER_T_MIN) {
        return Err(Error::InvalidParameter(format!(
            "ladder operations need t >= {LADDER_T_MIN}, got {t_target}"
        )));
    }
    let rhs = g(t_target, consts);
    let j_at = |x: f64, store: &mut CheckpointStore| -> Result<f64> {
        Ok(hl_integral(x, DEFAULT_TOL_PER_UNIT, store)?.value)
    };

    // bracket from the spacing asymptotics: the next rung sits ~(1-c) t/ln t above
    let spacing = (1.0 - consts.c) * t_target / t_target.ln();
    let mut lo = t_target;
    let mut f_lo = j_at(lo, store)? - rhs;
    if f_lo > 0.0 {
        return Err(Error::Bracket(format!(
            "J({lo}) already exceeds g({t_target}); no inverse above the target"
        )));
    }
    let mut hi = t_target + 4.0 * spacing;
    let mut f_hi = j_at(hi, store)? - rhs;
    let mut expansions = 0;
    while f_hi < 0.0 {
        expansions += 1;
        if expansions > 8 {
            return Err(Error::Bracket(format!(
                "could not bracket the inverse of {t_target} below {hi}"
            )));
        }
        hi += 4.0 * spacing;
        f_hi = j_at(hi, store)? - rhs;
    }
    let _ = f_hi;

    let mut x = t_target + spacing; // main-term prediction
    if x <= lo || x >= hi {
        x = 0.5 * (lo + hi);
    }
    let f_tol = g_prime(t_target, consts) * INVERSE_TOL * t_target;
    for _ in 0..200 {
        let f = j_at(x, store)? - rhs;
        if f.abs() <= f_tol {
            return Ok(x);
        }
        if f < 0.0 {
            lo = x;
            f_lo = f;
        } else {
            hi = x;
        }
        let _ = f_lo;
        let z = z_value_any(x);
        let deriv = z * z;
        let newton = x - f / deriv;
        x = if deriv > 1e-8 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo < 1e-13 * t_target {
            return Ok(x);
        }
    }
    Err(Error::RootNonConvergence(format!(
        "inverse solve for target {t_target} did not reach tolerance"
    )))
}

/// The chain `T = T^0 < T^1 < ... < T^k` with `T^r = phi1_inverse(T^(r-1))`.
pub fn reverse_sequence(
    t: f64,
    k: usize,
    consts: &Constants,
    store: &mut CheckpointStore,
) -> Result<ReverseSequence> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    let mut points = Vec::with_capacity(k + 1);
    points.push(t);
    for r in 1..=k {
        let next = phi1_inverse(points[r - 1], consts, store).map_err(|e| Error::ReverseStep {
            r,
            source: Box::new(e),
        })?;
        points.push(next);
    }
    Ok(ReverseSequence { base: t, k, points })
}
