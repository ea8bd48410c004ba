//! The prime-counting function pi(x): exact by segmented sieve, approximate
//! by `x/ln x` or the logarithmic integral.

use crate::error::{Error, Result};

/// Largest x for which the exact sieve is offered.
pub const SIEVE_LIMIT: f64 = 1e8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PrimePiMode {
    ExactSieve,
    TOverLnT,
    LogIntegral,
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct PrimePiResult {
    pub x: f64,
    pub mode: PrimePiMode,
    /// The count (exact mode) or the approximation, as a real number.
    pub value: f64,
    /// Present only in exact mode.
    pub exact: Option<u64>,
}

pub fn prime_pi(x: f64, mode: PrimePiMode) -> Result<PrimePiResult> {
    match mode {
        PrimePiMode::ExactSieve => {
            if !(x >= 2.0) {
                return Err(Error::InvalidParameter(format!(
                    "exact mode needs x >= 2, got {x}"
                )));
            }
            if x > SIEVE_LIMIT {
                return Err(Error::Capability(format!(
                    "exact sieve is limited to x <= {SIEVE_LIMIT:e}; use t_over_ln_t or log_integral for x = {x:e}"
                )));
            }
            let count = sieve_count(x as u64);
            Ok(PrimePiResult {
                x,
                mode,
                value: count as f64,
                exact: Some(count),
            })
        }
        PrimePiMode::TOverLnT => {
            check_above_one(x)?;
            Ok(PrimePiResult {
                x,
                mode,
                value: x / x.ln(),
                exact: None,
            })
        }
        PrimePiMode::LogIntegral => {
            check_above_one(x)?;
            Ok(PrimePiResult {
                x,
                mode,
                value: log_integral(x),
                exact: None,
            })
        }
    }
}

fn check_above_one(x: f64) -> Result<()> {
    if x > 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "approximate modes need x > 1, got {x}"
        )))
    }
}

/// Number of primes `<= limit` by a memory-bounded segmented sieve.
fn sieve_count(limit: u64) -> u64 {
    if limit < 2 {
        return 0;
    }
    let root = (limit as f64).sqrt() as u64 + 1;
    // base primes up to sqrt(limit)
    let mut is_composite = vec![false; (root + 1) as usize];
    let mut base = Vec::new();
    for p in 2..=root {
        if !is_composite[p as usize] {
            base.push(p);
            let mut m = p * p;
            while m <= root {
                is_composite[m as usize] = true;
                m += p;
            }
        }
    }

    const BLOCK: u64 = 1 << 17;
    let mut count = 0u64;
    let mut mark = vec![false; BLOCK as usize];
    let mut lo = 2u64;
    while lo <= limit {
        let hi = (lo + BLOCK - 1).min(limit);
        mark[..(hi - lo + 1) as usize].fill(false);
        for &p in &base {
            if p * p > hi {
                break;
            }
            let mut m = (lo.div_ceil(p) * p).max(p * p);
            while m <= hi {
                mark[(m - lo) as usize] = true;
                m += p;
            }
        }
        for i in 0..=(hi - lo) {
            let n = lo + i;
            if n >= 2 && !mark[i as usize] {
                count += 1;
            }
        }
        lo = hi + 1;
    }
    count
}

/// li(x) = Ei(ln x) for x > 1, via the everywhere-positive series
/// `Ei(y) = gamma + ln y + sum y^k / (k k!)`; relative accuracy ~1e-14 in the
/// supported range (no cancellation for y > 0).
fn log_integral(x: f64) -> f64 {
    let y = x.ln();
    let mut sum = crate::constants::EULER_GAMMA + y.ln();
    let mut term = 1.0f64;
    for k in 1..200 {
        term *= y / k as f64;
        let add = term / k as f64;
        sum += add;
        if add < sum.abs() * 1e-17 {
            break;
        }
    }
    sum
}
