//! Closed-form quantities for the random ensemble: the q-ary entropy and its
//! inverse, the distance threshold `δ* = (2/3) h_q^{-1}(1/2)`, the bounds on
//! `E(X_b)` and on `Pr(Δ <= δ)`, and the goodness indicator `log_q m / ℓ_m`.
//!
//! All arithmetic is binary64.

use serde::Serialize;

use crate::algebra::{check_coprime, ell_m, FieldSpec};
use crate::error::{Error, Result};

/// Absolute tolerance on the argument when inverting `h_q` by bisection.
pub const BISECTION_TOL: f64 = 1e-12;

/// The q-ary entropy function for a fixed alphabet size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QaryEntropy {
    q: u32,
    ln_q: f64,
}

impl QaryEntropy {
    pub fn new(q: u32) -> Result<Self> {
        if q < 3 {
            return Err(Error::Domain(format!("entropy needs q >= 3, got {q}")));
        }
        Ok(Self {
            q,
            ln_q: (q as f64).ln(),
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn log_q(&self, x: f64) -> f64 {
        x.ln() / self.ln_q
    }

    /// `x log_q(q-1) - x log_q x - (1-x) log_q(1-x)`, with `0 log 0 = 0`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::Domain(format!("h_q argument {x} outside [0, 1]")));
        }
        let mut h = x * self.log_q(self.q as f64 - 1.0);
        if x > 0.0 {
            h -= x * self.log_q(x);
        }
        if x < 1.0 {
            h -= (1.0 - x) * self.log_q(1.0 - x);
        }
        Ok(h)
    }

    /// The `x` in `[0, 1 - 1/q]` with `h_q(x) = y`.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&y) {
            return Err(Error::Domain(format!("h_q^-1 argument {y} outside [0, 1]")));
        }
        let top = 1.0 - 1.0 / self.q as f64;
        if y == 0.0 {
            return Ok(0.0);
        }
        if y == 1.0 {
            return Ok(top);
        }
        let (mut lo, mut hi) = (0.0, top);
        while hi - lo > BISECTION_TOL {
            let mid = 0.5 * (lo + hi);
            if self.eval(mid)? < y {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

pub fn entropy_hq(q: u32, x: f64) -> Result<f64> {
    QaryEntropy::new(q)?.eval(x)
}

pub fn entropy_inv(q: u32, y: f64) -> Result<f64> {
    QaryEntropy::new(q)?.inverse(y)
}

/// `(2/3) h_q^{-1}(1/2)`: relative distances below this are reachable.
pub fn delta_star(q: u32) -> Result<f64> {
    Ok(2.0 / 3.0 * entropy_inv(q, 0.5)?)
}

fn check_delta(delta: f64) -> Result<()> {
    if !(0.0..=2.0 / 3.0).contains(&delta) {
        return Err(Error::Domain(format!(
            "delta = {delta} needs 0 <= 3 delta / 2 <= 1"
        )));
    }
    Ok(())
}

/// `q^{-2 d_b + 2 d_b h_q(3δ/2) + log_q m}`, the bound on `E(X_b)`.
pub fn exb_bound(q: u32, d_b: usize, m: usize, delta: f64) -> Result<f64> {
    check_delta(delta)?;
    let ent = QaryEntropy::new(q)?;
    let h = ent.eval(1.5 * delta)?;
    let d = d_b as f64;
    Ok((q as f64).powf(-2.0 * d + 2.0 * d * h + ent.log_q(m as f64)))
}

/// `1/2 - h_q(3δ/2) - log_q m / ℓ_m`. The bound on `Pr(Δ <= δ)` decays in `m`
/// when this stays bounded away from zero.
pub fn goodness_gap(field: FieldSpec, m: usize, delta: f64) -> Result<f64> {
    check_delta(delta)?;
    let ent = QaryEntropy::new(field.p())?;
    Ok(0.5 - ent.eval(1.5 * delta)? - goodness_indicator(m, field)?)
}

/// `Σ_{j=ℓ_m}^{m-1} q^{-2 j c}` with `c` the [`goodness_gap`]. Not clamped to 1.
pub fn delta_prob_bound(field: FieldSpec, m: usize, delta: f64) -> Result<f64> {
    let c = goodness_gap(field, m, delta)?;
    let ell = ell_m(m, field)?;
    let q = field.p() as f64;
    Ok((ell..m).map(|j| q.powf(-2.0 * j as f64 * c)).sum())
}

/// `log_q m / ℓ_m`.
pub fn goodness_indicator(m: usize, field: FieldSpec) -> Result<f64> {
    let ell = ell_m(m, field)?;
    Ok((m as f64).ln() / (field.p() as f64).ln() / ell as f64)
}

/// One row of a [`goodness_records`] scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GoodnessRecord {
    pub m: usize,
    pub ell_m: usize,
    pub indicator: f64,
}

/// Scans `lo..=hi` (skipping `m < 2` and `m` sharing a factor with `q`) and
/// keeps each `m` whose indicator is strictly below every earlier one.
pub fn goodness_records(field: FieldSpec, lo: usize, hi: usize) -> Vec<GoodnessRecord> {
    let mut out: Vec<GoodnessRecord> = Vec::new();
    for m in lo.max(2)..=hi {
        if check_coprime(m, field).is_err() {
            continue;
        }
        let (Ok(ell), Ok(indicator)) = (ell_m(m, field), goodness_indicator(m, field)) else {
            continue;
        };
        if out.last().is_none_or(|r| indicator < r.indicator) {
            out.push(GoodnessRecord {
                m,
                ell_m: ell,
                indicator,
            });
        }
    }
    out
}
