//! Lobachevsky function and Apéry's constant.
//!
//! The Lobachevsky function is
//!
//! ```text
//! L(x) = -∫₀ˣ ln|2 sin t| dt
//! ```
//!
//! It is odd and π-periodic, and equals half the Clausen function
//! `Cl₂(2x)`. After reducing the argument to `[0, π/2]` we evaluate
//! `Cl₂(θ)` for `θ = 2x ∈ [0, π]` through its power series
//!
//! ```text
//! Cl₂(θ) = θ − θ ln θ + Σ_{n≥1} ζ(2n) / (n (2n+1)) · θ (θ / 2π)^{2n}
//! ```
//!
//! whose terms shrink at least by a factor 4 per step on that range. The
//! leading terms are the small-argument asymptotic form
//! `x − x ln(2x) + x³/18 + …`, so relative accuracy is kept near zero.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_2;

const ZETA_EVEN_TABLE_LEN: usize = 32;

/// Returns ζ(3).
pub fn zeta3() -> f64 {
    ZETA3
}

/// ζ(2n) for n = 1..=32. Beyond that ζ(2n) rounds to 1.
fn zeta_even(n: usize) -> f64 {
    static TABLE: OnceLock<[f64; ZETA_EVEN_TABLE_LEN]> = OnceLock::new();
    if n > ZETA_EVEN_TABLE_LEN {
        return 1.0;
    }
    TABLE.get_or_init(|| {
        let mut t = [0.0; ZETA_EVEN_TABLE_LEN];
        for (i, slot) in t.iter_mut().enumerate() {
            *slot = zeta_int(2 * (i + 1) as i32);
        }
        t
    })[n - 1]
}

/// ζ(s) for integer s ≥ 2 by a short direct sum plus an Euler–Maclaurin tail.
fn zeta_int(s: i32) -> f64 {
    match s {
        2 => return PI * PI / 6.0,
        4 => return PI.powi(4) / 90.0,
        _ => {}
    }
    const K: i32 = 30;
    let sf = f64::from(s);
    let kf = f64::from(K);
    // Euler–Maclaurin tail, summed smallest first.
    let mut tail =
        sf * (sf + 1.0) * (sf + 2.0) * (sf + 3.0) * (sf + 4.0) / 30240.0 * kf.powi(-s - 5);
    tail -= sf * (sf + 1.0) * (sf + 2.0) / 720.0 * kf.powi(-s - 3);
    tail += sf / 12.0 * kf.powi(-s - 1);
    tail += 0.5 * kf.powi(-s);
    tail += kf.powi(1 - s) / (sf - 1.0);
    let mut sum = tail;
    for k in (1..K).rev() {
        sum += f64::from(k).powi(-s);
    }
    sum
}

/// Evaluator for the Lobachevsky function with an explicit accuracy target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LobachevskyEvaluator {
    tolerance: f64,
    max_terms: usize,
}

impl Default for LobachevskyEvaluator {
    fn default() -> Self {
        Self {
            tolerance: 1e-13,
            max_terms: 64,
        }
    }
}

impl LobachevskyEvaluator {
    pub fn new(tolerance: f64, max_terms: usize) -> Result<Self> {
        if !(tolerance > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "Lobachevsky tolerance must be positive, got {tolerance}"
            )));
        }
        if max_terms < 64 {
            return Err(Error::InvalidConfig(format!(
                "Lobachevsky series budget must be at least 64 terms, got {max_terms}"
            )));
        }
        Ok(Self {
            tolerance,
            max_terms,
        })
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Evaluates `L(x)`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        if x < 0.0 {
            return Ok(-self.eval_nonneg(-x));
        }
        Ok(self.eval_nonneg(x))
    }

    fn eval_nonneg(&self, x: f64) -> f64 {
        let r = x.rem_euclid(PI);
        if r > FRAC_PI_2 {
            -self.eval_reduced(PI - r)
        } else {
            self.eval_reduced(r)
        }
    }

    /// `x` in `[0, π/2]`.
    fn eval_reduced(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        let theta = 2.0 * x;
        let ratio2 = (theta / TAU).powi(2);
        let mut power = theta;
        let mut series = 0.0;
        for n in 1..=self.max_terms {
            power *= ratio2;
            let nf = n as f64;
            let term = zeta_even(n) * power / (nf * (2.0 * nf + 1.0));
            series += term;
            if term < self.tolerance * 1e-3 {
                break;
            }
        }
        0.5 * (theta - theta * theta.ln() + series)
    }
}

/// `L(x)` with the default evaluator. Panics on non-finite input; use
/// [`LobachevskyEvaluator::eval`] to get an error instead.
pub fn lob(x: f64) -> f64 {
    LobachevskyEvaluator::default()
        .eval(x)
        .expect("Lobachevsky function of a non-finite argument")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zeros() {
        assert_eq!(lob(0.0), 0.0);
        assert_abs_diff_eq!(lob(FRAC_PI_2), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(lob(PI), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn known_values() {
        // L(π/6) = (3/2) L(π/3) and L(π/4) = G/2 (Catalan's constant).
        assert_abs_diff_eq!(lob(PI / 6.0), 0.507_470_803_204_826_8, epsilon = 1e-14);
        assert_abs_diff_eq!(
            lob(PI / 4.0),
            0.915_965_594_177_219 / 2.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn zeta_table_matches_closed_forms() {
        assert_abs_diff_eq!(zeta_int(6), PI.powi(6) / 945.0, epsilon = 1e-15);
        assert_abs_diff_eq!(zeta_int(8), PI.powi(8) / 9450.0, epsilon = 1e-15);
        assert_abs_diff_eq!(zeta_int(3), ZETA3, epsilon = 1e-14);
        assert_eq!(zeta_even(40), 1.0);
    }

    #[test]
    fn small_argument_asymptotics() {
        let x: f64 = 1e-4;
        let approx = x - x * (2.0 * x).ln() + x.powi(3) / 18.0;
        assert_abs_diff_eq!(lob(x), approx, epsilon = 1e-18);
    }

    #[test]
    fn rejects_non_finite() {
        let ev = LobachevskyEvaluator::default();
        assert!(matches!(ev.eval(f64::NAN), Err(Error::NonFinite(_))));
        assert!(matches!(ev.eval(f64::INFINITY), Err(Error::NonFinite(_))));
    }

    #[test]
    fn evaluator_config_checked() {
        assert!(LobachevskyEvaluator::new(0.0, 64).is_err());
        assert!(LobachevskyEvaluator::new(1e-12, 10).is_err());
        assert!(LobachevskyEvaluator::new(1e-12, 100).is_ok());
    }
}
