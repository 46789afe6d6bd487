#![allow(dead_code)]

use std::f64::consts::PI;

use prismcover::quadrature::{integrate, QuadratureConfig};

/// `-∫₀ˣ ln|2 sin t| dt` for `x ∈ (0, π)` by direct quadrature.
///
/// The logarithmic endpoint singularities are removed analytically:
/// `ln(2 sin t) = ln 2 + ln t + ln(π − t) + ln(sin t / (t (π − t)))`, and the
/// last term is smooth on `[0, π]`.
pub fn lobachevsky_by_quadrature(x: f64) -> f64 {
    assert!(x > 0.0 && x < PI);
    let log_t = x * x.ln() - x;
    let y = PI - x;
    let log_pi_minus_t = -y * y.ln() + y + PI * PI.ln() - PI;
    let cfg = QuadratureConfig {
        abs_tol: 1e-14,
        max_subdivisions: 1000,
        nodes_per_panel: 20,
    };
    let smooth = integrate(0.0, x, &cfg, |t| {
        let s = if t < PI / 2.0 {
            t.sin()
        } else {
            (PI - t).sin()
        };
        Ok((s / (t * (PI - t))).ln())
    })
    .unwrap();
    -(x * 2f64.ln() + log_t + log_pi_minus_t + smooth)
}

/// ζ(3) from partial sums with the integral tail bounds
/// `1/(2(N+1)²) < Σ_{n>N} n⁻³ < 1/(2N²)`; returns the midpoint.
pub fn zeta3_by_partial_sums(n: u64) -> f64 {
    let mut sum = 0.0;
    for k in (1..=n).rev() {
        let kf = k as f64;
        sum += 1.0 / (kf * kf * kf);
    }
    let nf = n as f64;
    let lo = 1.0 / (2.0 * (nf + 1.0) * (nf + 1.0));
    let hi = 1.0 / (2.0 * nf * nf);
    sum + 0.5 * (lo + hi)
}

/// `Vol₃(A₃)` implied by a 4-dimensional hyperball piece volume at height `h`.
pub fn base3_from_piece(vol_h: f64, h: f64) -> f64 {
    vol_h / (0.125 * (2.0 / 3.0 * (3.0 * h).sinh() + 6.0 * h.sinh()))
}

/// `Vol₄(A₄)` implied by a 5-dimensional hyperball piece volume at height `h`.
pub fn base4_from_piece(vol_h: f64, h: f64) -> f64 {
    vol_h / ((0.5 * (4.0 * h).sinh() + 4.0 * (2.0 * h).sinh() + 6.0 * h) / 16.0)
}
