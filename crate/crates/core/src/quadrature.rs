//! Adaptive Gauss–Legendre quadrature.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Tolerances and node budgets for adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute error target for the whole integral.
    pub abs_tol: f64,
    /// Maximum number of interval bisections.
    pub max_subdivisions: usize,
    /// Gauss–Legendre nodes per panel.
    pub nodes_per_panel: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            max_subdivisions: 60,
            nodes_per_panel: 15,
        }
    }
}

impl QuadratureConfig {
    pub fn with_abs_tol(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "quadrature tolerance must be positive, got {}",
                self.abs_tol
            )));
        }
        if self.nodes_per_panel < 5 {
            return Err(Error::InvalidConfig(format!(
                "at least 5 nodes per panel required, got {}",
                self.nodes_per_panel
            )));
        }
        Ok(())
    }
}

/// Nodes and weights of an n-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the rule by Newton iteration on the Legendre polynomial roots.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            // Chebyshev-like initial guess for the i-th largest root.
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrates `f` over `[a, b]` with one panel.
    pub fn integrate<F>(&self, a: f64, b: f64, f: F) -> f64
    where
        F: Fn(f64) -> f64,
    {
        self.try_integrate(a, b, |x| Ok(f(x)))
            .expect("infallible integrand")
    }

    pub fn try_integrate<F>(&self, a: f64, b: f64, f: F) -> Result<f64>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x)?;
        }
        Ok(half * sum)
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    let dp = nf * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Integrates `f` over `[a, b]` by adaptive bisection.
///
/// Each panel is compared against the sum over its two halves; a panel is
/// accepted once the difference is within its share of `abs_tol`
/// (proportional to its length). Fails with
/// [`Error::QuadratureFailure`] when more than `max_subdivisions`
/// bisections would be needed.
pub fn integrate<F>(a: f64, b: f64, cfg: &QuadratureConfig, f: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    cfg.validate()?;
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!(
            "integration bounds must be finite, got [{a}, {b}]"
        )));
    }
    let rule = GaussLegendre::new(cfg.nodes_per_panel);
    let total = (b - a).abs();
    let mut stack = vec![(a, b, rule.try_integrate(a, b, &f)?)];
    let mut result = 0.0;
    let mut splits = 0;
    let mut worst = 0.0_f64;
    while let Some((lo, hi, coarse)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let left = rule.try_integrate(lo, mid, &f)?;
        let right = rule.try_integrate(mid, hi, &f)?;
        let fine = left + right;
        let err = (fine - coarse).abs();
        let budget = cfg.abs_tol * (hi - lo).abs() / total;
        if err <= budget {
            result += fine;
            continue;
        }
        worst = worst.max(err);
        if splits >= cfg.max_subdivisions {
            return Err(Error::QuadratureFailure {
                tol: cfg.abs_tol,
                estimate: worst,
            });
        }
        splits += 1;
        stack.push((mid, hi, right));
        stack.push((lo, mid, left));
    }
    Ok(result)
}
