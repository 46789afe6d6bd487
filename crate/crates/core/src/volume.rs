//! Volumes of truncated prism orthoschemes and of the base polytopes in the
//! midplane.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::quadrature::{self, QuadratureConfig};
use crate::schlafli::CoxeterSymbol;
use crate::special::{lob, zeta3};

/// Discriminants above `-DISCRIMINANT_SLACK` are rounded up to zero.
const DISCRIMINANT_SLACK: f64 = 1e-14;

/// Volume of the compact 4-orthoscheme `[5,3,3,3]`, the cover-face cell of
/// both valid 5-dimensional prism tilings.
pub const VOL4_ORTHOSCHEME_5333: f64 = PI * PI / 10800.0;

/// Essential dihedral angles of a 3-dimensional complete orthoscheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthoschemeAngles {
    pub a01: f64,
    pub a12: f64,
    pub a23: f64,
}

impl OrthoschemeAngles {
    /// Each angle must lie in `(0, π/2]`.
    pub fn new(a01: f64, a12: f64, a23: f64) -> Result<Self> {
        for a in [a01, a12, a23] {
            if !(a > 0.0 && a <= FRAC_PI_2) {
                return Err(Error::Domain(format!(
                    "orthoscheme angle {a} outside (0, pi/2]"
                )));
            }
        }
        Ok(Self { a01, a12, a23 })
    }

    /// Angles of the `p → ∞` limit, where `α₀₁ = π/p` tends to 0.
    pub fn p_limit(a12: f64, a23: f64) -> Result<Self> {
        let mut angles = Self::new(FRAC_PI_2, a12, a23)?;
        angles.a01 = 0.0;
        Ok(angles)
    }

    /// `[p, q, r]` with `α₀₁ = π/p`, `α₁₂ = π/q`, `α₂₃ = π/r`; `p = ∞`
    /// gives the limit angles.
    pub fn from_params(p: f64, q: f64, r: f64) -> Result<Self> {
        if p.is_infinite() {
            Self::p_limit(PI / q, PI / r)
        } else {
            Self::new(PI / p, PI / q, PI / r)
        }
    }

    /// `cos²α₁₂ − sin²α₀₁ sin²α₂₃`.
    pub fn discriminant(&self) -> f64 {
        self.a12.cos().powi(2) - (self.a01.sin() * self.a23.sin()).powi(2)
    }
}

/// The auxiliary angle `θ ∈ [0, π/2)` with
/// `tan θ = √(cos²α₁₂ − sin²α₀₁ sin²α₂₃) / (cos α₀₁ cos α₂₃)`.
pub fn theta(angles: &OrthoschemeAngles) -> Result<f64> {
    let disc = angles.discriminant();
    if disc < -DISCRIMINANT_SLACK {
        return Err(Error::NotCompact(disc));
    }
    let denom = angles.a01.cos() * angles.a23.cos();
    if !(denom > 0.0) {
        return Err(Error::Domain(format!(
            "cos(a01)*cos(a23) = {denom:e} must be positive"
        )));
    }
    Ok(disc.max(0.0).sqrt().atan2(denom))
}

/// Volume of a 3-dimensional complete orthoscheme from its essential angles
/// (Lambert cubes excluded).
pub fn vol3_orthoscheme(angles: &OrthoschemeAngles) -> Result<f64> {
    let th = theta(angles)?;
    let OrthoschemeAngles { a01, a12, a23 } = *angles;
    let sum = lob(a01 + th) - lob(a01 - th)
        + lob(FRAC_PI_2 + a12 - th)
        + lob(FRAC_PI_2 - a12 - th)
        + lob(a23 + th)
        - lob(a23 - th)
        + 2.0 * lob(FRAC_PI_2 - th);
    Ok(0.25 * sum)
}

/// Limit of the `[p, q, r]` orthoscheme volume as `p → ∞`.
pub fn vol3_orthoscheme_p_limit(q: f64, r: f64) -> Result<f64> {
    vol3_orthoscheme(&OrthoschemeAngles::p_limit(PI / q, PI / r)?)
}

/// Area of the characteristic triangle of the `{p, q}` tiling (angles
/// `π/p`, `π/q`, `π/2`) by its angle defect. `p = ∞` is accepted.
pub fn vol2_base_triangle(p: f64, q: f64) -> Result<f64> {
    let defect = FRAC_PI_2 - PI / p - PI / q;
    if defect <= 1e-14 {
        return Err(Error::NonHyperbolic(defect));
    }
    Ok(defect)
}

pub fn vol4_prism_orthoscheme(symbol: &CoxeterSymbol) -> Result<f64> {
    match symbol.params() {
        [3.0, 5.0, 3.0, 3.0] => Ok(41.0 * PI * PI / 10800.0),
        [5.0, 3.0, 4.0, 3.0] => Ok(17.0 * PI * PI / 4320.0),
        _ => Err(Error::UnsupportedSymbol(symbol.to_string())),
    }
}

/// `β(t) = arctan √(2 − cot² t)`, the varying angle of the tetrahedron
/// `[5, 3, β]` along the 5-dimensional volume integral.
pub fn vol5_beta(t: f64) -> Result<f64> {
    let cot = 1.0 / t.tan();
    let arg = 2.0 - cot * cot;
    if arg < 0.0 {
        return Err(Error::Domain(format!("2 - cot^2({t}) = {arg} is negative")));
    }
    Ok(arg.sqrt().atan())
}

/// Lower limit of the 5-dimensional volume integral.
fn vol5_lower_limit(symbol: &CoxeterSymbol) -> Result<f64> {
    match symbol.params() {
        [5.0, 3.0, 3.0, 3.0, 3.0] => Ok(PI / 3.0),
        [5.0, 3.0, 3.0, 3.0, 4.0] => Ok(PI / 4.0),
        _ => Err(Error::UnsupportedSymbol(symbol.to_string())),
    }
}

/// `¼ ∫_{α}^{2π/5} Vol₃([5, 3, β(t)]) dt`, the integral part of the
/// 5-dimensional prism orthoscheme volume.
pub fn vol5_integral_term(symbol: &CoxeterSymbol, cfg: &QuadratureConfig) -> Result<f64> {
    let lower = vol5_lower_limit(symbol)?;
    let (a01, a12) = (PI / 5.0, PI / 3.0);
    let integral = quadrature::integrate(lower, 2.0 * PI / 5.0, cfg, |t| {
        vol3_orthoscheme(&OrthoschemeAngles::new(a01, a12, vol5_beta(t)?)?)
    })?;
    Ok(0.25 * integral)
}

pub fn vol5_prism_orthoscheme(symbol: &CoxeterSymbol, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(vol5_integral_term(symbol, cfg)? + zeta3() / 3200.0)
}

/// `(n−1)`-volume of the characteristic polytope `A_{n−1}` in the midplane.
pub fn base_volume(symbol: &CoxeterSymbol) -> Result<f64> {
    let k = symbol.params();
    match symbol.dim() {
        3 => vol2_base_triangle(k[0], k[1]),
        4 => vol3_orthoscheme(&OrthoschemeAngles::from_params(k[0], k[1], k[2])?),
        5 if k[..4] == [5.0, 3.0, 3.0, 3.0] => Ok(VOL4_ORTHOSCHEME_5333),
        5 => Err(Error::UnsupportedSymbol(symbol.to_string())),
        n => Err(Error::BadDimension(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn sym(s: &str) -> CoxeterSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn theta_analytic_case() {
        let a = OrthoschemeAngles::new(PI / 5.0, PI / 3.0, 0.3 * PI).unwrap();
        assert_abs_diff_eq!(theta(&a).unwrap(), PI / 10.0, epsilon = 1e-15);
    }

    #[test]
    fn theta_zero_discriminant() {
        // cos²(π/3) = sin²(π/4) sin²(π/4) = 1/4
        let a = OrthoschemeAngles::new(PI / 4.0, PI / 3.0, PI / 4.0).unwrap();
        assert_abs_diff_eq!(theta(&a).unwrap(), 0.0, epsilon = 1e-7);
    }

    #[test]
    fn theta_not_compact() {
        let eps = 1e-3;
        let a = OrthoschemeAngles::new(FRAC_PI_2 - eps, FRAC_PI_2, FRAC_PI_2 - eps).unwrap();
        assert!(matches!(theta(&a), Err(Error::NotCompact(_))));
        assert!(matches!(vol3_orthoscheme(&a), Err(Error::NotCompact(_))));
    }

    #[test]
    fn vol3_table_value() {
        let a = OrthoschemeAngles::from_params(7.0, 3.0, 3.0).unwrap();
        assert_abs_diff_eq!(vol3_orthoscheme(&a).unwrap(), 0.08856157, epsilon = 1e-8);
    }

    #[test]
    fn base_triangle() {
        assert_abs_diff_eq!(
            vol2_base_triangle(7.0, 3.0).unwrap(),
            PI / 42.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            vol2_base_triangle(5.0, 4.0).unwrap(),
            PI / 20.0,
            epsilon = 1e-15
        );
        assert!(matches!(
            vol2_base_triangle(4.0, 4.0),
            Err(Error::NonHyperbolic(_))
        ));
        assert!(matches!(
            vol2_base_triangle(6.0, 3.0),
            Err(Error::NonHyperbolic(_))
        ));
        assert_abs_diff_eq!(
            vol2_base_triangle(f64::INFINITY, 3.0).unwrap(),
            PI / 6.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn vol4_closed_forms() {
        assert_abs_diff_eq!(
            vol4_prism_orthoscheme(&sym("[3,5,3,3]")).unwrap(),
            0.03746794,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            vol4_prism_orthoscheme(&sym("[5,3,4,3]")).unwrap(),
            0.03883872,
            epsilon = 1e-8
        );
        assert!(matches!(
            vol4_prism_orthoscheme(&sym("[7,3,3]")),
            Err(Error::UnsupportedSymbol(_))
        ));
    }

    #[test]
    fn beta_values() {
        assert_abs_diff_eq!(vol5_beta(PI / 4.0).unwrap(), PI / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            vol5_beta(2.0 * PI / 5.0).unwrap(),
            0.3 * PI,
            epsilon = 1e-14
        );
        assert!(vol5_beta(0.5).is_err());
    }

    #[test]
    fn vol5_unsupported() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(
            vol5_prism_orthoscheme(&sym("[5,3,3,4,3]"), &cfg),
            Err(Error::UnsupportedSymbol(_))
        ));
        assert!(matches!(
            base_volume(&sym("[5,3,3,4,3]")),
            Err(Error::UnsupportedSymbol(_))
        ));
    }

    #[test]
    fn base_volume_dispatch() {
        assert_abs_diff_eq!(
            base_volume(&sym("[7,3,3]")).unwrap(),
            PI / 42.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            base_volume(&sym("[3,5,3,3]")).unwrap(),
            0.039048,
            epsilon = 5e-6
        );
        assert_abs_diff_eq!(
            base_volume(&sym("[5,3,3,3,4]")).unwrap(),
            PI * PI / 10800.0,
            epsilon = 1e-16
        );
    }

    #[test]
    fn p_limit_values() {
        assert_abs_diff_eq!(
            vol3_orthoscheme_p_limit(3.0, 3.0).unwrap(),
            0.15266093,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            vol3_orthoscheme_p_limit(5.0, 3.0).unwrap(),
            0.33232721,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            vol3_orthoscheme_p_limit(3.0, 5.0).unwrap(),
            0.33232721,
            epsilon = 1e-8
        );
    }
}
