//! Coxeter–Schläfli symbols of prism tilings, their Gram matrices, the
//! catalog of admissible tilings and the minimal covering height.

mod matrix;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

pub use matrix::SquareMatrix;

use crate::error::{Error, Result};

/// Matrices with `|det|` below this are treated as singular.
pub const SINGULAR_DET_THRESHOLD: f64 = 1e-12;

/// Ordered tiling parameters `[k₁, …, kₙ]`; the dihedral angles of the
/// orthoscheme are `π/kᵢ`. The first parameter may be any real `≥ 2` so
/// that `p` can be swept continuously, or `+∞` for the `p → ∞` limit
/// (parallel mirrors, angle 0).
#[derive(Debug, Clone, PartialEq)]
pub struct CoxeterSymbol {
    params: Vec<f64>,
}

impl CoxeterSymbol {
    pub fn new(params: Vec<f64>) -> Result<Self> {
        if !(3..=5).contains(&params.len()) {
            return Err(Error::InvalidSymbol(format!(
                "expected 3 to 5 parameters, got {}",
                params.len()
            )));
        }
        if let Some(k) = params.iter().find(|k| k.is_nan() || **k < 2.0) {
            return Err(Error::InvalidSymbol(format!(
                "every parameter must be >= 2, got {k}"
            )));
        }
        if params[1..].iter().any(|k| k.is_infinite()) {
            return Err(Error::InvalidSymbol(
                "only the first parameter may be infinite".to_string(),
            ));
        }
        Ok(Self { params })
    }

    pub fn from_ints(params: &[u32]) -> Result<Self> {
        Self::new(params.iter().map(|&k| f64::from(k)).collect())
    }

    /// Ambient hyperbolic dimension `n`.
    pub fn dim(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    /// Dihedral angles `π/kᵢ`.
    pub fn angles(&self) -> Vec<f64> {
        self.params.iter().map(|k| PI / k).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.params
            .iter()
            .all(|k| k.is_finite() && k.fract() == 0.0)
    }

    /// True for the `p → ∞` limit symbol.
    pub fn is_p_limit(&self) -> bool {
        self.params[0].is_infinite()
    }

    fn matches(&self, ints: &[u32]) -> bool {
        self.params.len() == ints.len()
            && self
                .params
                .iter()
                .zip(ints)
                .all(|(&k, &i)| k == f64::from(i))
    }
}

impl fmt::Display for CoxeterSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_params(f, &self.params)
    }
}

fn write_params(f: &mut impl fmt::Write, params: &[f64]) -> fmt::Result {
    f.write_char('[')?;
    for (i, k) in params.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{k}")?;
    }
    f.write_char(']')
}

/// Formats a parameter list the same way as [`CoxeterSymbol`]'s `Display`.
pub fn format_params(params: &[f64]) -> String {
    let mut s = String::new();
    write_params(&mut s, params).expect("writing to a String");
    s
}

impl FromStr for CoxeterSymbol {
    type Err = Error;

    /// Parses `[k1,k2,...,kn]`; whitespace around entries is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidSymbol(format!("expected [k1,...,kn], got {s:?}")))?;
        let params = inner
            .split(',')
            .map(|t| {
                t.trim().parse::<f64>().map_err(|_| {
                    Error::InvalidSymbol(format!("bad parameter {:?} in {s:?}", t.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(params)
    }
}

/// Coxeter–Schläfli matrix of an orthoscheme: unit diagonal,
/// `−cos(π/kᵢ₊₁)` on the off-diagonals and zero elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix(SquareMatrix);

impl GramMatrix {
    /// Builds the matrix from the dihedral angles `αᵢ,ᵢ₊₁` directly. Angle 0
    /// (parallel mirrors) is allowed and gives an off-diagonal of exactly −1.
    pub fn from_angles(angles: &[f64]) -> Self {
        let n = angles.len() + 1;
        let mut m = SquareMatrix::identity(n);
        for (i, &a) in angles.iter().enumerate() {
            let c = -a.cos();
            m[(i, i + 1)] = c;
            m[(i + 1, i)] = c;
        }
        Self(m)
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }
}

/// Inverse of a [`GramMatrix`], entries `h_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct InverseGram(SquareMatrix);

impl InverseGram {
    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }
}

pub fn build_gram(symbol: &CoxeterSymbol) -> GramMatrix {
    GramMatrix::from_angles(&symbol.angles())
}

/// Inverts by Gaussian elimination with partial pivoting and symmetrises
/// the result.
pub fn invert_gram(g: &GramMatrix) -> Result<InverseGram> {
    let (inv, det) = g.0.inverse_elimination();
    match inv {
        Some(inv) if det.abs() >= SINGULAR_DET_THRESHOLD => Ok(InverseGram(symmetrize(inv))),
        _ => Err(Error::SingularMatrix { det }),
    }
}

/// Same contract as [`invert_gram`], computed via cofactors.
pub fn invert_gram_cofactor(g: &GramMatrix) -> Result<InverseGram> {
    let det = g.0.determinant_cofactor();
    if det.abs() < SINGULAR_DET_THRESHOLD {
        return Err(Error::SingularMatrix { det });
    }
    let inv =
        g.0.inverse_cofactor()
            .ok_or(Error::SingularMatrix { det })?;
    Ok(InverseGram(symmetrize(inv)))
}

fn symmetrize(mut m: SquareMatrix) -> SquareMatrix {
    let n = m.size();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (m[(i, j)] + m[(j, i)]);
            m[(i, j)] = avg;
            m[(j, i)] = avg;
        }
    }
    m
}

/// Distance from the midplane to the farthest cover-face vertex:
/// `cosh² h = (h₀₀ hₙₙ − h₀ₙ²) / (h₀₀ hₙₙ)`.
pub fn height_from_inverse(inv: &InverseGram) -> Result<f64> {
    let n = inv.size() - 1;
    let (h00, hnn, h0n) = (inv.get(0, 0), inv.get(n, n), inv.get(0, n));
    let denom = h00 * hnn;
    if !denom.is_finite() || denom.abs() < SINGULAR_DET_THRESHOLD {
        return Err(Error::Domain(format!(
            "h00*hnn = {denom:e} vanishes; the cover face is not a hyperbolic honeycomb"
        )));
    }
    let ratio = (denom - h0n * h0n) / denom;
    if !(ratio > 1.0) {
        return Err(Error::Domain(format!(
            "cosh^2 h = {ratio} is not above 1; A_n is not an outer vertex"
        )));
    }
    Ok(ratio.sqrt().acosh())
}

/// Minimal covering height of the prism tiling with the given symbol.
pub fn covering_height(symbol: &CoxeterSymbol) -> Result<f64> {
    height_from_inverse(&invert_gram(&build_gram(symbol))?)
}

/// Why a symbol was accepted or rejected by [`validate_tiling`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    Ok,
    BelowPThreshold,
    TotallyAsymptotic,
    CubeHoneycomb,
    UnknownFamily,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Ok => "ok",
            Reason::BelowPThreshold => "below-p-threshold",
            Reason::TotallyAsymptotic => "totally-asymptotic",
            Reason::CubeHoneycomb => "cube-honeycomb",
            Reason::UnknownFamily => "unknown-family",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Catalog classification of a symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct TilingRecord {
    pub symbol: CoxeterSymbol,
    pub valid: bool,
    pub reason: Reason,
    /// `[k₂, …, kₙ]`.
    pub vertex_figure: Vec<f64>,
    /// `[k₁, …, kₙ₋₁]`, the honeycomb projected onto the midplane.
    pub cover_face: Vec<f64>,
}

/// Lower bound on `p` (exclusive) for the `[p, q, r]` prism family, if
/// `(q, r)` is one of the five families in hyperbolic 3-space.
pub fn h3_family_threshold(q: f64, r: f64) -> Option<f64> {
    match (q, r) {
        (3.0, 3.0) | (3.0, 4.0) | (3.0, 5.0) => Some(6.0),
        (4.0, 3.0) => Some(4.0),
        (5.0, 3.0) => Some(3.0),
        _ => None,
    }
}

/// Families with a Euclidean vertex figure `[q, r]`.
fn h3_totally_asymptotic(q: f64, r: f64) -> bool {
    matches!((q, r), (3.0, 6.0) | (4.0, 4.0) | (6.0, 3.0))
}

const H4_VALID: [[u32; 4]; 2] = [[3, 5, 3, 3], [5, 3, 4, 3]];
const H4_CUBE: [u32; 4] = [4, 3, 3, 5];
const H5_VALID: [[u32; 5]; 2] = [[5, 3, 3, 3, 3], [5, 3, 3, 3, 4]];
const H5_ASYMPTOTIC: [u32; 5] = [5, 3, 3, 4, 3];

pub fn validate_tiling(symbol: &CoxeterSymbol) -> TilingRecord {
    let p = symbol.params();
    let n = symbol.dim();
    let reason = match n {
        3 => match h3_family_threshold(p[1], p[2]) {
            Some(threshold) if p[0] > threshold => Reason::Ok,
            Some(_) => Reason::BelowPThreshold,
            None if h3_totally_asymptotic(p[1], p[2]) => Reason::TotallyAsymptotic,
            None => Reason::UnknownFamily,
        },
        4 if H4_VALID.iter().any(|s| symbol.matches(s)) => Reason::Ok,
        4 if symbol.matches(&H4_CUBE) => Reason::CubeHoneycomb,
        5 if H5_VALID.iter().any(|s| symbol.matches(s)) => Reason::Ok,
        5 if symbol.matches(&H5_ASYMPTOTIC) => Reason::TotallyAsymptotic,
        _ => Reason::UnknownFamily,
    };
    TilingRecord {
        symbol: symbol.clone(),
        valid: reason == Reason::Ok,
        reason,
        vertex_figure: p[1..].to_vec(),
        cover_face: p[..n - 1].to_vec(),
    }
}

/// Every integer symbol this crate treats as a tiling: the valid 4- and
/// 5-dimensional ones and `[p, q, r]` for the first few `p` above each
/// 3-dimensional threshold up to `p_max`.
pub fn catalog_symbols(p_max: u32) -> Vec<CoxeterSymbol> {
    let mut out = Vec::new();
    for (q, r) in [(3, 3), (4, 3), (3, 4), (5, 3), (3, 5)] {
        let threshold = h3_family_threshold(f64::from(q), f64::from(r)).expect("catalog family");
        for p in (threshold as u32 + 1)..=p_max {
            out.push(CoxeterSymbol::from_ints(&[p, q, r]).expect("catalog symbol"));
        }
    }
    for s in H4_VALID {
        out.push(CoxeterSymbol::from_ints(&s).expect("catalog symbol"));
    }
    for s in H5_VALID {
        out.push(CoxeterSymbol::from_ints(&s).expect("catalog symbol"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn sym(s: &str) -> CoxeterSymbol {
        s.parse().unwrap()
    }

    #[test]
    fn gram_733() {
        let g = build_gram(&sym("[7,3,3]"));
        let m = g.matrix();
        assert_eq!(g.size(), 4);
        assert_abs_diff_eq!(m[(0, 1)], -0.900_968_867_902_419_1, epsilon = 1e-15);
        assert_abs_diff_eq!(m[(1, 2)], -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(m[(2, 3)], -0.5, epsilon = 1e-15);
        assert_eq!(m[(0, 2)], 0.0);
        assert_eq!(m[(1, 0)], m[(0, 1)]);
    }

    #[test]
    fn gram_53333_pattern() {
        let g = build_gram(&sym("[5,3,3,3,3]"));
        let m = g.matrix();
        assert_eq!(g.size(), 6);
        let c5 = -(PI / 5.0).cos();
        for i in 0..6usize {
            for j in 0..6 {
                let expected = match (i, j) {
                    _ if i == j => 1.0,
                    (0, 1) | (1, 0) => c5,
                    _ if i.abs_diff(j) == 1 => -0.5,
                    _ => 0.0,
                };
                assert_abs_diff_eq!(m[(i, j)], expected, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn gram_right_angles_is_identity() {
        let g = build_gram(&sym("[2,2,2]"));
        assert!(g.matrix().max_abs_diff(&SquareMatrix::identity(4)) < 1e-16);
        let inv = invert_gram(&g).unwrap();
        assert!(inv.matrix().max_abs_diff(&SquareMatrix::identity(4)) < 1e-15);
    }

    #[test]
    fn inverse_round_trip() {
        for s in ["[7,3,3]", "[3,3,3]"] {
            let g = build_gram(&sym(s));
            let inv = invert_gram(&g).unwrap();
            let prod = g.matrix() * inv.matrix();
            assert!(prod.max_abs_diff(&SquareMatrix::identity(4)) < 1e-10, "{s}");
        }
    }

    #[test]
    fn singular_gram_rejected() {
        // Euclidean triangle group [3,6]: the 3x3 Gram matrix is singular.
        let g = GramMatrix::from_angles(&[PI / 3.0, PI / 6.0]);
        assert!(matches!(invert_gram(&g), Err(Error::SingularMatrix { .. })));
        assert!(matches!(
            invert_gram_cofactor(&g),
            Err(Error::SingularMatrix { .. })
        ));
    }

    #[test]
    fn symbol_invariants() {
        assert!(CoxeterSymbol::new(vec![7.0, 3.0]).is_err());
        assert!(CoxeterSymbol::new(vec![7.0, 1.5, 3.0]).is_err());
        assert!(CoxeterSymbol::new(vec![f64::NAN, 3.0, 3.0]).is_err());
        assert!(CoxeterSymbol::new(vec![7.0, f64::INFINITY, 3.0]).is_err());
        let limit = sym("[inf,3,3]");
        assert!(limit.is_p_limit());
        assert_eq!(limit.to_string(), "[inf,3,3]");
        assert_eq!(build_gram(&limit).matrix()[(0, 1)], -1.0);
        assert!(CoxeterSymbol::new(vec![3.0; 6]).is_err());
        assert!("7,3,3".parse::<CoxeterSymbol>().is_err());
        assert!("[7,x,3]".parse::<CoxeterSymbol>().is_err());
        let s = sym(" [ 7.5, 3 ,3 ] ");
        assert_eq!(s.to_string(), "[7.5,3,3]");
        assert!(!s.is_integral());
        assert!(sym("[5,3,4,3]").is_integral());
    }

    #[test]
    fn catalog_classification() {
        let r = validate_tiling(&sym("[7,3,3]"));
        assert!(r.valid);
        assert_eq!(r.reason, Reason::Ok);
        assert_eq!(r.vertex_figure, vec![3.0, 3.0]);
        assert_eq!(r.cover_face, vec![7.0, 3.0]);

        let cases = [
            ("[6,3,3]", Reason::BelowPThreshold),
            ("[6,3,5]", Reason::BelowPThreshold),
            ("[4,4,3]", Reason::BelowPThreshold),
            ("[5,4,3]", Reason::Ok),
            ("[4,5,3]", Reason::Ok),
            ("[3,5,3]", Reason::BelowPThreshold),
            ("[6.0001,3,3]", Reason::Ok),
            ("[inf,3,3]", Reason::Ok),
            ("[inf,3,3,3]", Reason::UnknownFamily),
            ("[7,4,4]", Reason::TotallyAsymptotic),
            ("[7,3,6]", Reason::TotallyAsymptotic),
            ("[7,5,5]", Reason::UnknownFamily),
            ("[3,5,3,3]", Reason::Ok),
            ("[5,3,4,3]", Reason::Ok),
            ("[4,3,3,5]", Reason::CubeHoneycomb),
            ("[5,3,3,5]", Reason::UnknownFamily),
            ("[5,3,3,3,3]", Reason::Ok),
            ("[5,3,3,3,4]", Reason::Ok),
            ("[5,3,3,4,3]", Reason::TotallyAsymptotic),
            ("[5,3,3,3,5]", Reason::UnknownFamily),
        ];
        for (s, reason) in cases {
            let r = validate_tiling(&sym(s));
            assert_eq!(r.reason, reason, "{s}");
            assert_eq!(r.valid, reason == Reason::Ok, "{s}");
            assert_eq!(
                r.cover_face.as_slice(),
                &r.symbol.params()[..r.symbol.dim() - 1]
            );
        }
    }

    #[test]
    fn heights_match_tables() {
        assert_abs_diff_eq!(
            covering_height(&sym("[7,3,3]")).unwrap(),
            1.06738516,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            covering_height(&sym("[3,5,3,3]")).unwrap(),
            1.96333162,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            covering_height(&sym("[5,3,3,3,3]")).unwrap(),
            0.85377329,
            epsilon = 1e-8
        );
    }

    #[test]
    fn height_domain_errors() {
        // Below the threshold A_n stops being an outer vertex.
        assert!(matches!(
            covering_height(&sym("[5,3,3]")),
            Err(Error::Domain(_))
        ));
        // At the threshold the cover face [6,3] is Euclidean.
        assert!(matches!(
            covering_height(&sym("[6,3,3]")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn limit_gram_uses_unit_cosine() {
        let g = GramMatrix::from_angles(&[0.0, PI / 3.0, PI / 3.0]);
        assert_eq!(g.matrix()[(0, 1)], -1.0);
        let h = height_from_inverse(&invert_gram(&g).unwrap()).unwrap();
        assert_abs_diff_eq!(h, 0.65847895, epsilon = 1e-8);
    }
}
