//! Hyperball piece volumes and least dense covering densities.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureConfig;
use crate::schlafli::{covering_height, h3_family_threshold, validate_tiling, CoxeterSymbol};
use crate::volume::{
    base_volume, vol3_orthoscheme, vol4_prism_orthoscheme, vol5_prism_orthoscheme,
    OrthoschemeAngles,
};

/// Covering height, volumes and density for one tiling.
#[derive(Debug, Clone, PartialEq)]
pub struct CoveringResult {
    pub symbol: CoxeterSymbol,
    /// Minimal covering height.
    pub h: f64,
    /// Volume of the truncated orthoscheme.
    pub vol_s: f64,
    /// Volume of the hyperball piece over the base polytope.
    pub vol_h: f64,
    pub delta_min: f64,
}

/// One sample of a continuous-`p` sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub h: f64,
    pub vol_s: f64,
    pub vol_h: f64,
    pub delta_min: f64,
}

impl From<&CoveringResult> for SweepRow {
    fn from(r: &CoveringResult) -> Self {
        Self {
            p: r.symbol.params()[0],
            h: r.h,
            vol_s: r.vol_s,
            vol_h: r.vol_h,
            delta_min: r.delta_min,
        }
    }
}

/// Volume of the hyperball piece of height `h` over a base polytope of
/// `(n−1)`-volume `base_vol`, in length unit `k`.
pub fn hyperball_piece_volume(n: usize, base_vol: f64, h: f64, k: f64) -> Result<f64> {
    if !(base_vol >= 0.0 && h >= 0.0 && k > 0.0) {
        return Err(Error::Domain(format!(
            "need base_vol >= 0, h >= 0, k > 0; got {base_vol}, {h}, {k}"
        )));
    }
    let x = h / k;
    let vol = match n {
        3 => 0.25 * base_vol * (k * (2.0 * x).sinh() + 2.0 * h),
        4 => 0.125 * base_vol * k * (2.0 / 3.0 * (3.0 * x).sinh() + 6.0 * x.sinh()),
        5 => base_vol / 16.0 * (k * (0.5 * (4.0 * x).sinh() + 4.0 * (2.0 * x).sinh()) + 6.0 * h),
        _ => return Err(Error::BadDimension(n)),
    };
    Ok(vol)
}

fn orthoscheme_volume(symbol: &CoxeterSymbol, cfg: &QuadratureConfig) -> Result<f64> {
    let k = symbol.params();
    match symbol.dim() {
        3 => vol3_orthoscheme(&OrthoschemeAngles::from_params(k[0], k[1], k[2])?),
        4 => vol4_prism_orthoscheme(symbol),
        5 => vol5_prism_orthoscheme(symbol, cfg),
        n => Err(Error::BadDimension(n)),
    }
}

pub fn covering_density(symbol: &CoxeterSymbol, cfg: &QuadratureConfig) -> Result<CoveringResult> {
    covering_density_with_unit(symbol, cfg, 1.0)
}

/// Like [`covering_density`] but with lengths measured in units where the
/// curvature is `−1/k²`: `h` scales by `k`, n-volumes by `kⁿ`. The density
/// does not depend on `k`.
pub fn covering_density_with_unit(
    symbol: &CoxeterSymbol,
    cfg: &QuadratureConfig,
    k: f64,
) -> Result<CoveringResult> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "unit k must be positive, got {k}"
        )));
    }
    let record = validate_tiling(symbol);
    if !record.valid {
        return Err(Error::InvalidTiling {
            symbol: symbol.to_string(),
            reason: record.reason,
        });
    }
    let n = symbol.dim() as i32;
    let h = k * covering_height(symbol)?;
    let vol_s = k.powi(n) * orthoscheme_volume(symbol, cfg)?;
    let base = k.powi(n - 1) * base_volume(symbol)?;
    let vol_h = hyperball_piece_volume(symbol.dim(), base, h, k)?;
    Ok(CoveringResult {
        symbol: symbol.clone(),
        h,
        vol_s,
        vol_h,
        delta_min: vol_h / vol_s,
    })
}

/// Limit of the `[p, q, r]` covering as `p → ∞`.
pub fn limit_p_infinity(q: f64, r: f64) -> Result<CoveringResult> {
    limit_p_infinity_with_unit(q, r, 1.0)
}

pub fn limit_p_infinity_with_unit(q: f64, r: f64, k: f64) -> Result<CoveringResult> {
    let symbol = CoxeterSymbol::new(vec![f64::INFINITY, q, r])?;
    covering_density_with_unit(&symbol, &QuadratureConfig::default(), k)
}

/// Samples `p = p_min, p_min + step, …, ≤ p_max` of the `[p, q, r]` family.
/// Rows are independent and come back in ascending `p`.
pub fn sweep(q: f64, r: f64, p_min: f64, p_max: f64, step: f64) -> Result<Vec<SweepRow>> {
    sweep_with_unit(q, r, p_min, p_max, step, 1.0)
}

pub fn sweep_with_unit(
    q: f64,
    r: f64,
    p_min: f64,
    p_max: f64,
    step: f64,
    k: f64,
) -> Result<Vec<SweepRow>> {
    let threshold = h3_family_threshold(q, r)
        .ok_or_else(|| Error::Domain(format!("[p,{q},{r}] is not a prism tiling family")))?;
    if !(p_min > threshold) {
        return Err(Error::Domain(format!(
            "p_min = {p_min} must exceed the family threshold {threshold}"
        )));
    }
    if !(step > 0.0 && step.is_finite() && p_max.is_finite()) {
        return Err(Error::Domain(format!(
            "need a positive step and finite p_max; got step {step}, p_max {p_max}"
        )));
    }
    if p_max < p_min {
        return Ok(Vec::new());
    }
    // Tolerate rounding so that p_max itself is included when it lies on the grid.
    let count = ((p_max - p_min) / step + 1e-9).floor() as usize + 1;
    let cfg = QuadratureConfig::default();
    (0..count)
        .into_par_iter()
        .map(|i| {
            let p = p_min + i as f64 * step;
            let symbol = CoxeterSymbol::new(vec![p, q, r])?;
            covering_density_with_unit(&symbol, &cfg, k).map(|res| SweepRow::from(&res))
        })
        .collect()
}

/// First column of a reference table row.
#[derive(Debug, Clone, PartialEq)]
pub enum RowLabel {
    P(f64),
    Infinity,
    Tiling(CoxeterSymbol),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::P(p) => write!(f, "{p}"),
            RowLabel::Infinity => f.write_str("inf"),
            RowLabel::Tiling(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub label: RowLabel,
    pub result: CoveringResult,
}

/// One of the seven reference tables.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub id: u32,
    pub title: String,
    /// Header of the first column: `p` or `tiling`.
    pub label_header: &'static str,
    pub rows: Vec<TableRow>,
}

/// `(q, r, listed p values)` of tables 1 to 5.
const PRISM_FAMILY_TABLES: [(u32, u32, [u32; 6]); 5] = [
    (3, 3, [7, 8, 9, 20, 50, 100]),
    (4, 3, [5, 6, 7, 20, 50, 100]),
    (3, 4, [7, 8, 9, 20, 50, 100]),
    (5, 3, [4, 5, 6, 20, 50, 100]),
    (3, 5, [7, 8, 9, 20, 50, 100]),
];

const H4_TABLE: [[u32; 4]; 2] = [[3, 5, 3, 3], [5, 3, 4, 3]];
const H5_TABLE: [[u32; 5]; 2] = [[5, 3, 3, 3, 3], [5, 3, 3, 3, 4]];

/// Builds table `id` (1 to 7): tables 1–5 are the `[p, q, r]` families in
/// hyperbolic 3-space including the `p → ∞` row, 6 and 7 the 4- and
/// 5-dimensional tilings.
pub fn table(id: u32, cfg: &QuadratureConfig, k: f64) -> Result<Table> {
    match id {
        1..=5 => {
            let (q, r, ps) = PRISM_FAMILY_TABLES[(id - 1) as usize];
            let mut rows = ps
                .iter()
                .map(|&p| {
                    let symbol = CoxeterSymbol::from_ints(&[p, q, r])?;
                    Ok(TableRow {
                        label: RowLabel::P(f64::from(p)),
                        result: covering_density_with_unit(&symbol, cfg, k)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(TableRow {
                label: RowLabel::Infinity,
                result: limit_p_infinity_with_unit(f64::from(q), f64::from(r), k)?,
            });
            Ok(Table {
                id,
                title: format!("Table {id}, q={q}, r={r}"),
                label_header: "p",
                rows,
            })
        }
        6 | 7 => {
            let symbols: Vec<&[u32]> = if id == 6 {
                H4_TABLE.iter().map(|s| s.as_slice()).collect()
            } else {
                H5_TABLE.iter().map(|s| s.as_slice()).collect()
            };
            let rows = symbols
                .into_iter()
                .map(|s| {
                    let symbol = CoxeterSymbol::from_ints(s)?;
                    Ok(TableRow {
                        label: RowLabel::Tiling(symbol.clone()),
                        result: covering_density_with_unit(&symbol, cfg, k)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Table {
                id,
                title: format!("Table {id}, {}-dimensional cases", id - 2),
                label_header: "tiling",
                rows,
            })
        }
        _ => Err(Error::UnknownTable(id)),
    }
}
