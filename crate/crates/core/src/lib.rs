//! Least dense hyperball coverings of regular prism tilings in hyperbolic
//! space of dimension 3, 4 and 5.
//!
//! The crate is organised bottom-up:
//!
//! * [`special`]: the Lobachevsky function and Apéry's constant.
//! * [`quadrature`]: adaptive Gauss–Legendre integration.
//! * [`schlafli`]: Coxeter symbols, Gram matrices, the prism tiling catalog
//!   and the minimal covering height.
//! * [`volume`]: volumes of truncated orthoschemes and of the base
//!   characteristic polytopes in the midplane.
//! * [`covering`]: hyperball piece volumes, densities, `p → ∞` limits,
//!   continuous-`p` sweeps and the reference tables.
//!
//! All lengths are measured in the natural unit `k = 1` unless a unit is
//! passed explicitly.

// `!(x > 0.0)` style checks are used so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod covering;
pub mod error;
pub mod quadrature;
pub mod schlafli;
pub mod special;
pub mod volume;

pub use covering::{
    covering_density, covering_density_with_unit, hyperball_piece_volume, limit_p_infinity, sweep,
    CoveringResult, RowLabel, SweepRow, Table, TableRow,
};
pub use error::{Error, Result};
pub use quadrature::QuadratureConfig;
pub use schlafli::{
    build_gram, covering_height, invert_gram, validate_tiling, CoxeterSymbol, GramMatrix,
    InverseGram, Reason, TilingRecord,
};
pub use special::{lob, zeta3, LobachevskyEvaluator};
pub use volume::{
    base_volume, theta, vol2_base_triangle, vol3_orthoscheme, vol3_orthoscheme_p_limit,
    vol4_prism_orthoscheme, vol5_prism_orthoscheme, OrthoschemeAngles,
};
