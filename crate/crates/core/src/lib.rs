//! Exact desingularization of Ore operators and order-degree curves.
//!
//! The crate works over the rationals throughout. Operators live in either the
//! shift algebra (`∂x = (x+1)∂`) or the differential algebra (`∂x = x∂ + 1`).
//!
//! Layering, bottom up:
//!
//! - [`polyring`]: dense polynomials and rational functions over `Q`, shifts,
//!   resultants, integer roots and shift-equivalence classes.
//! - [`factorizer`]: squarefree decomposition and irreducible factorization
//!   with caller-supplied hints.
//! - [`orealg`]: operators, noncommutative multiplication and right division.
//! - [`exactla`]: fraction-free nullspaces and affine solves.
//! - [`desing`]: removability bounds, removing-operator construction and
//!   certificate checks.
//! - [`odcurve`]: order-degree curve prediction, the constructive low-degree
//!   multiple, and the brute-force region oracle.
//! - [`text`] / [`json`]: the operator text grammar and JSON exchange formats.

pub mod desing;
pub mod error;
pub mod exactla;
pub mod factorizer;
pub mod json;
pub mod odcurve;
pub mod orealg;
pub mod par;
pub mod polyring;
pub mod text;

pub use desing::{
    analyze_factor, combine_removals, exponent_bound, removal_order_bound, try_remove_at, Caps,
    RemovabilityReport, RemovalCertificate, Verdict,
};
pub use error::{Error, Result};
pub use exactla::QMatrix;
pub use factorizer::{factor, squarefree_decomp, Factor, FactorDecomp};
pub use odcurve::{
    analyze, construct_multiple, curve_bound, find_left_multiple, region, Analysis, CurveBlock,
    CurveSpec, RegionStaircase,
};
pub use orealg::{OreOperator, OreRing};
pub use polyring::{Poly, RatFun, Rational};
