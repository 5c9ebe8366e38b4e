//! Power-series machinery for the Heun equation around `x = 0`.
//!
//! The Heun equation's series coefficients obey a three-term recurrence
//! `d_{n+1} = A_n d_n + B_n d_{n-1}` whose coefficient functions tend to
//! constants `A = (1+a)/a`, `B = -1/a`. This crate builds that recurrence,
//! computes two different convergence domains for the series, and runs the
//! summation experiments that tell the two domains apart:
//!
//! - [`params`] / [`recurrence`]: Heun parameters, indicial roots, the
//!   recurrence rule with its normalized coefficient functions, closed-form
//!   terms, and the generating function `1/(1 - Ax - Bx^2)`.
//! - [`domains`]: the characteristic-root (Poincaré–Perron) domain, the
//!   absolute-convergence test `|Ax| + |Bx^2| < 1` with its boundary
//!   formulas, ratio-test limits with and without coefficient moduli, the
//!   revised characteristic polynomial, a dominating-series bound, and
//!   rectangular region scans.
//! - [`summation`]: direct single-series summation, rectangular double-series
//!   summation, diagonal resummation, full Heun partial sums, and a
//!   convergence probe over recorded partial sums.
//! - [`scaled`]: a sign/mantissa/exponent real type so divergent partial sums
//!   far beyond `f64` range (magnitudes like 10^584) stay representable.
//! - [`maier`]: nine symmetry-transformed local solutions (from Maier's
//!   catalog) with their transformed parameters and convergence conditions.

pub mod domains;
mod error;
pub mod maier;
pub mod params;
pub mod recurrence;
pub mod scaled;
pub mod summation;

pub use domains::{
    abs_boundary, abs_test, characteristic_roots, dominating_bound, hypergeom_ratio_limit,
    pp_domain, ratio_test_limit, region_scan, revised_characteristic, AbsRegion, CellClass,
    CharacteristicRoots, ConvergenceVerdict, DomainStatus, DomainVerdict, PpDomain, RegionGrid,
    DEFAULT_DOMINATING_EPS,
};
pub use error::Error;
pub use maier::{maier_condition, maier_transformed_params, ArgumentMap, MaierVariant};
pub use params::{HeunParameters, IndicialRoot};
pub use recurrence::{
    closed_form_term, generating_value, CoefficientSequence, RecurrenceRule,
};
pub use scaled::ScaledReal;
pub use summation::{
    abs_diagonal_sum, diagonal_sum, direct_sum, heun_series_sum, probe, rect_double_sum,
    series_sum_with_rule, DoubleSeriesArgs, ProbeVerdict, SumReport,
};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
