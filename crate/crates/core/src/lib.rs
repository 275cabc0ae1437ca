//! Euler–Zagier multiple zeta-functions with identical arguments,
//! `ζ_r(s) = Σ_{1 <= m_1 < … < m_r} (m_1 ⋯ m_r)^{-s}`, on the non-negative
//! real axis.
//!
//! * [`riemann`]: `ζ(s)` for real `s >= 0` by Euler–Maclaurin summation, with
//!   the exact Bernoulli table in [`bernoulli`].
//! * [`multizeta`]: `ζ_r(s)` through the Newton-identity recursion
//!   `r ζ_r(s) = Σ_j (−1)^{j−1} ζ_{r−j}(s) ζ(js)`, plus closed forms for
//!   `r <= 4` and the truncated nested sum as an oracle.
//! * [`asymptotics`]: pole orders `⌊r/k⌋` at `s = 1/k` and the leading
//!   constants `C_r(k)`, computed three independent ways.
//! * [`zeros`]: zeros and extrema between consecutive asymptotes.
//! * [`census`]: the divisor-sum count of those zeros and its asymptotics.
//! * [`plot`], [`format`], [`verify`]: output helpers and self-checks used by
//!   the `mzr` binary.
//!
//! ```
//! let v = mzr::multizeta(2, 2.0).unwrap();
//! assert!((v - std::f64::consts::PI.powi(4) / 120.0).abs() < 1e-15);
//!
//! let zero = mzr::refine_root(2, 0.6, 0.65).unwrap();
//! assert!((zero.abscissa - 0.6268175).abs() < 1e-6);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example` lists them.

pub mod asymptotics;
pub mod bernoulli;
pub mod census;
pub mod error;
pub mod format;
pub mod multizeta;
pub mod oracle;
pub mod plot;
pub mod riemann;
pub mod verify;
pub mod zeros;

pub use asymptotics::{
    coefficient_closed_form, coefficient_numeric, coefficient_recursive, periodicity_check,
    pole_order, poles, PoleSpec,
};
pub use bernoulli::{bernoulli, BernoulliTable};
pub use census::{
    census_report, delta_f, divisor_count, divisor_identity_check, iaz_asymptotic, iaz_predicted,
    CensusReport, EULER_GAMMA,
};
pub use error::{Error, Result};
pub use multizeta::{
    closed_form, multizeta, newton_identity_check, truncated_euler_zagier, MultiZetaValue,
    SymmetricFunctionState,
};
pub use plot::PlotSeries;
pub use riemann::{riemann_zeta, riemann_zeta_with, EulerMaclaurinConfig};
pub use zeros::{
    find_extrema, refine_root, scan_all, scan_interval, sign_profile, ExtremumKind, ExtremumRecord,
    ScanConfig, ScanReport, ZeroRecord,
};
