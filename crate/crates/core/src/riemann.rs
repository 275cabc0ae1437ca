//! Riemann zeta-function on the non-negative real axis.
//!
//! Evaluated by Euler–Maclaurin summation:
//!
//! ```text
//! ζ(s) = Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//!        + Σ_{m=1}^{M} B_{2m}/(2m)! · s(s+1)…(s+2m-2) · N^{-s-2m+1}
//! ```
//!
//! With `N = max(20, ⌈s⌉ + 10)` and `M = 12` the correction series is still
//! decreasing at the cut for every `s <= 60`, and the result is within a few
//! ulps of the true value.

use crate::bernoulli::{BernoulliTable, MAX_CORRECTIONS};
use crate::error::{Error, Result};

/// Requests closer than this to `s = 1` are rejected.
pub const POLE_GUARD: f64 = 1e-8;

/// Tuning of the Euler–Maclaurin evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerMaclaurinConfig {
    /// Number of directly summed terms `N` (the sum runs over `n < N`).
    pub direct_terms: u32,
    /// Number of Bernoulli corrections `M`.
    pub correction_terms: u32,
    pub target_rel_error: f64,
}

impl EulerMaclaurinConfig {
    pub const DEFAULT_CORRECTIONS: u32 = 12;
    pub const DEFAULT_TARGET: f64 = 1e-14;

    /// The configuration used by [`riemann_zeta`] at `s`.
    pub fn adaptive(s: f64) -> Self {
        let direct = (s.ceil() + 10.0).max(20.0);
        Self {
            direct_terms: direct.min(u32::MAX as f64) as u32,
            correction_terms: Self::DEFAULT_CORRECTIONS,
            target_rel_error: Self::DEFAULT_TARGET,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.direct_terms < 2 {
            return Err(Error::Config(format!(
                "direct_terms = {} must be at least 2",
                self.direct_terms
            )));
        }
        if self.correction_terms < 1 || self.correction_terms as usize > MAX_CORRECTIONS {
            return Err(Error::Config(format!(
                "correction_terms = {} must lie in [1, {MAX_CORRECTIONS}]",
                self.correction_terms
            )));
        }
        if !(self.target_rel_error > 0.0 && self.target_rel_error < 1.0) {
            return Err(Error::Config(format!(
                "target_rel_error = {} must lie in (0, 1)",
                self.target_rel_error
            )));
        }
        Ok(())
    }

    /// Same configuration with the direct sum twice as long.
    pub fn doubled(&self) -> Self {
        Self {
            direct_terms: self.direct_terms.saturating_mul(2),
            ..*self
        }
    }
}

fn check_domain(s: f64) -> Result<()> {
    if !s.is_finite() {
        return Err(Error::OutOfDomain {
            value: s,
            what: "s must be finite",
        });
    }
    if s < 0.0 {
        return Err(Error::OutOfDomain {
            value: s,
            what: "negative s is not supported",
        });
    }
    if (s - 1.0).abs() < POLE_GUARD {
        return Err(Error::Pole { k: 1, order: 1, s });
    }
    Ok(())
}

/// `ζ(s)` for real `s >= 0`, `s != 1`.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    check_domain(s)?;
    Ok(euler_maclaurin(s, &EulerMaclaurinConfig::adaptive(s)))
}

/// `ζ(s)` with an explicit configuration.
pub fn riemann_zeta_with(s: f64, config: &EulerMaclaurinConfig) -> Result<f64> {
    check_domain(s)?;
    config.validate()?;
    Ok(euler_maclaurin(s, config))
}

/// `Σ_{m>=n} m^{-s}` for `s > 1`, `n >= 1`.
pub fn hurwitz_tail(s: f64, n: u64) -> Result<f64> {
    if !(s > 1.0 + POLE_GUARD && s.is_finite()) {
        return Err(Error::OutOfDomain {
            value: s,
            what: "the tail sum converges only for s > 1",
        });
    }
    if n == 0 {
        return Err(Error::OutOfDomain {
            value: 0.0,
            what: "the tail sum starts at n >= 1",
        });
    }
    let config = EulerMaclaurinConfig::adaptive(s);
    let start = n.max(u64::from(config.direct_terms));
    let mut partial = 0.0;
    for m in (n..start).rev() {
        partial += (m as f64).powf(-s);
    }
    Ok(partial + em_remainder(s, start as f64, config.correction_terms))
}

fn euler_maclaurin(s: f64, config: &EulerMaclaurinConfig) -> f64 {
    let n = config.direct_terms;

    // smallest terms first
    let mut partial = 0.0;
    for m in (1..n).rev() {
        partial += (m as f64).powf(-s);
    }
    partial + em_remainder(s, n as f64, config.correction_terms)
}

/// Euler–Maclaurin value of `Σ_{m>=n} m^{-s}` with `corrections` Bernoulli terms.
fn em_remainder(s: f64, n: f64, corrections: u32) -> f64 {
    let n_pow = n.powf(-s);
    let tail = n * n_pow / (s - 1.0);
    let half = 0.5 * n_pow;

    let table = BernoulliTable::global();
    let inv_n2 = 1.0 / (n * n);
    // rising = s(s+1)…(s+2m-2), power = N^{-s-2m+1}
    let mut rising = s;
    let mut power = n_pow / n;
    let mut correction = 0.0;
    for m in 1..=corrections as usize {
        correction += table.em_coefficient(m) * rising * power;
        let a = s + (2 * m - 1) as f64;
        rising *= a * (a + 1.0);
        power *= inv_n2;
    }
    tail + half + correction
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::eta_zeta;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn classical_values() {
        assert!(rel(riemann_zeta(2.0).unwrap(), PI * PI / 6.0) < 1e-15);
        assert!(rel(riemann_zeta(4.0).unwrap(), PI.powi(4) / 90.0) < 1e-15);
        assert_eq!(riemann_zeta(0.0).unwrap(), -0.5);
        assert!(rel(riemann_zeta(3.0).unwrap(), 1.202_056_903_159_594_3) < 1e-15);
        assert!(rel(riemann_zeta(0.5).unwrap(), -1.460_354_508_809_586_8) < 1e-14);
    }

    #[test]
    fn agrees_with_eta_oracle() {
        for i in 0..1000 {
            let s = 1.5 + 38.5 * i as f64 / 999.0;
            let em = riemann_zeta(s).unwrap();
            let eta = eta_zeta(s);
            assert!(rel(em, eta) < 1e-12, "s = {s}: {em} vs {eta}");
        }
        for i in 0..200 {
            let s = 0.995 * i as f64 / 199.0;
            assert!(
                rel(riemann_zeta(s).unwrap(), eta_zeta(s)) < 1e-12,
                "s = {s}"
            );
        }
    }

    #[test]
    fn negative_below_one() {
        for i in 0..2000 {
            let s = i as f64 / 2000.0;
            assert!(riemann_zeta(s).unwrap() < 0.0, "s = {s}");
        }
    }

    #[test]
    fn decreasing_above_one() {
        let mut prev = f64::INFINITY;
        for i in 1..=1000 {
            let s = 1.0 + 0.05 * i as f64;
            let z = riemann_zeta(s).unwrap();
            // beyond s ≈ 45 neighbouring values agree to the last bit
            assert!(z < prev || (z == prev && z - 1.0 < 1e-13), "s = {s}");
            prev = z;
        }
    }

    #[test]
    fn doubling_direct_terms_is_stable() {
        for i in 0..=120 {
            let s = 0.5 * i as f64;
            if (s - 1.0).abs() < 1e-3 {
                continue;
            }
            let config = EulerMaclaurinConfig::adaptive(s);
            let a = riemann_zeta_with(s, &config).unwrap();
            let b = riemann_zeta_with(s, &config.doubled()).unwrap();
            assert!(rel(a, b) < config.target_rel_error, "s = {s}: {a} vs {b}");
        }
    }

    #[test]
    fn close_to_the_pole() {
        let s = 1.0 + 1e-6;
        let eps = s - 1.0;
        let z = riemann_zeta(s).unwrap();
        // ζ(1+ε) = 1/ε + γ + O(ε)
        assert!((z - 1.0 / eps - 0.577_215_664_901_532_9).abs() < 1e-5);
    }

    #[test]
    fn tail_sums() {
        let z = riemann_zeta(2.5).unwrap();
        let head: f64 = (1..7).map(|m| (m as f64).powf(-2.5)).sum();
        assert!(rel(hurwitz_tail(2.5, 7).unwrap(), z - head) < 1e-13);
        assert!(rel(hurwitz_tail(2.5, 1).unwrap(), z) < 1e-15);
        // Σ_{m>=n} m^{-2} = 1/n + 1/(2n²) + 1/(6n³) − 1/(30n⁵) + O(n^{-7})
        let n = 1000f64;
        let approx = 1.0 / n + 0.5 / (n * n) + 1.0 / (6.0 * n.powi(3)) - 1.0 / (30.0 * n.powi(5));
        assert!(rel(hurwitz_tail(2.0, 1000).unwrap(), approx) < 1e-14);
        assert!(hurwitz_tail(1.0, 5).is_err());
        assert!(hurwitz_tail(2.0, 0).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(riemann_zeta(1.0), Err(Error::Pole { k: 1, .. })));
        assert!(matches!(riemann_zeta(1.0 + 5e-9), Err(Error::Pole { .. })));
        assert!(matches!(riemann_zeta(-0.5), Err(Error::OutOfDomain { .. })));
        assert!(matches!(
            riemann_zeta(f64::NAN),
            Err(Error::OutOfDomain { .. })
        ));
    }

    #[test]
    fn config_validation() {
        let mut c = EulerMaclaurinConfig::adaptive(2.0);
        assert_eq!(c.direct_terms, 20);
        assert_eq!(EulerMaclaurinConfig::adaptive(55.5).direct_terms, 66);
        c.direct_terms = 1;
        assert!(c.validate().is_err());
        c.direct_terms = 20;
        c.correction_terms = 31;
        assert!(c.validate().is_err());
        c.correction_terms = 12;
        c.target_rel_error = 1.0;
        assert!(c.validate().is_err());
    }
}
