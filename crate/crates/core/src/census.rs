//! Counting side of the real-zero picture.
//!
//! If every interval `k` holds exactly `⌊r/k⌋` simple zeros, the total on
//! `(0, 1)` is `F(r) = Σ_{k=2}^{r} ⌊r/k⌋ = Σ_{ℓ<=r} d(ℓ) − r`, which grows
//! like `r ln r − 2(1 − γ) r + O(√r)`. This module computes those quantities
//! and compares them with empirical counts; it reports disagreement and never
//! treats it as a failure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Number of positive divisors, by trial division up to `√n`.
pub fn divisor_count(n: u64) -> u64 {
    assert!(n >= 1, "d(n) needs n >= 1");
    let mut count = 0;
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            count += if i * i == n { 1 } else { 2 };
        }
        i += 1;
    }
    count
}

/// `F(r) = Σ_{k=2}^{r} ⌊r/k⌋`, zero for `r = 1`.
pub fn iaz_predicted(r: u64) -> u64 {
    (2..=r).map(|k| r / k).sum()
}

/// `Σ_{ℓ<=r} d(ℓ) − r`.
pub fn divisor_total(r: u64) -> u64 {
    (1..=r).map(divisor_count).sum::<u64>() - r
}

/// Whether `F(r) = Σ_{ℓ<=r} d(ℓ) − r` holds at `r`.
pub fn divisor_identity_check(r: u64) -> bool {
    iaz_predicted(r) == divisor_total(r)
}

/// Checks the identity for every `1 <= r <= r_max`, keeping a running divisor
/// sum. Returns the first failing `r`, if any.
pub fn divisor_identity_first_failure(r_max: u64) -> Option<u64> {
    let mut divisor_sum = 0u64;
    for r in 1..=r_max {
        divisor_sum += divisor_count(r);
        if iaz_predicted(r) != divisor_sum - r {
            return Some(r);
        }
    }
    None
}

/// `r ln r − 2(1 − γ) r`.
pub fn iaz_asymptotic(r: u64) -> Result<f64> {
    check_range("r", r as i64, 2, i64::MAX)?;
    let rf = r as f64;
    Ok(rf * rf.ln() - 2.0 * (1.0 - EULER_GAMMA) * rf)
}

/// `Δ_F(r) = d(r) − 1`.
pub fn delta_f(r: u64) -> Result<u64> {
    check_range("r", r as i64, 2, i64::MAX)?;
    Ok(divisor_count(r) - 1)
}

/// `F(r) − F(r − 1)` computed from the two sums directly.
pub fn f_difference(r: u64) -> Result<u64> {
    check_range("r", r as i64, 2, i64::MAX)?;
    Ok(iaz_predicted(r) - iaz_predicted(r - 1))
}

pub fn is_perfect_square(n: u64) -> bool {
    let root = (n as f64).sqrt() as u64;
    (root.saturating_sub(1)..=root + 1).any(|x| x * x == n)
}

/// Largest `|F(r) − (r ln r − 2(1−γ) r)| / √r` over `lo <= r <= hi`.
pub fn asymptotic_band(lo: u64, hi: u64) -> Result<f64> {
    check_range("lo", lo as i64, 2, hi as i64)?;
    let mut worst = 0.0f64;
    for r in lo..=hi {
        let gap = (iaz_predicted(r) as f64 - iaz_asymptotic(r)?).abs();
        worst = worst.max(gap / (r as f64).sqrt());
    }
    Ok(worst)
}

/// Empirical versus conjectured count for one interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalCensus {
    pub k: u32,
    pub empirical: u64,
    /// `⌊r/k⌋`
    pub conjectured: u64,
    pub agree: bool,
}

/// Census of the real zeros of `ζ_r` on `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub r: u32,
    /// Ordered by `k` descending.
    pub per_interval: Vec<IntervalCensus>,
    pub empirical_total: u64,
    /// `F(r)`
    pub predicted_total: u64,
    /// `Σ_{ℓ<=r} d(ℓ) − r`
    pub divisor_total: u64,
    /// `r ln r − 2(1 − γ) r`
    pub asymptotic_estimate: f64,
    /// `predicted_total − asymptotic_estimate`
    pub residual: f64,
}

impl CensusReport {
    pub fn all_agree(&self) -> bool {
        self.per_interval.iter().all(|c| c.agree)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &IntervalCensus> {
        self.per_interval.iter().filter(|c| !c.agree)
    }
}

/// Assembles a census from per-interval counts `k → I_r(k)` for `k = 2..=r`.
pub fn census_report(r: u32, empirical: &BTreeMap<u32, u64>) -> Result<CensusReport> {
    check_range("r", r as i64, 2, i64::from(u32::MAX))?;
    let r64 = u64::from(r);
    let mut per_interval = Vec::with_capacity(r as usize - 1);
    for k in (2..=r).rev() {
        let count = *empirical.get(&k).ok_or(Error::IncompleteInput { k })?;
        let conjectured = r64 / u64::from(k);
        per_interval.push(IntervalCensus {
            k,
            empirical: count,
            conjectured,
            agree: count == conjectured,
        });
    }
    let predicted_total = iaz_predicted(r64);
    let asymptotic_estimate = iaz_asymptotic(r64)?;
    Ok(CensusReport {
        r,
        empirical_total: per_interval.iter().map(|c| c.empirical).sum(),
        per_interval,
        predicted_total,
        divisor_total: divisor_total(r64),
        asymptotic_estimate,
        residual: predicted_total as f64 - asymptotic_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(pairs: &[(u32, u64)]) -> BTreeMap<u32, u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn divisors() {
        assert_eq!(divisor_count(1), 1);
        assert_eq!(divisor_count(12), 6);
        assert_eq!(divisor_count(9973), 2);
        assert_eq!(divisor_count(36), 9);
    }

    #[test]
    fn predicted_counts() {
        assert_eq!(iaz_predicted(1), 0);
        assert_eq!(iaz_predicted(2), 1);
        assert_eq!(iaz_predicted(6), 8);
        assert_eq!(iaz_predicted(10), 17);
        let totals: Vec<u64> = (2..=10).map(iaz_predicted).collect();
        assert_eq!(totals, vec![1, 2, 4, 5, 8, 9, 12, 14, 17]);
    }

    #[test]
    fn identity() {
        // d(1..6) = 1, 2, 2, 3, 2, 4
        assert_eq!([1, 2, 2, 3, 2, 4].iter().sum::<u64>() - 6, 8);
        assert!(divisor_identity_check(6));
        assert!(divisor_identity_check(1));
        assert_eq!(divisor_identity_first_failure(2000), None);
    }

    #[test]
    fn asymptotic_values() {
        assert!((iaz_asymptotic(10).unwrap() - 14.570_164_228).abs() < 1e-8);
        let a2 = iaz_asymptotic(2).unwrap();
        assert!((a2 + 0.304_843).abs() < 1e-6);
        assert!((1.0 - a2).abs() <= 3.0 * 2f64.sqrt());
        assert!(iaz_asymptotic(1).is_err());
    }

    #[test]
    fn delta() {
        for p in [2u64, 3, 5, 7, 11, 13, 9973] {
            assert_eq!(delta_f(p).unwrap(), 1);
        }
        assert_eq!(delta_f(9).unwrap(), 2);
        for r in 2..=500 {
            assert_eq!(delta_f(r).unwrap(), f_difference(r).unwrap());
            assert_eq!(
                delta_f(r).unwrap().is_multiple_of(2),
                is_perfect_square(r),
                "r = {r}"
            );
        }
    }

    #[test]
    fn report_agreement() {
        let rep = census_report(6, &counts(&[(6, 1), (5, 1), (4, 1), (3, 2), (2, 3)])).unwrap();
        assert!(rep.all_agree());
        assert_eq!(rep.empirical_total, 8);
        assert_eq!(rep.predicted_total, rep.divisor_total);
        assert_eq!(rep.per_interval[0].k, 6);
        assert!((rep.residual - (8.0 - iaz_asymptotic(6).unwrap())).abs() < 1e-15);

        let ten = counts(&[
            (10, 1),
            (9, 1),
            (8, 1),
            (7, 1),
            (6, 1),
            (5, 2),
            (4, 2),
            (3, 3),
            (2, 5),
        ]);
        let rep = census_report(10, &ten).unwrap();
        assert!(rep.all_agree());
        assert_eq!(rep.empirical_total, 17);
    }

    #[test]
    fn report_flags_disagreement() {
        let rep = census_report(3, &counts(&[(3, 1), (2, 2)])).unwrap();
        assert!(!rep.all_agree());
        assert_eq!(
            rep.disagreements().map(|c| c.k).collect::<Vec<_>>(),
            vec![2]
        );
    }

    #[test]
    fn report_needs_every_interval() {
        assert_eq!(
            census_report(4, &counts(&[(4, 1), (2, 2)])),
            Err(Error::IncompleteInput { k: 3 })
        );
        assert!(census_report(1, &BTreeMap::new()).is_err());
    }

    #[test]
    fn squares() {
        assert!(is_perfect_square(1));
        assert!(is_perfect_square(10_000));
        assert!(!is_perfect_square(9_999));
    }
}
