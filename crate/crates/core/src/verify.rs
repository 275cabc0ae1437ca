//! Self-check suites run by `mzr verify`.
//!
//! Each check is either hard (a failure means the numerics are broken) or
//! soft (comparative evidence, currently only the zero census against the
//! conjectured `⌊r/k⌋`).

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::asymptotics::{
    coefficient_closed_form, coefficient_numeric, coefficient_recursive, periodicity_check,
    pole_side_behavior, PoleSpec,
};
use crate::census::{
    asymptotic_band, census_report, delta_f, divisor_identity_first_failure, f_difference,
    is_perfect_square,
};
use crate::multizeta::{closed_form, multizeta, truncated_euler_zagier};
use crate::oracle::eta_zeta;
use crate::riemann::riemann_zeta;
use crate::zeros::{scan_all, sign_profile, ScanConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Kernel,
    Multizeta,
    Asymptotics,
    Zeros,
    Census,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "kernel" => Suite::Kernel,
            "multizeta" => Suite::Multizeta,
            "asymptotics" | "poles" => Suite::Asymptotics,
            "zeros" => Suite::Zeros,
            "census" => Suite::Census,
            "all" => Suite::All,
            other => return Err(format!("unknown suite `{other}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub pass: bool,
    pub hard: bool,
    pub detail: String,
}

impl Check {
    fn hard(suite: Suite, name: &str, pass: bool, detail: String) -> Self {
        Self {
            suite,
            name: name.to_string(),
            pass,
            hard: true,
            detail,
        }
    }
}

/// Whether any hard check failed.
pub fn hard_failure(checks: &[Check]) -> bool {
    checks.iter().any(|c| c.hard && !c.pass)
}

pub fn run(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Kernel => kernel(),
        Suite::Multizeta => multizeta_suite(),
        Suite::Asymptotics => asymptotics(),
        Suite::Zeros => zeros(),
        Suite::Census => census(),
        Suite::All => [
            kernel(),
            multizeta_suite(),
            asymptotics(),
            zeros(),
            census(),
        ]
        .concat(),
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn kernel() -> Vec<Check> {
    let suite = Suite::Kernel;
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let s = 1.5 + 38.5 * i as f64 / 999.0;
        worst = worst.max(rel(riemann_zeta(s).unwrap_or(f64::NAN), eta_zeta(s)));
    }
    let classical = [
        rel(riemann_zeta(2.0).unwrap_or(f64::NAN), PI * PI / 6.0),
        rel(riemann_zeta(4.0).unwrap_or(f64::NAN), PI.powi(4) / 90.0),
        rel(riemann_zeta(0.0).unwrap_or(f64::NAN), -0.5),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    let negative = (0..1000).all(|i| riemann_zeta(i as f64 / 1000.0).is_ok_and(|v| v < 0.0));
    vec![
        Check::hard(
            suite,
            "euler-maclaurin vs eta oracle on [1.5, 40]",
            worst <= 1e-12,
            format!("max relative deviation {worst:e}"),
        ),
        Check::hard(
            suite,
            "zeta(2), zeta(4), zeta(0) closed forms",
            classical <= 1e-14,
            format!("max relative deviation {classical:e}"),
        ),
        Check::hard(suite, "zeta < 0 on [0, 1)", negative, String::new()),
    ]
}

fn multizeta_suite() -> Vec<Check> {
    let suite = Suite::Multizeta;
    // deterministic points from the golden-ratio sequence
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut worst = 0.0f64;
    for r in 2..=4u32 {
        let lo = 1.0 / r as f64;
        for i in 1..=500 {
            let s = lo + (4.0 - lo) * ((i as f64 * phi) % 1.0);
            let (Ok(a), Ok(b)) = (multizeta(r, s), closed_form(r, s)) else {
                continue;
            };
            worst = worst.max((a - b).abs() / a.abs().max(1.0));
        }
    }

    let mut monotone = true;
    let mut detail = String::new();
    for r in 1..=5u32 {
        for s in [1.5, 2.0, 3.0] {
            let target = multizeta(r, s).unwrap_or(f64::NAN);
            let mut prev = 0.0;
            for n in [100u64, 1000, 10_000] {
                let v = truncated_euler_zagier(r, s, n).unwrap_or(f64::NAN);
                let bound = if r == 1 {
                    1.0
                } else {
                    multizeta(r - 1, s).unwrap_or(f64::NAN)
                } * (n as f64).powf(1.0 - s)
                    / (s - 1.0);
                let gap = target - v;
                if !(v >= prev && gap >= -1e-14 * target && gap <= bound) {
                    monotone = false;
                    detail = format!("r = {r}, s = {s}, n = {n}: gap {gap:e}, bound {bound:e}");
                }
                prev = v;
            }
        }
    }
    vec![
        Check::hard(
            suite,
            "recursion vs closed forms (r = 2, 3, 4)",
            worst <= 1e-12,
            format!("max scaled deviation {worst:e}"),
        ),
        Check::hard(
            suite,
            "truncated sums increase to the recursion value within the tail bound",
            monotone,
            detail,
        ),
    ]
}

fn asymptotics() -> Vec<Check> {
    let suite = Suite::Asymptotics;
    let mut worst = 0.0f64;
    let mut signs = true;
    for r in 1..=12u32 {
        for k in 1..=r {
            let (Ok(a), Ok(b)) = (coefficient_closed_form(r, k), coefficient_recursive(r, k))
            else {
                worst = f64::NAN;
                continue;
            };
            worst = worst.max(rel(a, b));
            let expected = if (r + r / k) % 2 == 0 { 1.0 } else { -1.0 };
            signs &= a * expected > 0.0;
        }
    }
    let mut numeric_worst = 0.0f64;
    let mut numeric_detail = String::new();
    for r in 1..=8u32 {
        for k in 1..=r {
            match (coefficient_numeric(r, k), coefficient_closed_form(r, k)) {
                (Ok(n), Ok(c)) => numeric_worst = numeric_worst.max(rel(n, c)),
                (Err(e), _) | (_, Err(e)) => {
                    numeric_worst = f64::INFINITY;
                    numeric_detail = format!("C_{r}({k}): {e}");
                }
            }
        }
    }
    if numeric_detail.is_empty() {
        numeric_detail = format!("max relative deviation {numeric_worst:e}");
    }
    let periodic = (2..=4u32).all(|k| periodicity_check(k, 30 / k - 1).unwrap_or(false));
    let sides = (1..=8u32)
        .all(|r| (1..=r).all(|k| pole_side_behavior(r, k, 1e-4).is_ok_and(|p| p.consistent)));
    let specs_ok =
        (1..=12u32).all(|r| (1..=r).all(|k| PoleSpec::new(r, k).is_ok_and(|p| p.order == r / k)));
    vec![
        Check::hard(
            suite,
            "closed-form vs recursive coefficients (r <= 12)",
            worst <= 1e-12,
            format!("max relative deviation {worst:e}"),
        ),
        Check::hard(
            suite,
            "coefficient signs (-1)^(r + [r/k])",
            signs,
            String::new(),
        ),
        Check::hard(
            suite,
            "numeric limit extraction vs closed form (r <= 8)",
            numeric_worst <= 1e-2,
            numeric_detail,
        ),
        Check::hard(
            suite,
            "periodicity mod k (k = 2, 3, 4)",
            periodic,
            String::new(),
        ),
        Check::hard(
            suite,
            "signs on both sides of each pole (r <= 8)",
            sides,
            String::new(),
        ),
        Check::hard(suite, "pole orders [r/k]", specs_ok, String::new()),
    ]
}

fn zeros() -> Vec<Check> {
    let suite = Suite::Zeros;
    let mut checks = Vec::new();
    let profiles = (1..=12u32).all(|r| sign_profile(r, 200).is_ok_and(|p| p.pass));
    checks.push(Check::hard(
        suite,
        "sign (-1)^r on [0, 1/r) for r <= 12",
        profiles,
        String::new(),
    ));

    let config = ScanConfig::default();
    for r in 2..=10u32 {
        let reports = match scan_all(r, &config) {
            Ok(reps) => reps,
            Err(e) => {
                checks.push(Check::hard(
                    suite,
                    &format!("scan r = {r}"),
                    false,
                    e.to_string(),
                ));
                continue;
            }
        };
        let stable = reports.iter().all(|rep| rep.stable);
        let tangency: usize = reports.iter().map(|rep| rep.tangency_suspects.len()).sum();
        let records_ok = reports.iter().all(|rep| {
            rep.zeros.iter().all(|z| {
                let k = z.k as f64;
                z.bracket_hi - z.bracket_lo <= 1e-12
                    && z.bracket_lo > 1.0 / k
                    && z.bracket_hi < 1.0 / (k - 1.0)
                    && z.bracket_lo <= z.abscissa
                    && z.abscissa <= z.bracket_hi
            })
        });
        checks.push(Check::hard(
            suite,
            &format!("scan r = {r}: stable counts, no tangency suspects, valid brackets"),
            stable && tangency == 0 && records_ok,
            format!("stable = {stable}, tangency suspects = {tangency}, records ok = {records_ok}"),
        ));

        let counts: BTreeMap<u32, u64> = reports
            .iter()
            .map(|rep| (rep.k, rep.zeros.len() as u64))
            .collect();
        if let Ok(census) = census_report(r, &counts) {
            let bad: Vec<String> = census
                .disagreements()
                .map(|c| format!("k = {}: {} vs {}", c.k, c.empirical, c.conjectured))
                .collect();
            checks.push(Check {
                suite,
                name: format!("census r = {r}: I_r(k) = [r/k]"),
                pass: bad.is_empty(),
                hard: false,
                detail: if bad.is_empty() {
                    format!("total {}", census.empirical_total)
                } else {
                    bad.join("; ")
                },
            });
        }
    }
    checks
}

fn census() -> Vec<Check> {
    let suite = Suite::Census;
    let first = divisor_identity_first_failure(10_000);
    let parity = (2..=10_000u64).all(|r| {
        let d = delta_f(r).unwrap_or(0);
        d == f_difference(r).unwrap_or(u64::MAX) && d.is_multiple_of(2) == is_perfect_square(r)
    });
    let band = asymptotic_band(100, 10_000).unwrap_or(f64::INFINITY);
    vec![
        Check::hard(
            suite,
            "sum [r/k] = sum d(l) - r for r <= 10^4",
            first.is_none(),
            first
                .map(|r| format!("fails at r = {r}"))
                .unwrap_or_default(),
        ),
        Check::hard(
            suite,
            "Delta_F(r) = d(r) - 1, even iff r is a square (r <= 10^4)",
            parity,
            String::new(),
        ),
        Check::hard(
            suite,
            "|F(r) - (r ln r - 2(1 - gamma) r)| <= 3 sqrt(r) on [100, 10^4]",
            band <= 3.0,
            format!("max |gap| / sqrt(r) = {band:.4}"),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("kernel".parse::<Suite>().unwrap(), Suite::Kernel);
        assert_eq!("poles".parse::<Suite>().unwrap(), Suite::Asymptotics);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn kernel_and_census_pass() {
        let checks = [run(Suite::Kernel), run(Suite::Census)].concat();
        assert!(!hard_failure(&checks), "{checks:#?}");
    }
}
