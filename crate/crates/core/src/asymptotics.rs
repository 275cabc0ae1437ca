//! Poles of `ζ_r` and the leading constants `C_r(k)` in
//! `ζ_r(s) ~ C_r(k) (ks − 1)^{−⌊r/k⌋}` as `s → 1/k`.
//!
//! Three independent routes to `C_r(k)` are provided: the explicit formulas
//! ([`coefficient_closed_form`]), the recursion over smaller fold counts that
//! produces them ([`coefficient_recursive`]), and numerical limit extraction
//! from the evaluator itself ([`coefficient_numeric`]).

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::multizeta::{multizeta, MAX_FOLD};
use crate::riemann::riemann_zeta;

/// One vertical asymptote of `ζ_r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleSpec {
    pub r: u32,
    pub k: u32,
    /// `1/k`
    pub location: f64,
    /// `⌊r/k⌋`
    pub order: u32,
    /// `C_r(k)`
    pub constant: f64,
    /// `(−1)^{r + ⌊r/k⌋}`
    pub sign: i8,
}

impl PoleSpec {
    pub fn new(r: u32, k: u32) -> Result<Self> {
        let order = pole_order(r, k)?;
        Ok(Self {
            r,
            k,
            location: 1.0 / k as f64,
            order,
            constant: coefficient_closed_form(r, k)?,
            sign: parity_sign(r + order),
        })
    }

    /// Leading term `C_r(k) (ks − 1)^{−order}`.
    pub fn leading_term(&self, s: f64) -> f64 {
        self.constant * (self.k as f64 * s - 1.0).powi(-(self.order as i32))
    }
}

/// All poles of `ζ_r`, ordered by `k` descending (increasing location).
pub fn poles(r: u32) -> Result<Vec<PoleSpec>> {
    check_range("r", r as i64, 1, MAX_FOLD as i64)?;
    (1..=r).rev().map(|k| PoleSpec::new(r, k)).collect()
}

fn parity_sign(n: u32) -> i8 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed(n: u32) -> f64 {
    parity_sign(n) as f64
}

fn check_pair(r: u32, k: u32) -> Result<()> {
    check_range("r", r as i64, 1, MAX_FOLD as i64)?;
    check_range("k", k as i64, 1, r as i64)
}

/// `⌊r/k⌋`, the order of the pole at `1/k`.
pub fn pole_order(r: u32, k: u32) -> Result<u32> {
    check_pair(r, k)?;
    Ok(r / k)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// `C_r(k)` from the explicit formulas: `1/r!` for `k = 1`, and for
/// `r = kq + ℓ`, `0 <= ℓ < k`,
/// `(−1)^{(k−1)q} / (k^q q!) · ζ_ℓ(1/k)` (with `ζ_0 = 1`).
pub fn coefficient_closed_form(r: u32, k: u32) -> Result<f64> {
    check_pair(r, k)?;
    if k == 1 {
        return Ok(1.0 / factorial(r));
    }
    let q = r / k;
    let l = r % k;
    let base = signed((k - 1) * q) / ((k as f64).powi(q as i32) * factorial(q));
    if l == 0 {
        Ok(base)
    } else {
        // ℓ < k, so 1/k is not a pole of ζ_ℓ
        Ok(base * multizeta(l, 1.0 / k as f64)?)
    }
}

/// `C_r(k)` through the recursion
///
/// ```text
/// C_m(k) = (1/m) [ Σ*_j (−1)^{j−1} ζ(j/k) C_{m−j}(k) + (−1)^{k−1} D_{m−k}(k) ],
/// ```
///
/// `Σ*` over `j <= m − k`, `j != k`, `⌊(m−j)/k⌋ = ⌊m/k⌋`, and
/// `D_{m−k}(k) = C_{m−k}(k)` if `2k <= m`, else `ζ_{m−k}(1/k)`.
pub fn coefficient_recursive(r: u32, k: u32) -> Result<f64> {
    check_pair(r, k)?;
    Ok(*recursive_table(r, k)?.last().expect("non-empty"))
}

/// `[C_k(k), C_{k+1}(k), …, C_r(k)]`.
fn recursive_table(r: u32, k: u32) -> Result<Vec<f64>> {
    let kf = k as f64;
    let zeta_ratio: Vec<f64> = (1..=r.saturating_sub(k))
        .map(|j| {
            if j == k {
                Ok(f64::NAN) // excluded from Σ*
            } else {
                riemann_zeta(j as f64 / kf)
            }
        })
        .collect::<Result<_>>()?;

    let mut c: Vec<f64> = Vec::with_capacity((r - k + 1) as usize);
    let at = |c: &Vec<f64>, m: u32| c[(m - k) as usize];
    for m in k..=r {
        let order = m / k;
        let mut acc = 0.0;
        for j in 1..=(m - k) {
            if j == k || (m - j) / k != order {
                continue;
            }
            acc += signed(j - 1) * zeta_ratio[(j - 1) as usize] * at(&c, m - j);
        }
        let d = if 2 * k <= m {
            at(&c, m - k)
        } else if m == k {
            1.0
        } else {
            multizeta(m - k, 1.0 / kf)?
        };
        acc += signed(k - 1) * d;
        c.push(acc / m as f64);
    }
    Ok(c)
}

/// Settings for [`coefficient_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtrapolationConfig {
    /// Largest offset from the pole; capped further by the distance to the
    /// next pole on the right.
    pub initial_offset: f64,
    /// Number of halvings of the offset (tableau size).
    pub depth: usize,
    /// Successive diagonal extrapolants must agree to this relative size.
    pub agreement: f64,
}

impl Default for ExtrapolationConfig {
    fn default() -> Self {
        Self {
            initial_offset: 1e-2,
            depth: 6,
            agreement: 1e-2,
        }
    }
}

/// `C_r(k)` extracted numerically from `g(ε) = ζ_r(1/k + ε) (kε)^{⌊r/k⌋}`
/// by Richardson extrapolation over halving offsets, approaching from the
/// right of `1/k`.
pub fn coefficient_numeric(r: u32, k: u32) -> Result<f64> {
    coefficient_numeric_with(r, k, &ExtrapolationConfig::default())
}

pub fn coefficient_numeric_with(r: u32, k: u32, config: &ExtrapolationConfig) -> Result<f64> {
    check_range("r", r as i64, 1, 10)?;
    check_range("k", k as i64, 1, r as i64)?;
    if config.depth < 2 {
        return Err(Error::Config(
            "extrapolation depth must be at least 2".into(),
        ));
    }
    let order = (r / k) as i32;
    let kf = k as f64;
    let pole = 1.0 / kf;
    // g is analytic in ε up to the next pole on the right
    let radius = if k == 1 {
        f64::INFINITY
    } else {
        1.0 / (kf - 1.0) - pole
    };
    let mut eps = config.initial_offset.min(radius / 4.0);

    let mut previous_row: Vec<f64> = Vec::new();
    let mut diagonal = Vec::with_capacity(config.depth);
    for _ in 0..config.depth {
        let g = multizeta(r, pole + eps)? * (kf * eps).powi(order);
        let mut row = Vec::with_capacity(previous_row.len() + 1);
        row.push(g);
        let mut factor = 1.0;
        for (j, &prev) in previous_row.iter().enumerate() {
            factor *= 2.0;
            let cur = row[j];
            row.push(cur + (cur - prev) / (factor - 1.0));
        }
        diagonal.push(*row.last().expect("non-empty"));
        previous_row = row;
        eps *= 0.5;
    }
    let n = diagonal.len();
    let (last, before) = (diagonal[n - 1], diagonal[n - 2]);
    if !last.is_finite() || (last - before).abs() > config.agreement * last.abs() {
        return Err(Error::NonConvergence(format!(
            "C_{r}({k}): extrapolants {before} and {last} disagree"
        )));
    }
    Ok(last)
}

/// `C_{kq+ℓ}(k) / C_{k(q+1)+ℓ}(k) = (−1)^{k−1} k (q+1)` for `1 <= q < q_max`,
/// `0 <= ℓ < k`, checked on the recursive coefficients at relative `1e-12`.
pub fn periodicity_check(k: u32, q_max: u32) -> Result<bool> {
    check_range("k", k as i64, 2, MAX_FOLD as i64)?;
    check_range("q_max", q_max as i64, 2, (MAX_FOLD / k) as i64)?;
    let top = k * q_max + k - 1;
    if top > MAX_FOLD {
        return Err(Error::Range {
            name: "k·q_max + k − 1",
            value: top as i64,
            min: 0,
            max: MAX_FOLD as i64,
        });
    }
    let table = recursive_table(top, k)?;
    let c = |m: u32| table[(m - k) as usize];
    for q in 1..q_max {
        let expected = signed(k - 1) * k as f64 * (q + 1) as f64;
        for l in 0..k {
            let ratio = c(k * q + l) / c(k * (q + 1) + l);
            if ((ratio - expected) / expected).abs() > 1e-12 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Signs of `ζ_r` sampled just left and right of a pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleSideReport {
    pub r: u32,
    pub k: u32,
    pub left_sign: i8,
    pub right_sign: i8,
    /// Whether the pattern matches `sign(C_r(k))` on the right and
    /// `sign(C_r(k))·(−1)^{order}` on the left.
    pub consistent: bool,
}

/// Samples `ζ_r(1/k ± offset)`.
pub fn pole_side_behavior(r: u32, k: u32, offset: f64) -> Result<PoleSideReport> {
    let spec = PoleSpec::new(r, k)?;
    let sgn = |v: f64| if v > 0.0 { 1i8 } else { -1 };
    let left_sign = sgn(multizeta(r, spec.location - offset)?);
    let right_sign = sgn(multizeta(r, spec.location + offset)?);
    let expected_right = spec.sign;
    let expected_left = spec.sign * parity_sign(spec.order);
    Ok(PoleSideReport {
        r,
        k,
        left_sign,
        right_sign,
        consistent: left_sign == expected_left && right_sign == expected_right,
    })
}
