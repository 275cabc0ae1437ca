//! `ζ_r(s) = ζ_r(s, …, s)` through the Newton-identity recursion
//!
//! ```text
//! j·ζ_j(s) = Σ_{i=1}^{j} (-1)^{i-1} ζ_{j-i}(s) ζ(i·s),   ζ_0 = 1,
//! ```
//!
//! which continues the nested series to every `s >= 0` off the poles `1/k`.
//!
//! Accuracy model for `s <= 1`: no compensated summation is attempted. The
//! absolute error of `ζ_r(s)` is of order `ε_mach · max_j |ζ_{r-j}(s) ζ(js)|`.
//! Close to a pole all leading contributions carry the same sign, so relative
//! accuracy survives there too; away from poles the terms are of moderate size.
//!
//! For `s > 1` and `r >= 2` the value itself can be far smaller than those
//! terms (`ζ_r(s) ~ (r!)^{-s}`), so the sequence `m^{-s}` is split. The head
//! `m <= M` goes through the positive-term elementary recursion, and the
//! recursion above runs only on the tail power sums `Σ_{m>M} m^{-js}`, whose
//! terms are all of comparable size. The two parts combine by a convolution
//! of positive numbers, which keeps the relative error at a few ulps.

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::riemann::{hurwitz_tail, riemann_zeta, POLE_GUARD};

/// Largest supported fold count.
pub const MAX_FOLD: u32 = 32;

/// One evaluated point `ζ_r(s)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiZetaValue {
    pub r: u32,
    pub s: f64,
    pub value: f64,
}

impl MultiZetaValue {
    pub fn eval(r: u32, s: f64) -> Result<Self> {
        Ok(Self {
            r,
            s,
            value: multizeta(r, s)?,
        })
    }
}

/// Checks `1 <= r <= MAX_FOLD`, `s >= 0` and that `s` keeps clear of every
/// pole `1/k`, `k <= r`.
pub fn check_domain(r: u32, s: f64) -> Result<()> {
    check_range("r", r as i64, 1, MAX_FOLD as i64)?;
    if !s.is_finite() || s < 0.0 {
        return Err(Error::OutOfDomain {
            value: s,
            what: "s must be finite and non-negative",
        });
    }
    for k in 1..=r {
        if (s - 1.0 / k as f64).abs() < POLE_GUARD {
            return Err(Error::Pole { k, order: r / k, s });
        }
    }
    Ok(())
}

/// `ζ(s), ζ(2s), …, ζ(rs)`.
fn riemann_multiples(r: u32, s: f64) -> Result<Vec<f64>> {
    (1..=r).map(|j| riemann_zeta(j as f64 * s)).collect()
}

/// `[ζ_0(s), ζ_1(s), …, ζ_r(s)]`.
pub fn multizeta_sequence(r: u32, s: f64) -> Result<Vec<f64>> {
    check_domain(r, s)?;
    if r >= 2 && s > 1.0 {
        return split_sequence(r, s);
    }
    let zr = riemann_multiples(r, s)?;
    Ok(newton_recursion(&zr))
}

/// Head length `M` for the split evaluation; the tail recursion then loses
/// at most a few bits, as `(1 + r/M)^{rs}` stays below `e^2`.
fn head_length(r: u32, s: f64) -> u64 {
    (f64::from(r * r) * s / 2.0).ceil().clamp(32.0, 200_000.0) as u64
}

fn split_sequence(r: u32, s: f64) -> Result<Vec<f64>> {
    let m = head_length(r, s);
    let head = elementary_prefix(r as usize, s, m);
    let tail_sums = (1..=r)
        .map(|j| hurwitz_tail(j as f64 * s, m + 1))
        .collect::<Result<Vec<_>>>()?;
    let tail = newton_recursion(&tail_sums);
    Ok((0..=r as usize)
        .map(|j| (0..=j).map(|i| head[j - i] * tail[i]).sum())
        .collect())
}

/// `e_0..=e_r` of `(1^{-s}, 2^{-s}, …, n^{-s})`, accumulated one value at a
/// time with Neumaier compensation (terms below half an ulp of `e_j` would
/// otherwise be dropped).
fn elementary_prefix(r: usize, s: f64, n: u64) -> Vec<f64> {
    let mut e = vec![0.0f64; r + 1];
    let mut comp = vec![0.0f64; r + 1];
    e[0] = 1.0;
    for m in 1..=n {
        let x = (m as f64).powf(-s);
        let top = r.min(m as usize);
        for j in (1..=top).rev() {
            let term = x * (e[j - 1] + comp[j - 1]);
            let t = e[j] + term;
            if e[j].abs() >= term.abs() {
                comp[j] += (e[j] - t) + term;
            } else {
                comp[j] += (term - t) + e[j];
            }
            e[j] = t;
        }
    }
    e.iter().zip(&comp).map(|(v, c)| v + c).collect()
}

/// Runs the recursion on power sums `p[j-1] = ζ(js)`; returns `ζ_0..=ζ_r`.
pub(crate) fn newton_recursion(p: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(1.0);
    for j in 1..=p.len() {
        let mut acc = 0.0;
        for i in 1..=j {
            let term = out[j - i] * p[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        out.push(acc / j as f64);
    }
    out
}

/// `ζ_r(s)` for `1 <= r <= 32`, `s >= 0`, away from the poles.
pub fn multizeta(r: u32, s: f64) -> Result<f64> {
    Ok(multizeta_sequence(r, s)?[r as usize])
}

/// The expansions of `ζ_2`, `ζ_3`, `ζ_4` in Riemann zeta values alone.
pub fn closed_form(r: u32, s: f64) -> Result<f64> {
    check_range("r", r as i64, 2, 4)?;
    check_domain(r, s)?;
    let z = riemann_multiples(r, s)?;
    let z1 = z[0];
    let z2 = z[1];
    Ok(match r {
        2 => 0.5 * (z1 * z1 - z2),
        3 => (z1 * z1 * z1 - 3.0 * z1 * z2 + 2.0 * z[2]) / 6.0,
        _ => {
            let (z3, z4) = (z[2], z[3]);
            (z1.powi(4) - 6.0 * z1 * z1 * z2 + 3.0 * z2 * z2 + 8.0 * z1 * z3 - 6.0 * z4) / 24.0
        }
    })
}

/// `N_r(s, n) = Σ_{1 <= m_1 < … < m_r <= n} (m_1 ⋯ m_r)^{-s}` for `s > 1`.
///
/// Accumulates `e_j(1^{-s}, …, m^{-s})` one value at a time, `O(r·n)`,
/// never enumerating tuples.
pub fn truncated_euler_zagier(r: u32, s: f64, n: u64) -> Result<f64> {
    check_range("r", r as i64, 1, MAX_FOLD as i64)?;
    if !(s > 1.0 && s.is_finite()) {
        return Err(Error::OutOfDomain {
            value: s,
            what: "the truncated series is an oracle only for s > 1",
        });
    }
    if n < r as u64 {
        return Err(Error::EmptySum { r, n });
    }
    Ok(elementary_prefix(r as usize, s, n)[r as usize])
}

/// Elementary symmetric polynomials and power sums of a finite vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricFunctionState {
    /// `e_0 ..= e_r`, with `e_0 = 1`.
    pub elementary: Vec<f64>,
    /// `p_1 ..= p_r`.
    pub power_sums: Vec<f64>,
}

impl SymmetricFunctionState {
    pub fn from_values(x: &[f64], r: usize) -> Result<Self> {
        check_range("r", r as i64, 1, x.len() as i64)?;
        let mut elementary = vec![0.0; r + 1];
        elementary[0] = 1.0;
        for (m, &v) in x.iter().enumerate() {
            for j in (1..=r.min(m + 1)).rev() {
                elementary[j] += v * elementary[j - 1];
            }
        }
        let power_sums = (1..=r as i32)
            .map(|j| x.iter().map(|v| v.powi(j)).sum())
            .collect();
        Ok(Self {
            elementary,
            power_sums,
        })
    }

    pub fn degree(&self) -> usize {
        self.power_sums.len()
    }

    /// `|r·e_r − Σ_{j=1}^{r} (−1)^{j−1} e_{r−j} p_j|`.
    pub fn newton_residual(&self) -> f64 {
        let r = self.degree();
        let e = &self.elementary;
        let rhs: f64 = (1..=r)
            .map(|j| {
                let t = e[r - j] * self.power_sums[j - 1];
                if j % 2 == 1 {
                    t
                } else {
                    -t
                }
            })
            .sum();
        (r as f64 * e[r] - rhs).abs()
    }
}

/// Residual of Newton's identity of degree `r` on the vector `x`.
pub fn newton_identity_check(x: &[f64], r: usize) -> Result<f64> {
    Ok(SymmetricFunctionState::from_values(x, r)?.newton_residual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::elementary_by_subsets;
    use std::f64::consts::PI;

    #[test]
    fn fold_one_is_riemann() {
        for s in [0.0, 0.3, 0.77, 1.5, 2.0, 7.25] {
            assert_eq!(multizeta(1, s).unwrap(), riemann_zeta(s).unwrap());
        }
    }

    #[test]
    fn double_at_two() {
        let v = multizeta(2, 2.0).unwrap();
        assert!((v - PI.powi(4) / 120.0).abs() < 1e-15);
    }

    #[test]
    fn values_at_the_origin() {
        assert_eq!(multizeta(2, 0.0).unwrap(), 0.375);
        assert!((multizeta(3, 0.0).unwrap() + 5.0 / 16.0).abs() < 1e-16);
        assert!((multizeta(3, 1e-9).unwrap() + 5.0 / 16.0).abs() < 1e-8);
    }

    #[test]
    fn known_zero_and_minimum() {
        assert!(multizeta(2, 0.626_817_5).unwrap().abs() < 1e-5);
        let v = multizeta(4, 0.693_658).unwrap();
        assert!((v + 4.069_957_2).abs() < 1e-3 * 4.07);
        // 40-digit evaluation of the same recursion with mpmath
        assert!((v + 4.069_972_539_971_761).abs() < 1e-12);
    }

    #[test]
    fn closed_forms() {
        // 0.21379886822459255 from the truncated double sum (n = 2e6) plus tail
        let n = truncated_euler_zagier(2, 3.0, 2_000_000).unwrap();
        // tail Σ_{m>n} H_{m-1} m^{-3} ≈ (ln n + γ) / (2 n²)
        let tail_bound = 1.202_056_903_159_594_3 * (2e6f64).powi(-2) * (2e6f64).ln();
        let cf = closed_form(2, 3.0).unwrap();
        assert!(cf - n >= -1e-15 && cf - n <= tail_bound, "{cf} vs {n}");
        assert!((cf - 0.213_798_868_224_592_55).abs() < 1e-15);

        assert!(closed_form(3, 0.385_782).unwrap().abs() < 1e-4);
        let a = closed_form(4, 2.0).unwrap();
        let b = multizeta(4, 2.0).unwrap();
        assert!(((a - b) / b).abs() < 1e-13);
    }

    #[test]
    fn large_s_keeps_relative_accuracy() {
        // 60-digit evaluations of the same recursion with mpmath
        let reference = [
            (2, 1.01, 5_057.148_056_543_700_2),
            (4, 1.5, 0.734_429_475_443_210_8),
            (5, 3.0, 3.810_176_744_035_81e-6),
            (8, 1.01, 258_582_795_524.960_49),
            (8, 2.0, 2.531_217_404_137_028e-7),
            (8, 10.0, 1.474_130_703_909_908_4e-46),
        ];
        for (r, s, v) in reference {
            let got = multizeta(r, s).unwrap();
            assert!(((got - v) / v).abs() < 1e-13, "r = {r}, s = {s}: {got}");
        }
    }

    #[test]
    fn decreasing_above_one() {
        for r in 2..=8 {
            let mut prev = f64::INFINITY;
            for i in 0..=900 {
                let s = 1.01 + 8.99 * i as f64 / 900.0;
                let v = multizeta(r, s).unwrap();
                assert!(v < prev && v > 0.0, "r = {r}, s = {s}");
                prev = v;
            }
        }
    }

    #[test]
    fn closed_form_range() {
        assert!(matches!(closed_form(5, 2.0), Err(Error::Range { .. })));
        assert!(matches!(closed_form(1, 2.0), Err(Error::Range { .. })));
        assert!(matches!(
            closed_form(3, 1.0 / 3.0),
            Err(Error::Pole { k: 3, .. })
        ));
    }

    #[test]
    fn pole_guard_names_order() {
        match multizeta(6, 0.5 + 1e-9) {
            Err(Error::Pole { k, order, .. }) => assert_eq!((k, order), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(multizeta(6, 0.5 + 2e-8).is_ok());
        assert!(matches!(multizeta(33, 2.0), Err(Error::Range { .. })));
        assert!(matches!(multizeta(0, 2.0), Err(Error::Range { .. })));
        assert!(matches!(multizeta(2, -0.1), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn truncated_sum_basics() {
        let v = truncated_euler_zagier(2, 2.0, 10_000).unwrap();
        assert!((v - PI.powi(4) / 120.0).abs() < 2e-4);
        let mut prev = 0.0;
        for n in [1u64, 2, 5, 10, 100, 1000] {
            let v = truncated_euler_zagier(1, 2.0, n).unwrap();
            let direct: f64 = (1..=n).map(|m| (m as f64).powi(-2)).sum();
            assert!((v - direct).abs() < 4e-16 * n as f64, "n = {n}");
            assert!(v > prev);
            prev = v;
        }
        assert!(matches!(
            truncated_euler_zagier(3, 2.0, 2),
            Err(Error::EmptySum { r: 3, n: 2 })
        ));
        assert!(truncated_euler_zagier(2, 1.0, 10).is_err());
    }

    #[test]
    fn truncated_sum_matches_subsets() {
        let s = 1.7;
        let x: Vec<f64> = (1..=10).map(|m| (m as f64).powf(-s)).collect();
        for r in 1..=5 {
            let a = truncated_euler_zagier(r, s, 10).unwrap();
            let b = elementary_by_subsets(&x, r as usize);
            assert!(((a - b) / b).abs() < 1e-14);
        }
    }

    #[test]
    fn truncated_sum_tail() {
        // tail <= ζ_{r-1}(s) · Σ_{m>n} m^{-s} <= ζ_{r-1}(s) · n^{1-s}/(s-1)
        let (r, s, n) = (3, 2.5, 2000u64);
        let gap = multizeta(r, s).unwrap() - truncated_euler_zagier(r, s, n).unwrap();
        let bound = multizeta(r - 1, s).unwrap() * (n as f64).powf(1.0 - s) / (s - 1.0);
        assert!(gap > 0.0 && gap <= bound, "gap {gap} bound {bound}");
    }

    #[test]
    fn newton_identity_by_hand() {
        assert_eq!(newton_identity_check(&[1.0, 1.0, 1.0], 2).unwrap(), 0.0);
        let st = SymmetricFunctionState::from_values(&[1.0, 1.0, 1.0], 2).unwrap();
        assert_eq!(st.elementary, vec![1.0, 3.0, 3.0]);
        assert_eq!(st.power_sums, vec![3.0, 3.0]);
        assert!(newton_identity_check(&[1.0], 2).is_err());
    }

    #[test]
    fn newton_identity_on_zeta_terms() {
        for n in 3..=12 {
            let x: Vec<f64> = (1..=n).map(|m| (m as f64).powi(-2)).collect();
            let st = SymmetricFunctionState::from_values(&x, 3).unwrap();
            assert!((st.elementary[3] - elementary_by_subsets(&x, 3)).abs() < 1e-15);
            assert!(st.newton_residual() < 1e-12);
        }
    }

    #[test]
    fn recursion_reproduces_elementary_from_power_sums() {
        let x = [0.3, -0.7, 0.2, 0.9, -0.1];
        let st = SymmetricFunctionState::from_values(&x, 5).unwrap();
        let e = newton_recursion(&st.power_sums);
        for (j, (a, b)) in e.iter().zip(&st.elementary).enumerate() {
            assert!((a - b).abs() < 1e-14, "e_{j}");
        }
    }
}
