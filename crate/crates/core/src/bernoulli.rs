//! Exact Bernoulli numbers for the Euler–Maclaurin corrections.
//!
//! The table holds `B_0 ..= B_{2·MAX_CORRECTIONS}` as reduced big rationals,
//! built once from `Σ_{j=0}^{n} C(n+1, j) B_j = 0` with the `B_1 = -1/2`
//! convention. Floating-point copies of `B_{2m} / (2m)!` are derived from the
//! exact values so no rounding accumulates through the recurrence.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{check_range, Result};

/// Largest number of Euler–Maclaurin correction terms the table supports.
pub const MAX_CORRECTIONS: usize = 30;

/// Highest Bernoulli index stored.
pub const MAX_INDEX: usize = 2 * MAX_CORRECTIONS;

/// Immutable table of Bernoulli numbers.
#[derive(Debug)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
    // em[m - 1] = B_{2m} / (2m)!, m = 1..=MAX_CORRECTIONS
    em: Vec<f64>,
}

impl BernoulliTable {
    fn build() -> Self {
        let mut values: Vec<BigRational> = Vec::with_capacity(MAX_INDEX + 1);
        values.push(BigRational::one());
        for n in 1..=MAX_INDEX {
            // B_n = -1/(n+1) Σ_{j<n} C(n+1, j) B_j
            let mut binom = BigInt::one(); // C(n+1, 0)
            let mut acc = BigRational::zero();
            for (j, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            let b_n = -acc / BigRational::from_integer(BigInt::from(n + 1));
            values.push(b_n);
        }

        let mut em = Vec::with_capacity(MAX_CORRECTIONS);
        let mut factorial = BigInt::one();
        for (i, b) in values.iter().enumerate().skip(1) {
            factorial *= BigInt::from(i);
            if i.is_multiple_of(2) {
                let c = b / BigRational::from_integer(factorial.clone());
                em.push(c.to_f64().expect("finite coefficient"));
            }
        }
        Self { values, em }
    }

    /// The process-wide table, built on first use.
    pub fn global() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(BernoulliTable::build)
    }

    pub fn get(&self, n: usize) -> Result<&BigRational> {
        check_range("bernoulli index", n as i64, 0, MAX_INDEX as i64)?;
        Ok(&self.values[n])
    }

    /// `B_{2m} / (2m)!` as a float, `1 <= m <= MAX_CORRECTIONS`.
    pub fn em_coefficient(&self, m: usize) -> f64 {
        self.em[m - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `B_n` as an exact rational, `n <= MAX_INDEX`.
pub fn bernoulli(n: usize) -> Result<BigRational> {
    BernoulliTable::global().get(n).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    // Akiyama–Tanigawa; yields B_1 = +1/2, other indices agree.
    fn akiyama_tanigawa(n: usize) -> BigRational {
        let mut a: Vec<BigRational> = (0..=n).map(|m| q(1, m as i64 + 1)).collect();
        for m in 0..=n {
            a[m] = q(1, m as i64 + 1);
            for j in (1..=m).rev() {
                a[j - 1] = BigRational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
            }
        }
        a[0].clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0).unwrap(), q(1, 1));
        assert_eq!(bernoulli(1).unwrap(), q(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), q(1, 6));
        assert_eq!(bernoulli(3).unwrap(), q(0, 1));
        assert_eq!(bernoulli(4).unwrap(), q(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), q(-691, 2730));
    }

    #[test]
    fn odd_entries_vanish() {
        for n in (3..=MAX_INDEX).step_by(2) {
            assert!(bernoulli(n).unwrap().is_zero(), "B_{n}");
        }
    }

    #[test]
    fn matches_independent_algorithm() {
        for n in (0..=MAX_INDEX).filter(|&n| n != 1) {
            assert_eq!(bernoulli(n).unwrap(), akiyama_tanigawa(n), "B_{n}");
        }
    }

    #[test]
    fn defining_recurrence_holds_exactly() {
        for n in 1..MAX_INDEX {
            let mut sum = BigRational::zero();
            let mut binom = BigInt::one();
            for j in 0..=n {
                sum += bernoulli(j).unwrap() * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(n + 1 - j) / BigInt::from(j + 1);
            }
            assert!(sum.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn index_beyond_table() {
        assert!(matches!(bernoulli(MAX_INDEX + 1), Err(Error::Range { .. })));
    }

    #[test]
    fn em_coefficients() {
        let t = BernoulliTable::global();
        assert!((t.em_coefficient(1) - 1.0 / 12.0).abs() < 1e-17);
        assert!((t.em_coefficient(2) + 1.0 / 720.0).abs() < 1e-18);
        assert_eq!(t.len(), MAX_INDEX + 1);
    }
}
