//! Slow reference routines used only to cross-check the evaluators.
//!
//! Nothing here shares code with the production paths: the zeta oracle is
//! the Euler-transformed alternating eta series, and the symmetric-function
//! oracle enumerates subsets.

/// `ζ(s) = η(s) / (1 - 2^{1-s})` with `η` summed through the Euler transform
/// `η(s) = Σ_n Δ^n a_0 / 2^{n+1}`, `a_k = (k+1)^{-s}`.
///
/// Accurate to ~1e-14 relative for `s >= 0` away from 1.
pub fn eta_zeta(s: f64) -> f64 {
    const TERMS: usize = 70;
    let a: Vec<f64> = (0..TERMS).map(|k| ((k + 1) as f64).powf(-s)).collect();
    let mut binom = vec![0.0f64; TERMS];
    let mut eta = 0.0;
    let mut scale = 0.5;
    for n in 0..TERMS {
        // row n of Pascal's triangle
        binom[n] = 1.0;
        for k in (1..n).rev() {
            binom[k] += binom[k - 1];
        }
        let mut delta = 0.0;
        for k in 0..=n {
            let term = binom[k] * a[k];
            if k % 2 == 0 {
                delta += term;
            } else {
                delta -= term;
            }
        }
        eta += scale * delta;
        scale *= 0.5;
    }
    eta / (1.0 - 2f64.powf(1.0 - s))
}

/// `e_r(x)` by summing products over all `r`-subsets. Exponential; keep `x` short.
pub fn elementary_by_subsets(x: &[f64], r: usize) -> f64 {
    if r == 0 {
        return 1.0;
    }
    let n = x.len();
    assert!(n <= 24, "subset enumeration is limited to 24 values");
    let mut total = 0.0;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == r {
            total += (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| x[i])
                .product::<f64>();
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_oracle_known_values() {
        let pi = std::f64::consts::PI;
        assert!((eta_zeta(2.0) - pi * pi / 6.0).abs() < 1e-14);
        assert!((eta_zeta(0.5) + 1.460_354_508_809_586_8).abs() < 1e-13);
        assert!((eta_zeta(0.0) + 0.5).abs() < 1e-15);
    }

    #[test]
    fn subsets_small() {
        let x = [1.0, 2.0, 3.0];
        assert_eq!(elementary_by_subsets(&x, 0), 1.0);
        assert_eq!(elementary_by_subsets(&x, 1), 6.0);
        assert_eq!(elementary_by_subsets(&x, 2), 11.0);
        assert_eq!(elementary_by_subsets(&x, 3), 6.0);
    }
}
