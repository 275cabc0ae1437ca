//! Zero counts per interval against `⌊r/k⌋`, the divisor-sum identity for
//! their total and its `r ln r − 2(1 − γ) r` growth.
//!
//! ```text
//! cargo run --release --example census -- 10
//! ```

use std::collections::BTreeMap;

use mzr::census::{asymptotic_band, delta_f};
use mzr::{census_report, divisor_identity_check, scan_all, ScanConfig};

fn main() -> mzr::Result<()> {
    let r_max: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);

    println!(" r  found  F(r)  Σd − r  r ln r − 2(1−γ)r  per interval (k = r..2)");
    for r in 2..=r_max {
        let counts: BTreeMap<u32, u64> = scan_all(r, &ScanConfig::default())?
            .iter()
            .map(|rep| (rep.k, rep.zeros.len() as u64))
            .collect();
        let rep = census_report(r, &counts)?;
        let cells: Vec<String> = rep
            .per_interval
            .iter()
            .map(|c| {
                if c.agree {
                    c.empirical.to_string()
                } else {
                    format!("{}≠{}", c.empirical, c.conjectured)
                }
            })
            .collect();
        println!(
            "{:>2}  {:>5}  {:>4}  {:>6}  {:>16.4}  {}",
            r,
            rep.empirical_total,
            rep.predicted_total,
            rep.divisor_total,
            rep.asymptotic_estimate,
            cells.join(" ")
        );
    }

    let identity = (1..=10_000).all(divisor_identity_check);
    println!("\nΣ ⌊r/k⌋ = Σ d(ℓ) − r for r <= 10^4: {identity}");
    println!(
        "max |F(r) − estimate| / √r on [100, 10^4]: {:.4}",
        asymptotic_band(100, 10_000)?
    );
    let evens: Vec<u64> = (2..=200)
        .filter(|&r| delta_f(r).is_ok_and(|d| d % 2 == 0))
        .collect();
    println!("r <= 200 with even F(r) − F(r−1): {evens:?}");
    Ok(())
}
