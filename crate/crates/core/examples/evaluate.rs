//! `ζ_r(s)` by the Newton-identity recursion, checked against the explicit
//! expansions for `r <= 4` and against truncated nested sums for `s > 1`.
//!
//! ```text
//! cargo run --example evaluate -- 4 0.693658
//! ```

use mzr::{closed_form, multizeta, truncated_euler_zagier};

fn main() -> mzr::Result<()> {
    let mut args = std::env::args().skip(1);
    let r: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let s: f64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(0.7);

    let value = multizeta(r, s)?;
    println!("ζ_{r}({s}) = {value}");
    if (2..=4).contains(&r) {
        let cf = closed_form(r, s)?;
        println!("closed form   = {cf}  (diff {:.1e})", (cf - value).abs());
    }

    let seq = mzr::multizeta::multizeta_sequence(r, s)?;
    for (j, v) in seq.iter().enumerate().skip(1) {
        println!("  ζ_{j}({s}) = {v:+.12e}");
    }

    // the nested series itself only converges for s > 1
    println!("\ntruncated sums at s = 2, r = {r}:");
    let limit = multizeta(r, 2.0)?;
    for n in [10u64, 100, 1000, 10_000] {
        if n < r as u64 {
            continue;
        }
        let t = truncated_euler_zagier(r, 2.0, n)?;
        println!("  n = {n:>6}: {t:.15}  gap {:.2e}", limit - t);
    }
    println!("  limit     : {limit:.15}");
    Ok(())
}
