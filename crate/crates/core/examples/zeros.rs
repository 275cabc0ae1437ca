//! Real zeros of `ζ_r` between consecutive asymptotes `1/k` and `1/(k−1)`.
//!
//! ```text
//! cargo run --release --example zeros -- 8
//! ```

use mzr::zeros::{refine_root, sign_profile};
use mzr::{scan_all, ScanConfig};

fn main() -> mzr::Result<()> {
    let r: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);

    let profile = sign_profile(r, 200)?;
    println!(
        "on [0, 1/{r}): sign {:+} everywhere = {}, min |ζ_{r}| = {:.3e}",
        profile.expected_sign, profile.pass, profile.min_abs
    );

    let config = ScanConfig::default();
    let mut total = 0;
    for rep in scan_all(r, &config)? {
        let lo = 1.0 / rep.k as f64;
        let hi = 1.0 / (rep.k - 1) as f64;
        print!(
            "({lo:.4}, {hi:.4}): {} zero(s), grid counts {:?}",
            rep.zeros.len(),
            rep.counts
        );
        if !rep.tangency_suspects.is_empty() {
            print!(", tangency suspects {:?}", rep.tangency_suspects);
        }
        println!();
        for z in &rep.zeros {
            println!(
                "    s = {:.15}  |ζ_{r}(s)| = {:.1e}",
                z.abscissa, z.residual
            );
        }
        total += rep.zeros.len();
    }
    println!(
        "{total} zeros in total, ⌊{r}/k⌋ summed gives {}",
        mzr::iaz_predicted(u64::from(r))
    );

    // a single bracket can also be refined directly
    let z = refine_root(2, 0.6, 0.65)?;
    println!(
        "\nζ_2 vanishes at {:.15} (bracket width {:.1e})",
        z.abscissa,
        z.bracket_hi - z.bracket_lo
    );
    Ok(())
}
