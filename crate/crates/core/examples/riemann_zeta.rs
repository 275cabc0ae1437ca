//! The Riemann zeta-function on `[0, 60]` by Euler–Maclaurin summation,
//! next to the accelerated eta series it is tested against.
//!
//! ```text
//! cargo run --example riemann_zeta
//! ```

use mzr::oracle::eta_zeta;
use mzr::{bernoulli, riemann_zeta, riemann_zeta_with, EulerMaclaurinConfig};

fn main() -> mzr::Result<()> {
    println!(
        "{:>6}  {:>22}  {:>22}  {:>9}",
        "s", "euler-maclaurin", "eta series", "rel diff"
    );
    for s in [0.0, 0.25, 0.5, 0.75, 1.5, 2.0, 3.0, 4.0, 10.0, 40.0] {
        let em = riemann_zeta(s)?;
        let eta = eta_zeta(s);
        println!(
            "{s:>6}  {em:>22.16}  {eta:>22.16}  {:>9.1e}",
            ((em - eta) / eta).abs()
        );
    }

    // tuning is explicit when needed
    let config = EulerMaclaurinConfig::adaptive(2.0);
    let short = EulerMaclaurinConfig {
        direct_terms: 5,
        correction_terms: 3,
        ..config
    };
    println!(
        "\nζ(2) with N = {}, M = {}: {}\nζ(2) with N = 5, M = 3:  {}",
        config.direct_terms,
        config.correction_terms,
        riemann_zeta_with(2.0, &config)?,
        riemann_zeta_with(2.0, &short)?
    );

    println!("\nB_12 = {}", bernoulli(12)?);
    if let Err(e) = riemann_zeta(1.0) {
        println!("ζ(1): {e}");
    }
    Ok(())
}
