//! Local minima and maxima of `ζ_r` inside each inter-asymptotic interval.
//!
//! ```text
//! cargo run --release --example extrema -- 8
//! ```

use mzr::zeros::find_all_extrema;
use mzr::ScanConfig;

fn main() -> mzr::Result<()> {
    let r: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    for e in find_all_extrema(r, &ScanConfig::default())? {
        println!(
            "k = {:>2}  {:<8}  s = {:.9}  ζ_{r}(s) = {:+.9}",
            e.k,
            format!("{:?}", e.kind).to_lowercase(),
            e.abscissa,
            e.value
        );
    }
    Ok(())
}
