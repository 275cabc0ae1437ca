//! Writes a `s,value` CSV of `ζ_r` on a uniform grid, skipping the guard gaps
//! around the poles, for an external plotter.
//!
//! ```text
//! cargo run --release --example plot_csv -- 6 zeta6.csv
//! ```

use std::path::PathBuf;

use mzr::PlotSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let r: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let out: PathBuf = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join(format!("zeta{r}.csv")));

    let series = PlotSeries::sample(r, 0.05, 0.999, 4096)?;
    series.write_csv(&out, Some(&format!("zeta_{r} on [0.05, 0.999]")))?;
    println!(
        "{} samples, {} gaps, {} sign changes -> {}",
        series.samples.len(),
        series.excluded.len(),
        series.sign_changes(),
        out.display()
    );
    Ok(())
}
