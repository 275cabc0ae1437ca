//! Poles `1/k` of `ζ_r`, their orders `⌊r/k⌋` and the leading constants
//! `C_r(k)`, computed in closed form, by recursion and by extrapolating the
//! evaluator towards each pole.
//!
//! ```text
//! cargo run --example poles -- 6
//! ```

use mzr::asymptotics::{pole_side_behavior, ExtrapolationConfig};
use mzr::{coefficient_numeric, coefficient_recursive, periodicity_check, poles};

fn main() -> mzr::Result<()> {
    let r: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);

    println!(
        " k  order  {:>20}  {:>20}  {:>20}  sides",
        "closed form", "recursive", "numeric"
    );
    for p in poles(r)? {
        let recursive = coefficient_recursive(r, p.k)?;
        let numeric = if r <= 10 {
            format!("{:>20.12e}", coefficient_numeric(r, p.k)?)
        } else {
            format!("{:>20}", "-")
        };
        let sides = pole_side_behavior(r, p.k, 1e-4)?;
        println!(
            "{:>2}  {:>5}  {:>20.12e}  {:>20.12e}  {numeric}  {:+}/{:+}",
            p.k, p.order, p.constant, recursive, sides.left_sign, sides.right_sign
        );
    }

    let config = ExtrapolationConfig::default();
    println!(
        "\nextrapolation: depth {}, first offset {:e}",
        config.depth, config.initial_offset
    );
    for k in 2..=4 {
        println!(
            "C_(kq+l)(k) / C_(k(q+1)+l)(k) = (-1)^(k-1) k (q+1) for k = {k}: {}",
            periodicity_check(k, 4)?
        );
    }
    Ok(())
}
