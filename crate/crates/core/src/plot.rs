//! Uniformly sampled `ζ_r` series for external plotting.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::format::sig17;
use crate::multizeta::{multizeta, MAX_FOLD};
use crate::zeros::exclusion_radius;

/// Samples of `ζ_r` with the pole neighbourhoods left out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotSeries {
    pub r: u32,
    /// `(s, ζ_r(s))`, strictly increasing in `s`.
    pub samples: Vec<(f64, f64)>,
    /// Closed gaps `[lo, hi]` around poles that intersect the sampled range.
    pub excluded: Vec<(f64, f64)>,
}

/// Guard gap around the pole at `1/k`.
pub fn pole_gap(k: u32) -> (f64, f64) {
    let pole = 1.0 / k as f64;
    let left = exclusion_radius(k + 1);
    let right = exclusion_radius(k.max(2));
    (pole - left, pole + right)
}

impl PlotSeries {
    /// `points` uniform abscissas on `[from, to]`, skipping guard gaps.
    pub fn sample(r: u32, from: f64, to: f64, points: usize) -> Result<Self> {
        check_range("r", r as i64, 1, MAX_FOLD as i64)?;
        check_range("points", points as i64, 2, i64::MAX)?;
        if !(from > 0.0 && from < to && to.is_finite()) {
            return Err(Error::OutOfDomain {
                value: from,
                what: "plot range needs 0 < from < to",
            });
        }
        let excluded: Vec<(f64, f64)> = (1..=r)
            .rev()
            .map(pole_gap)
            .filter(|&(lo, hi)| hi >= from && lo <= to)
            .collect();
        let step = (to - from) / (points - 1) as f64;
        let mut samples = Vec::with_capacity(points);
        for i in 0..points {
            let s = if i + 1 == points {
                to
            } else {
                from + step * i as f64
            };
            if excluded.iter().any(|&(lo, hi)| s >= lo && s <= hi) {
                continue;
            }
            samples.push((s, multizeta(r, s)?));
        }
        Ok(Self {
            r,
            samples,
            excluded,
        })
    }

    /// Sign changes between consecutive samples not separated by a gap.
    pub fn sign_changes(&self) -> usize {
        self.samples
            .windows(2)
            .filter(|w| {
                let (s0, v0) = w[0];
                let (s1, v1) = w[1];
                let across_gap = self.excluded.iter().any(|&(lo, hi)| s0 < lo && s1 > hi);
                !across_gap && ((v0 < 0.0 && v1 > 0.0) || (v0 > 0.0 && v1 < 0.0))
            })
            .count()
    }

    /// CSV text: optional `# ...` header line, then `s,value`, then one row
    /// per sample with 17 significant digits, LF line endings.
    pub fn to_csv(&self, header: Option<&str>) -> String {
        let mut out = String::with_capacity(40 * (self.samples.len() + 2));
        if let Some(h) = header {
            let _ = writeln!(out, "# {h}");
        }
        out.push_str("s,value\n");
        for &(s, v) in &self.samples {
            let _ = writeln!(out, "{},{}", sig17(s), sig17(v));
        }
        out
    }

    pub fn write_csv(&self, path: &Path, header: Option<&str>) -> io::Result<()> {
        std::fs::write(path, self.to_csv(header))
    }

    /// Parses the CSV produced by [`PlotSeries::to_csv`] back into `(s, value)` rows.
    pub fn parse_csv(text: &str) -> Option<Vec<(f64, f64)>> {
        let mut lines = text.lines().filter(|l| !l.starts_with('#'));
        if lines.next()? != "s,value" {
            return None;
        }
        lines
            .map(|l| {
                let (a, b) = l.split_once(',')?;
                Some((a.parse().ok()?, b.parse().ok()?))
            })
            .collect()
    }
}
