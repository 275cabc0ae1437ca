//! Command-line front end for the `mzr` library.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain or pole error,
//! 3 unwritable output, 4 non-convergence, 5 unstable zero count,
//! 6 hard failure in `verify`.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use mzr::asymptotics::{coefficient_numeric, poles};
use mzr::census::census_report;
use mzr::format::sig17;
use mzr::verify::{self, Suite};
use mzr::zeros::{find_all_extrema, scan_all, ScanConfig, ZeroRecord};
use mzr::{multizeta, Error, PlotSeries, PoleSpec};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_NONCONVERGENCE: u8 = 4;
const EXIT_UNSTABLE: u8 = 5;
const EXIT_VERIFY: u8 = 6;

#[derive(Parser)]
#[command(
    name = "mzr",
    version,
    about = "Multiple zeta-functions ζ_r(s) on the real axis"
)]
struct Cli {
    /// Omit the `# mzr <version>` line from CSV output.
    #[arg(long, global = true)]
    no_header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ζ_r(s) with 17 significant digits.
    Eval {
        #[arg(long)]
        r: u32,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
    },
    /// Sample ζ_r on a uniform grid and write `s,value` CSV.
    Plot {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 1024)]
        points: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Real zeros between consecutive asymptotes, as JSON.
    Zeros {
        #[arg(long)]
        r: u32,
        /// Restrict to the interval (1/k, 1/(k-1)).
        #[arg(long)]
        k: Option<u32>,
        /// Final bracket width.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Local extrema between consecutive asymptotes, as JSON.
    Extrema {
        #[arg(long)]
        r: u32,
    },
    /// Pole locations, orders and leading constants, as JSON.
    Poles {
        #[arg(long)]
        r: u32,
        /// Also extract each constant numerically and compare.
        #[arg(long)]
        numeric_check: bool,
    },
    /// Zero census for r = 2..=r_max, as JSON.
    Census {
        #[arg(long)]
        r_max: u32,
    },
    /// Run the self-check suites, as JSON.
    Verify {
        /// kernel, multizeta, asymptotics, zeros, census or all.
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Serialize)]
struct PoleCheck {
    #[serde(flatten)]
    pole: PoleSpec,
    numeric: f64,
    agrees: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonConvergence(_) => EXIT_NONCONVERGENCE,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(f) = configure_threads() {
        eprintln!("mzr: {}", f.message);
        return ExitCode::from(f.code);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mzr: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("MZR_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        fail(
            EXIT_USAGE,
            format!("MZR_THREADS must be a positive integer, got `{raw}`"),
        )
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| fail(EXIT_USAGE, e.to_string()))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialisable report")
    );
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { r, s } => {
            println!("{}", sig17(multizeta(r, s)?));
        }
        Command::Plot {
            r,
            from,
            to,
            points,
            out,
        } => {
            let series = PlotSeries::sample(r, from, to, points)?;
            let header = format!("mzr {}", env!("CARGO_PKG_VERSION"));
            let header = (!cli.no_header).then_some(header.as_str());
            series
                .write_csv(&out, header)
                .map_err(|e| fail(EXIT_IO, format!("cannot write {}: {e}", out.display())))?;
        }
        Command::Zeros { r, k, tol } => {
            if !(tol > 0.0 && tol < 1e-2) {
                return Err(fail(
                    EXIT_USAGE,
                    format!("--tol {tol} must lie in (0, 1e-2)"),
                ));
            }
            let config = ScanConfig {
                xtol: tol,
                ..ScanConfig::default()
            };
            let reports = match k {
                Some(k) => vec![mzr::zeros::scan_interval_with(r, k, &config)?],
                None => scan_all(r, &config)?,
            };
            let zeros: Vec<ZeroRecord> = reports.iter().flat_map(|rep| rep.zeros.clone()).collect();
            print_json(&zeros);
            for rep in &reports {
                for s in &rep.tangency_suspects {
                    eprintln!(
                        "mzr: suspected tangency of ζ_{r} near s = {s} (interval k = {})",
                        rep.k
                    );
                }
            }
            if let Some(rep) = reports.iter().find(|rep| !rep.stable) {
                return Err(fail(
                    EXIT_UNSTABLE,
                    format!("unstable count in interval k = {}: {:?}", rep.k, rep.counts),
                ));
            }
        }
        Command::Extrema { r } => {
            print_json(&find_all_extrema(r, &ScanConfig::default())?);
        }
        Command::Poles { r, numeric_check } => {
            let specs = poles(r)?;
            if !numeric_check {
                print_json(&specs);
                return Ok(());
            }
            let checks = specs
                .into_iter()
                .map(|pole| {
                    let numeric = coefficient_numeric(pole.r, pole.k)?;
                    let agrees = ((numeric - pole.constant) / pole.constant).abs() <= 1e-2;
                    Ok(PoleCheck {
                        pole,
                        numeric,
                        agrees,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            print_json(&checks);
            if let Some(bad) = checks.iter().find(|c| !c.agrees) {
                return Err(fail(
                    EXIT_NONCONVERGENCE,
                    format!(
                        "numeric constant {} disagrees with {} at k = {}",
                        bad.numeric, bad.pole.constant, bad.pole.k
                    ),
                ));
            }
        }
        Command::Census { r_max } => {
            let mut out = Vec::new();
            let mut unstable = None;
            for r in 2..=r_max {
                let reports = scan_all(r, &ScanConfig::default())?;
                let counts: BTreeMap<u32, u64> = reports
                    .iter()
                    .map(|rep| (rep.k, rep.zeros.len() as u64))
                    .collect();
                if let Some(rep) = reports.iter().find(|rep| !rep.stable) {
                    unstable.get_or_insert((r, rep.k));
                }
                out.push(census_report(r, &counts)?);
            }
            print_json(&out);
            for rep in &out {
                for c in rep.disagreements() {
                    eprintln!(
                        "mzr: r = {}, k = {}: found {} zeros, conjectured {}",
                        rep.r, c.k, c.empirical, c.conjectured
                    );
                }
            }
            if let Some((r, k)) = unstable {
                return Err(fail(
                    EXIT_UNSTABLE,
                    format!("unstable count for r = {r}, k = {k}"),
                ));
            }
        }
        Command::Verify { suite } => {
            let checks = verify::run(suite);
            print_json(&checks);
            if verify::hard_failure(&checks) {
                let failed: Vec<&str> = checks
                    .iter()
                    .filter(|c| c.hard && !c.pass)
                    .map(|c| c.name.as_str())
                    .collect();
                return Err(fail(
                    EXIT_VERIFY,
                    format!("hard failures: {}", failed.join(", ")),
                ));
            }
        }
    }
    Ok(())
}
