//! Runs the self-check suites and prints one line per check.
//!
//! ```text
//! cargo run --release --example verify -- kernel
//! ```

use mzr::verify::{hard_failure, run, Suite};

fn main() {
    let suite: Suite = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("suite name"))
        .unwrap_or(Suite::All);
    let checks = run(suite);
    for c in &checks {
        let tag = match (c.pass, c.hard) {
            (true, _) => "ok  ",
            (false, true) => "FAIL",
            (false, false) => "note",
        };
        println!("{tag} {:?}: {} {}", c.suite, c.name, c.detail);
    }
    if hard_failure(&checks) {
        std::process::exit(1);
    }
}
