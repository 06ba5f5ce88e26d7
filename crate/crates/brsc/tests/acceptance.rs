//! Acceptance run: one PASS/FAIL line per criterion, followed by the
//! individual checks of any criterion that did not pass.
//!
//! Checks listed in `KNOWN_RED` are reported as failures but do not fail the
//! run; each has a computed counterexample recorded next to it.

use std::process::ExitCode;
use std::time::Instant;

use brsc::reproduce::{self, Options};

/// (criterion, check name, reason)
const KNOWN_RED: &[(usize, &str, &str)] = &[(
    9,
    "Rhodes Z2, n = 3: dim J(T(H_3)) >= 3",
    "T(H_3) equals the flats at n = 3; {(1,1,2),(2,1,3)} plus (1,1,3) is a balanced triangle",
)];

fn main() -> ExitCode {
    let opts = Options::default();
    let mut unexpected = 0;
    for s in reproduce::sections() {
        let Some(k) = s.criterion else { continue };
        let t = Instant::now();
        let checks = match (s.run)(&opts) {
            Ok(c) => c,
            Err(e) => {
                println!("FAIL {k:>2} {}: error: {e}", s.title);
                unexpected += 1;
                continue;
            }
        };
        let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        let status = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} {k:>2} {} ({} checks, {:.1?})", s.title, checks.len(), t.elapsed());
        for c in failed {
            match KNOWN_RED.iter().find(|r| r.0 == k && r.1 == c.name) {
                Some(r) => println!("       known: {} [{}] {}", c.name, c.detail, r.2),
                None => {
                    println!("       failed: {} [{}]", c.name, c.detail);
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
