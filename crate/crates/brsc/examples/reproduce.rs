//! Runs reproduction sections by tag, or all of them, with timings.
//!
//! `cargo run --example reproduce -- sums going-up`

use std::time::Instant;

use brsc::reproduce::{self, Options};

fn main() -> brsc::Result<()> {
    let tags: Vec<String> = std::env::args().skip(1).collect();
    let chosen: Vec<&reproduce::Section> = if tags.is_empty() {
        reproduce::sections().iter().collect()
    } else {
        tags.iter().map(|t| reproduce::find(t)).collect::<brsc::Result<_>>()?
    };
    let mut failed = 0;
    for s in chosen {
        let t = Instant::now();
        let checks = (s.run)(&Options::default())?;
        for c in &checks {
            println!("  {} {}: {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.detail);
        }
        failed += checks.iter().filter(|c| !c.pass).count();
        println!("[{}] {} ({:.1?})", s.tag, s.title, t.elapsed());
    }
    std::process::exit(i32::from(failed > 0));
}
