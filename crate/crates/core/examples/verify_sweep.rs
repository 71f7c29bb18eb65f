//! Replays every closed form against the oracle over all coprime pairs.
//!
//! `cargo run --release --example verify_sweep -- 100`

use std::error::Error;

use semigap::{verify, Property};

pub fn run(max_b: i64) -> Result<(), Box<dyn Error>> {
    let summary = verify(max_b, 4)?;
    for p in Property::ALL {
        println!("{p:<32} failures {}", summary.failures_of(p));
    }
    println!(
        "{} pairs, {} checks, passed {}",
        summary.pairs,
        summary.checks,
        summary.passed()
    );
    if !summary.passed() {
        return Err(format!("{} violations", summary.failures.len()).into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let max_b = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(40);
    run(max_b)
}
