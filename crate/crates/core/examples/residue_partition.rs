//! Isolated gaps grouped by residue class modulo a member of the semigroup.

use std::error::Error;

use semigap::{residue_partition, PairSemigroup};

pub fn run() -> Result<(), Box<dyn Error>> {
    let s = PairSemigroup::new(7, 16)?;
    for m in [7, 16, 23] {
        let p = residue_partition(&s, m)?;
        println!(
            "{s} mod {m}: {} blocks, uniform {}",
            p.blocks.len(),
            p.is_uniform()
        );
        for (r, block) in &p.blocks {
            println!("  I_{{{r},{m}}} = {block:?}");
        }
    }
    // 10 is a gap, so it cannot be used as a modulus
    assert!(residue_partition(&s, 10).is_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
