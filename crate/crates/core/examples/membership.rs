//! Membership, gaps and the Frobenius number of `<a, b>`.

use std::error::Error;

use semigap::{pair_gaps, pair_membership, PairSemigroup};

pub fn run() -> Result<(), Box<dyn Error>> {
    let s = PairSemigroup::new(9, 13)?;
    for x in [22, 95, 96] {
        println!("{x} in {s}: {}", pair_membership(&s, x));
    }
    let gaps = pair_gaps(&s);
    println!("{} gaps, genus (a-1)(b-1)/2 = {}", gaps.len(), s.genus());
    println!(
        "F{s} = {} = max gap {}",
        s.frobenius(),
        gaps.last().unwrap()
    );
    println!("gaps: {gaps:?}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
