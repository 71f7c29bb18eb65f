//! `T(S)`, the members whose two neighbours are gaps, and its bijection with
//! the isolated gaps.

use std::error::Error;

use semigap::{dual_set, isolated_gaps, PairSemigroup};

pub fn run() -> Result<(), Box<dyn Error>> {
    for (a, b) in [(9, 13), (7, 11), (2, 3)] {
        let s = PairSemigroup::new(a, b)?;
        let t = dual_set(&s);
        let f = s.frobenius();
        println!("T{s} = {:?}", t.elements);
        let mut image: Vec<i64> = t.elements.iter().map(|x| f - x).collect();
        image.sort_unstable();
        println!("  F - T = {image:?}");
        assert_eq!(image, isolated_gaps(&s).gaps);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
