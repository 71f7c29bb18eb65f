//! Closed-form isolated gaps, checked against the brute-force scan.

use std::error::Error;

use semigap::{
    isolated_count, isolated_gaps, min_isolated_gap, oracle_isolated_gaps, PairSemigroup,
};

pub fn run() -> Result<(), Box<dyn Error>> {
    for (a, b) in [(9, 13), (8, 13), (7, 11), (7, 16), (2, 3)] {
        let s = PairSemigroup::new(a, b)?;
        let d = s.dls();
        let profile = isolated_gaps(&s);
        println!(
            "{s}: (u, v) = ({}, {}), #I = |uv| = {}, h = {}",
            d.u,
            d.v,
            isolated_count(&s),
            min_isolated_gap(&s)
        );
        println!("  I(S) = {:?}", profile.gaps);
        let oracle = oracle_isolated_gaps(&[a, b])?;
        assert_eq!(oracle.isolated_gaps, profile.gaps);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
