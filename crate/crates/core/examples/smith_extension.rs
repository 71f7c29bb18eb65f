//! Adding the smallest isolated gap as a third generator gives a perfect
//! semigroup; the smallest gap sits next to a multiple of each generator.

use std::error::Error;

use semigap::{h_residue_signature, is_perfect, smith_extension, PairSemigroup};

pub fn run() -> Result<(), Box<dyn Error>> {
    for (a, b) in [(9, 13), (8, 13), (7, 16), (7, 11), (2, 3)] {
        let s = PairSemigroup::new(a, b)?;
        let ext = smith_extension(&s)?;
        let sig = h_residue_signature(&s);
        println!(
            "{s} -> <{:?}> perfect {}, signature {sig:?}",
            ext.generators(),
            is_perfect(&ext)
        );
        assert!(is_perfect(&ext) && sig.is_allowed());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
