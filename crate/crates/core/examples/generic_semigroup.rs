//! Semigroups with any number of generators: Frobenius number, minimal
//! generating set, Apéry sets and symmetry.

use std::error::Error;

use semigap::{apery_set, generic_semigroup, is_symmetric};

pub fn run() -> Result<(), Box<dyn Error>> {
    for gens in [&[9, 13][..], &[9, 13, 22], &[9, 13, 64], &[3, 4, 5], &[1]] {
        let s = generic_semigroup(gens)?;
        println!(
            "<{gens:?}>: F = {}, minimal generators {:?}, embedding dimension {}, symmetric {}",
            s.frobenius(),
            s.minimal_generators(),
            s.embedding_dimension(),
            is_symmetric(&s),
        );
        if s.multiplicity() > 1 {
            println!(
                "  Ap(S, {}) = {:?}",
                s.multiplicity(),
                apery_set(&s, s.multiplicity())?
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
