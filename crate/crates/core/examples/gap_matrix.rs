//! The `|v| x |u|` matrix of isolated gaps, built from the smallest isolated
//! gap and, independently, from the Frobenius number.

use std::error::Error;

use semigap::report::matrix_table;
use semigap::{gap_matrix, GapMatrix, PairSemigroup};

pub fn run() -> Result<(), Box<dyn Error>> {
    for (a, b) in [(7, 16), (9, 13), (2, 3)] {
        let s = PairSemigroup::new(a, b)?;
        let m = gap_matrix(&s);
        println!("L{s}: {} x {}", m.rows, m.cols);
        print!("{}", matrix_table(&m.entries));
        assert_eq!(m, GapMatrix::from_corollary(&s));
        assert_eq!(m.entry(m.rows, m.cols), s.frobenius());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
