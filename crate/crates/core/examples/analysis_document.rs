//! One pair rendered as JSON, CSV and a text table.

use std::error::Error;

use semigap::{AnalysisDocument, Format, PairSemigroup};

pub fn run() -> Result<(), Box<dyn Error>> {
    let doc = AnalysisDocument::new(&PairSemigroup::new(9, 13)?)?;
    for format in [Format::Json, Format::Csv, Format::Table] {
        println!("--- {format:?}");
        print!("{}", doc.render(format));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
