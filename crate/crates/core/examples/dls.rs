//! The definitely least solution of `a*x + b*y = 1`.
//!
//! `cargo run --example dls -- 9 13`

use std::error::Error;

use semigap::{dls, extended_gcd, oracle_dls};

pub fn run(a: i64, b: i64) -> Result<(), Box<dyn Error>> {
    let (g, x, y) = extended_gcd(a, b);
    println!("extended gcd: gcd({a}, {b}) = {g} = {a}*({x}) + {b}*({y})");

    let d = dls(a, b)?;
    println!("d.l.s.: u = {}, v = {}", d.u, d.v);
    println!("  |u| = {} <= b/2 = {}", d.abs_u(), b as f64 / 2.0);
    println!("  |v| = {} <= a/2 = {}", d.abs_v(), a as f64 / 2.0);

    let searched = oracle_dls(a, b)?;
    assert_eq!(searched, d);
    println!("box search finds the same single solution");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    match args.as_slice() {
        [a, b] => run(*a, *b),
        _ => {
            for (a, b) in [(9, 13), (8, 13), (7, 11), (7, 16)] {
                run(a, b)?;
                println!();
            }
            Ok(())
        }
    }
}
