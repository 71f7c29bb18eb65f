//! Integer primitives shared by the closed forms and the oracle.

use crate::error::{Result, SemigroupError};

/// Returns `(g, x, y)` with `g = gcd(a, b)` and `a*x + b*y = g`.
///
/// Both inputs must be positive.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    assert!(a >= 1 && b >= 1, "extended_gcd needs positive inputs");
    let (mut old_r, mut r) = (a, b);
    let (mut old_x, mut x) = (1i64, 0i64);
    let (mut old_y, mut y) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    (old_r, old_x, old_y)
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Least nonnegative residue of `x` modulo `m > 0`.
pub fn modulo(x: i64, m: i64) -> i64 {
    x.rem_euclid(m)
}

pub(crate) fn check_generator(g: i64) -> Result<i64> {
    if g <= 0 {
        Err(SemigroupError::NonPositive(g))
    } else if g >= crate::error::MAX_GENERATOR {
        Err(SemigroupError::TooLarge(g))
    } else {
        Ok(g)
    }
}

pub(crate) fn mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(SemigroupError::Overflow(what))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_9_13() {
        let (g, x, y) = extended_gcd(9, 13);
        assert_eq!(g, 1);
        assert_eq!(9 * x + 13 * y, 1);
    }

    #[test]
    fn gcd_8_12() {
        assert_eq!(extended_gcd(8, 12).0, 4);
        assert_eq!(gcd(8, 12), 4);
    }

    #[test]
    fn identity_case() {
        assert_eq!(extended_gcd(1, 5), (1, 1, 0));
    }

    #[test]
    fn gcd_of_lists() {
        assert_eq!(gcd_all(&[6, 10, 15]), 1);
        assert_eq!(gcd_all(&[4, 6, 8]), 2);
        assert_eq!(gcd_all(&[7]), 7);
    }

    #[test]
    fn bezout_holds_on_grid() {
        for a in 1..80 {
            for b in 1..80 {
                let (g, x, y) = extended_gcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(a * x + b * y, g, "({a}, {b})");
            }
        }
    }
}
