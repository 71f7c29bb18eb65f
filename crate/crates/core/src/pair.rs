//! Two-generator semigroups `<a, b>` and the definitely least solution of
//! `a*x + b*y = 1`.

use serde::{Deserialize, Serialize};

use crate::arith::{self, check_generator, extended_gcd};
use crate::error::{Result, SemigroupError};

/// The unique solution `(u, v)` of `a*u + b*v = 1` with `|u| <= b/2` and
/// `|v| <= a/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DlsSolution {
    pub u: i64,
    pub v: i64,
}

impl DlsSolution {
    pub fn abs_u(&self) -> i64 {
        self.u.abs()
    }

    pub fn abs_v(&self) -> i64 {
        self.v.abs()
    }
}

/// Computes the definitely least solution of `a*x + b*y = 1`.
///
/// `u` is taken as the representative of `a^-1 mod b` in `(-b/2, b/2]`, and
/// `v` follows from the equation.
pub fn dls(a: i64, b: i64) -> Result<DlsSolution> {
    validate_pair(a, b)?;
    let (_, x, _) = extended_gcd(a, b);
    let mut u = arith::modulo(x, b);
    // 2u > b  <=>  u > b/2
    if 2 * u > b {
        u -= b;
    }
    let au = arith::mul(a, u, "a*u")?;
    let v = (1 - au) / b;
    debug_assert_eq!(au + b * v, 1);
    assert!(2 * u.abs() < b, "|u| = b/2 cannot occur for b > 2");
    assert!(2 * v.abs() <= a, "d.l.s. bound |v| <= a/2 violated");
    Ok(DlsSolution { u, v })
}

fn validate_pair(a: i64, b: i64) -> Result<()> {
    check_generator(a)?;
    check_generator(b)?;
    if a <= 1 || a >= b {
        return Err(SemigroupError::BadOrder { a, b });
    }
    let g = arith::gcd(a, b);
    if g != 1 {
        return Err(SemigroupError::NotCoprime { a, b, gcd: g });
    }
    Ok(())
}

/// A numerical semigroup `<a, b>` with `1 < a < b` and `gcd(a, b) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairSemigroup {
    a: i64,
    b: i64,
    dls: DlsSolution,
    frobenius: i64,
}

impl PairSemigroup {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let dls = dls(a, b)?;
        let frobenius = arith::mul(a, b, "a*b")? - a - b;
        Ok(Self {
            a,
            b,
            dls,
            frobenius,
        })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn dls(&self) -> DlsSolution {
        self.dls
    }

    /// `F(<a, b>) = ab - a - b`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn generators(&self) -> [i64; 2] {
        [self.a, self.b]
    }

    /// Membership test by residue arithmetic.
    ///
    /// Writing `x = l*a + k*b`, the coefficient `k` is determined modulo `a`
    /// by `k = x * b^-1 = x * v (mod a)`. `x` is a member exactly when the
    /// least such `k` leaves a nonnegative remainder.
    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x > self.frobenius {
            return true;
        }
        let k = (i128::from(x) * i128::from(self.dls.v)).rem_euclid(i128::from(self.a));
        k * i128::from(self.b) <= i128::from(x)
    }

    /// All gaps of the semigroup in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Number of gaps, `(a - 1)(b - 1) / 2`.
    pub fn genus(&self) -> i64 {
        (self.a - 1) * (self.b - 1) / 2
    }
}

impl std::fmt::Display for PairSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{}, {}>", self.a, self.b)
    }
}

/// Membership in `<a, b>` for arbitrary `(a, b)`; same as
/// [`PairSemigroup::contains`] once the pair is validated.
pub fn pair_membership(s: &PairSemigroup, x: i64) -> bool {
    s.contains(x)
}

pub fn pair_gaps(s: &PairSemigroup) -> Vec<i64> {
    s.gaps()
}
