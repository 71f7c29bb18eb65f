//! Naive reference computations.
//!
//! Nothing here calls into the closed-form modules; membership is rebuilt from
//! scratch for every query by forward closure over the generators.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Result, SemigroupError, MAX_TABLE_LEN};
use crate::pair::DlsSolution;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub generators: Vec<i64>,
    pub isolated_gaps: Vec<i64>,
    pub gap_set: Vec<i64>,
    pub frobenius: i64,
    pub is_perfect: bool,
}

/// `member[x]` for `0 <= x <= limit`.
fn closure(generators: &[i64], limit: i64) -> Vec<bool> {
    let mut member = vec![false; limit as usize + 1];
    member[0] = true;
    for x in 1..=limit {
        member[x as usize] = generators
            .iter()
            .any(|&g| g <= x && member[(x - g) as usize]);
    }
    member
}

fn checked_generators(generators: &[i64]) -> Result<(Vec<i64>, i64)> {
    if generators.is_empty() {
        return Err(SemigroupError::Empty);
    }
    if let Some(&g) = generators.iter().find(|&&g| g <= 0) {
        return Err(SemigroupError::NonPositive(g));
    }
    let g = arith::gcd_all(generators);
    if g != 1 {
        return Err(SemigroupError::GeneratorsNotCoprime {
            generators: generators.to_vec(),
            gcd: g,
        });
    }
    let mut sorted = generators.to_vec();
    sorted.sort_unstable();
    let bound = sorted[0]
        .checked_mul(sorted[sorted.len() - 1])
        .ok_or(SemigroupError::Overflow("oracle bound"))?;
    if bound > MAX_TABLE_LEN {
        return Err(SemigroupError::TableTooLarge(bound));
    }
    Ok((sorted, bound))
}

pub fn oracle_isolated_gaps(generators: &[i64]) -> Result<OracleReport> {
    let (generators, bound) = checked_generators(generators)?;
    // bound + 1 so that x + 1 is always inside the table
    let member = closure(&generators, bound + 1);
    let is_member = |x: i64| x >= 0 && member[x as usize];

    let gap_set: Vec<i64> = (1..=bound).filter(|&x| !is_member(x)).collect();
    let frobenius = gap_set.last().copied().unwrap_or(-1);
    let isolated_gaps: Vec<i64> = gap_set
        .iter()
        .copied()
        .filter(|&x| is_member(x - 1) && is_member(x + 1))
        .collect();
    Ok(OracleReport {
        generators,
        is_perfect: isolated_gaps.is_empty(),
        isolated_gaps,
        gap_set,
        frobenius,
    })
}

/// Exhaustive search of the box `|x| <= b/2`, `|y| <= a/2` for `ax + by = 1`.
/// Fails unless exactly one solution exists.
pub fn oracle_dls(a: i64, b: i64) -> Result<DlsSolution> {
    if a <= 1 || a >= b {
        return Err(SemigroupError::BadOrder { a, b });
    }
    let mut hits = Vec::new();
    for x in -(b / 2)..=(b / 2) {
        for y in -(a / 2)..=(a / 2) {
            if a * x + b * y == 1 {
                hits.push(DlsSolution { u: x, v: y });
            }
        }
    }
    match hits.as_slice() {
        [only] => Ok(*only),
        [] => Err(SemigroupError::Oracle(format!(
            "no solution of {a}x + {b}y = 1 in the box"
        ))),
        many => Err(SemigroupError::Oracle(format!(
            "{} solutions of {a}x + {b}y = 1 in the box",
            many.len()
        ))),
    }
}

/// `#T(<a, b>)` by scanning `[0, F)` for members whose neighbours are gaps.
#[allow(non_snake_case)]
pub fn oracle_count_T(a: i64, b: i64) -> Result<i64> {
    if a <= 1 || a >= b {
        return Err(SemigroupError::BadOrder { a, b });
    }
    let (_, bound) = checked_generators(&[a, b])?;
    let member = closure(&[a, b], bound + 1);
    let is_member = |x: i64| x >= 0 && member[x as usize];
    let frobenius = (0..=bound).rev().find(|&x| !is_member(x)).unwrap_or(-1);
    Ok((0..frobenius)
        .filter(|&s| is_member(s) && !is_member(s - 1) && !is_member(s + 1))
        .count() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isolated_9_13() {
        let r = oracle_isolated_gaps(&[9, 13]).unwrap();
        assert_eq!(r.isolated_gaps, vec![64, 73, 77, 82, 86, 95]);
        assert_eq!(r.frobenius, 95);
        assert_eq!(r.gap_set.len(), 48);
        assert!(!r.is_perfect);
    }

    #[test]
    fn isolated_7_16() {
        let r = oracle_isolated_gaps(&[7, 16]).unwrap();
        assert_eq!(r.isolated_gaps.len(), 21);
        assert_eq!(r.isolated_gaps.last(), Some(&89));
        assert_eq!(r.frobenius, 7 * 16 - 23);
    }

    #[test]
    fn isolated_2_3() {
        let r = oracle_isolated_gaps(&[3, 2]).unwrap();
        assert_eq!(r.isolated_gaps, vec![1]);
        assert_eq!(r.frobenius, 1);
        assert_eq!(r.generators, vec![2, 3]);
    }

    #[test]
    fn naturals_and_errors() {
        let r = oracle_isolated_gaps(&[1]).unwrap();
        assert_eq!(r.frobenius, -1);
        assert!(r.gap_set.is_empty() && r.is_perfect);
        assert!(matches!(
            oracle_isolated_gaps(&[4, 6]),
            Err(SemigroupError::GeneratorsNotCoprime { .. })
        ));
        assert_eq!(oracle_isolated_gaps(&[]), Err(SemigroupError::Empty));
    }

    #[test]
    fn report_invariants() {
        for gens in [&[9, 13][..], &[3, 5, 7], &[6, 10, 15], &[5, 8, 9, 12]] {
            let r = oracle_isolated_gaps(gens).unwrap();
            for &g in &r.isolated_gaps {
                assert!(r.gap_set.contains(&g));
                assert!(!r.gap_set.contains(&(g - 1)) && !r.gap_set.contains(&(g + 1)));
            }
            assert_eq!(r.frobenius, r.gap_set.last().copied().unwrap_or(-1));
        }
    }

    #[test]
    fn dls_by_search() {
        assert_eq!(oracle_dls(9, 13).unwrap(), DlsSolution { u: 3, v: -2 });
        assert_eq!(oracle_dls(7, 16).unwrap(), DlsSolution { u: 7, v: -3 });
        assert_eq!(oracle_dls(3, 4).unwrap(), DlsSolution { u: -1, v: 1 });
        assert!(matches!(oracle_dls(4, 6), Err(SemigroupError::Oracle(_))));
    }

    #[test]
    fn count_t() {
        assert_eq!(oracle_count_T(9, 13).unwrap(), 6);
        assert_eq!(oracle_count_T(2, 3).unwrap(), 1);
        assert_eq!(oracle_count_T(8, 13).unwrap(), 15);
    }
}
