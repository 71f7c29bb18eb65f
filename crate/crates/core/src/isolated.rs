//! Closed forms for the isolated gaps of `<a, b>`.
//!
//! With `(u, v)` the definitely least solution of `a*x + b*y = 1` and
//! `F = ab - a - b`, the isolated gaps are exactly
//!
//! ```text
//! h + i*b + j*a,   0 <= i < |v|,  0 <= j < |u|,   h = F - (|u| - 1)a - (|v| - 1)b
//! ```
//!
//! arranged as a `|v| x |u|` matrix whose rows are the residue classes modulo
//! `a` that contain isolated gaps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SemigroupError};
use crate::generic::GenericSemigroup;
use crate::pair::PairSemigroup;

/// Number of isolated gaps, `|u*v|`.
pub fn isolated_count(s: &PairSemigroup) -> i64 {
    let d = s.dls();
    d.abs_u() * d.abs_v()
}

/// Smallest isolated gap `h = F - (|u| - 1)a - (|v| - 1)b`.
pub fn min_isolated_gap(s: &PairSemigroup) -> i64 {
    let d = s.dls();
    s.frobenius() - (d.abs_u() - 1) * s.a() - (d.abs_v() - 1) * s.b()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedGapProfile {
    pub semigroup: PairSemigroup,
    pub count: i64,
    pub h: i64,
    pub gaps: Vec<i64>,
}

pub fn isolated_gaps(s: &PairSemigroup) -> IsolatedGapProfile {
    let mut gaps = gap_matrix(s).into_entries();
    gaps.sort_unstable();
    IsolatedGapProfile {
        semigroup: *s,
        count: isolated_count(s),
        h: min_isolated_gap(s),
        gaps,
    }
}

/// The `|v| x |u|` matrix `L(S)` of isolated gaps.
///
/// Stored row-major and 0-based. [`GapMatrix::entry`] and
/// [`GapMatrix::corollary_entry`] take the 1-based `(i, j)` of the
/// mathematical convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

impl GapMatrix {
    /// `h + (i - 1)b + (j - 1)a`.
    pub fn entry_rule(s: &PairSemigroup, i: i64, j: i64) -> i64 {
        min_isolated_gap(s) + (i - 1) * s.b() + (j - 1) * s.a()
    }

    /// `F - (|u| - j)a - (|v| - i)b`.
    pub fn corollary_rule(s: &PairSemigroup, i: i64, j: i64) -> i64 {
        let d = s.dls();
        s.frobenius() - (d.abs_u() - j) * s.a() - (d.abs_v() - i) * s.b()
    }

    fn build(s: &PairSemigroup, rule: fn(&PairSemigroup, i64, i64) -> i64) -> Self {
        let d = s.dls();
        let (rows, cols) = (d.abs_v(), d.abs_u());
        let entries = (1..=rows)
            .map(|i| (1..=cols).map(|j| rule(s, i, j)).collect())
            .collect();
        Self {
            rows: rows as usize,
            cols: cols as usize,
            entries,
        }
    }

    pub fn from_corollary(s: &PairSemigroup) -> Self {
        Self::build(s, Self::corollary_rule)
    }

    /// 1-based access.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &x)| (r, c, x)))
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries.into_iter().flatten().collect()
    }
}

pub fn gap_matrix(s: &PairSemigroup) -> GapMatrix {
    GapMatrix::build(s, GapMatrix::entry_rule)
}

/// Isolated gaps grouped by residue modulo `modulus`; empty classes omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePartition {
    pub modulus: i64,
    pub blocks: BTreeMap<i64, Vec<i64>>,
}

impl ResiduePartition {
    /// Smallest element of each block.
    pub fn minima(&self) -> BTreeMap<i64, i64> {
        self.blocks
            .iter()
            .map(|(&r, block)| (r, block[0]))
            .collect()
    }

    pub fn is_uniform(&self) -> bool {
        let mut sizes = self.blocks.values().map(Vec::len);
        match sizes.next() {
            Some(first) => sizes.all(|n| n == first),
            None => true,
        }
    }
}

/// Partitions `I(S)` by residue modulo `m`, where `m` is a nonzero member.
pub fn residue_partition(s: &PairSemigroup, m: i64) -> Result<ResiduePartition> {
    if m <= 0 || !s.contains(m) {
        return Err(SemigroupError::NotMember(m));
    }
    let partition = group_by_residue(&isolated_gaps(s).gaps, m);
    assert!(
        !partition.blocks.contains_key(&0),
        "an isolated gap is a multiple of the member {m}"
    );
    if m == s.a() {
        let d = s.dls();
        assert_eq!(partition.blocks.len() as i64, d.abs_v());
        assert!(partition
            .blocks
            .values()
            .all(|b| b.len() as i64 == d.abs_u()));
    }
    Ok(partition)
}

pub(crate) fn group_by_residue(gaps: &[i64], m: i64) -> ResiduePartition {
    let mut blocks: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &g in gaps {
        blocks.entry(g % m).or_default().push(g);
    }
    ResiduePartition { modulus: m, blocks }
}

/// Minimal isolated gaps modulo `a`: `h, h + b, ..., h + (|v| - 1)b`.
pub fn minimal_isolated_gaps(s: &PairSemigroup) -> Vec<i64> {
    let h = min_isolated_gap(s);
    (0..s.dls().abs_v()).map(|k| h + k * s.b()).collect()
}

/// `T(S)`: members `t < F(S)` with `t - 1` and `t + 1` both gaps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSet {
    pub semigroup: PairSemigroup,
    pub elements: Vec<i64>,
}

impl DualSet {
    pub fn satisfies_predicate(&self, t: i64) -> bool {
        let s = &self.semigroup;
        s.contains(t) && t < s.frobenius() && !s.contains(t - 1) && !s.contains(t + 1)
    }
}

/// Builds `T(S)` as the image of `I(S)` under `x -> F(S) - x`.
pub fn dual_set(s: &PairSemigroup) -> DualSet {
    let f = s.frobenius();
    let mut elements: Vec<i64> = isolated_gaps(s).gaps.iter().map(|g| f - g).collect();
    elements.sort_unstable();
    let dual = DualSet {
        semigroup: *s,
        elements,
    };
    debug_assert!(dual.elements.iter().all(|&t| dual.satisfies_predicate(t)));
    dual
}

/// Brute-force perfectness: no gap has both neighbours in the semigroup.
pub fn is_perfect(s: &GenericSemigroup) -> bool {
    s.isolated_gaps().is_empty()
}

/// `<a, b, h>` with `h` the smallest isolated gap of `<a, b>`.
pub fn smith_extension(s: &PairSemigroup) -> Result<GenericSemigroup> {
    GenericSemigroup::new(&[s.a(), s.b(), min_isolated_gap(s)])
}

/// `(h mod a, h mod b)` in the symmetric convention (`a - 1` reads as `-1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ResidueSignature {
    /// `h = 1`.
    UnitGap,
    Residues {
        mod_a: i64,
        mod_b: i64,
    },
}

impl ResidueSignature {
    /// Either `h = 1` or the pair is `(1, -1)` or `(-1, 1)`.
    pub fn is_allowed(&self) -> bool {
        matches!(
            self,
            ResidueSignature::UnitGap
                | ResidueSignature::Residues {
                    mod_a: 1,
                    mod_b: -1
                }
                | ResidueSignature::Residues {
                    mod_a: -1,
                    mod_b: 1
                }
        )
    }
}

pub fn h_residue_signature(s: &PairSemigroup) -> ResidueSignature {
    let h = min_isolated_gap(s);
    if h == 1 {
        return ResidueSignature::UnitGap;
    }
    let symmetric = |m: i64| {
        let r = h.rem_euclid(m);
        if r == m - 1 {
            -1
        } else {
            r
        }
    };
    ResidueSignature::Residues {
        mod_a: symmetric(s.a()),
        mod_b: symmetric(s.b()),
    }
}
