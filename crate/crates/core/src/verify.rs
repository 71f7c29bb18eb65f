//! Sweep over coprime pairs comparing every closed form with the oracle.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Result, SemigroupError};
use crate::isolated::{self, GapMatrix};
use crate::oracle;
use crate::pair::{self, PairSemigroup};

/// Default upper bound on `b` for [`verify`].
pub const DEFAULT_MAX_B: i64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// Box search agrees with the extended-Euclid d.l.s. and finds exactly one solution.
    DlsMatchesOracle,
    /// `isolated_count = |uv| =` size of the brute-force set.
    CountIsUv,
    /// Closed-form `I(S)` equals the brute-force set.
    IsolatedSetMatchesOracle,
    MinIsSmallestIsolatedGap,
    /// `max I(S) = F(S)` and `F(S) ∈ I(S)`.
    FrobeniusIsMaxIsolatedGap,
    /// Brute-force `#T(S) = |uv|`.
    DualCountIsUv,
    /// Entry rule and corollary rule give the same matrix.
    MatrixRulesAgree,
    /// Mod `a`: `|v|` blocks, each `{h_i, h_i + a, ..., h_i + (|u| - 1)a}`.
    PartitionModAUniform,
    /// Block minima mod `a` are `h + kb`, `0 <= k < |v|`.
    MinimalIsolatedGaps,
    /// `x -> F(S) - x` maps `T(S)` (predicate scan) onto `I(S)`.
    DualBijection,
    /// Elements of `T(S)` are `l1*a + l2*b` with `l1 < |u|`, `l2 < |v|`.
    DualCoefficientsBounded,
    /// Preimages of each residue block are congruent modulo the member.
    DualBlocksCongruent,
    /// `<a, b, h>` has no isolated gaps.
    SmithExtensionPerfect,
    /// `h = 1` or `(h mod a, h mod b) ∈ {(1, -1), (-1, 1)}`.
    ResidueSignatureAllowed,
    /// For `x` in a block mod `a`, `x + a` is a member or in the same block.
    BlockSuccessor,
    /// First member of `x + na` (`n >= 1`) is a multiple of `b`.
    FirstMemberIsMultipleOfB,
}

impl Property {
    pub const ALL: [Property; 16] = [
        Property::DlsMatchesOracle,
        Property::CountIsUv,
        Property::IsolatedSetMatchesOracle,
        Property::MinIsSmallestIsolatedGap,
        Property::FrobeniusIsMaxIsolatedGap,
        Property::DualCountIsUv,
        Property::MatrixRulesAgree,
        Property::PartitionModAUniform,
        Property::MinimalIsolatedGaps,
        Property::DualBijection,
        Property::DualCoefficientsBounded,
        Property::DualBlocksCongruent,
        Property::SmithExtensionPerfect,
        Property::ResidueSignatureAllowed,
        Property::BlockSuccessor,
        Property::FirstMemberIsMultipleOfB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::DlsMatchesOracle => "dls_matches_oracle",
            Property::CountIsUv => "count_is_uv",
            Property::IsolatedSetMatchesOracle => "isolated_set_matches_oracle",
            Property::MinIsSmallestIsolatedGap => "min_is_smallest_isolated_gap",
            Property::FrobeniusIsMaxIsolatedGap => "frobenius_is_max_isolated_gap",
            Property::DualCountIsUv => "dual_count_is_uv",
            Property::MatrixRulesAgree => "matrix_rules_agree",
            Property::PartitionModAUniform => "partition_mod_a_uniform",
            Property::MinimalIsolatedGaps => "minimal_isolated_gaps",
            Property::DualBijection => "dual_bijection",
            Property::DualCoefficientsBounded => "dual_coefficients_bounded",
            Property::DualBlocksCongruent => "dual_blocks_congruent",
            Property::SmithExtensionPerfect => "smith_extension_perfect",
            Property::ResidueSignatureAllowed => "residue_signature_allowed",
            Property::BlockSuccessor => "block_successor",
            Property::FirstMemberIsMultipleOfB => "first_member_is_multiple_of_b",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub a: i64,
    pub b: i64,
    pub property: Property,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}, {}>: {} ({})",
            self.a, self.b, self.property, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub max_b: i64,
    pub pairs: usize,
    pub checks: usize,
    pub failures: Vec<Violation>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures_of(&self, property: Property) -> usize {
        self.failures
            .iter()
            .filter(|v| v.property == property)
            .count()
    }
}

/// All `(a, b)` with `1 < a < b <= max_b` and `gcd(a, b) = 1`, ordered by `b` then `a`.
pub fn coprime_pairs(max_b: i64) -> Vec<(i64, i64)> {
    (3..=max_b)
        .flat_map(|b| (2..b).filter(move |&a| gcd(a, b) == 1).map(move |a| (a, b)))
        .collect()
}

/// Runs every [`Property`] on every coprime pair with `b <= max_b`.
///
/// `workers <= 1` runs on the calling thread. Results are ordered by pair
/// regardless of the worker count.
pub fn verify(max_b: i64, workers: usize) -> Result<VerificationSummary> {
    if max_b < 3 {
        return Err(SemigroupError::EmptyRange(max_b));
    }
    let pairs = coprime_pairs(max_b);
    let per_pair: Vec<Vec<Violation>> = if workers <= 1 {
        pairs.iter().map(|&(a, b)| check_pair(a, b)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("failed to start worker pool");
        pool.install(|| pairs.par_iter().map(|&(a, b)| check_pair(a, b)).collect())
    };
    Ok(VerificationSummary {
        max_b,
        pairs: pairs.len(),
        checks: pairs.len() * Property::ALL.len(),
        failures: per_pair.into_iter().flatten().collect(),
    })
}

/// Checks every property for one pair; returns the violations.
pub fn check_pair(a: i64, b: i64) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut fail = |property: Property, detail: String| {
        out.push(Violation {
            a,
            b,
            property,
            detail,
        })
    };

    let s = match PairSemigroup::new(a, b) {
        Ok(s) => s,
        Err(e) => {
            fail(Property::DlsMatchesOracle, e.to_string());
            return out;
        }
    };
    let d = s.dls();
    let (abs_u, abs_v) = (d.abs_u(), d.abs_v());
    let f = s.frobenius();

    match oracle::oracle_dls(a, b) {
        Ok(o) if o == d => {}
        Ok(o) => fail(
            Property::DlsMatchesOracle,
            format!("oracle {o:?}, closed form {d:?}"),
        ),
        Err(e) => fail(Property::DlsMatchesOracle, e.to_string()),
    }

    let report = match oracle::oracle_isolated_gaps(&[a, b]) {
        Ok(r) => r,
        Err(e) => {
            fail(Property::IsolatedSetMatchesOracle, e.to_string());
            return out;
        }
    };
    let brute = &report.isolated_gaps;
    let profile = isolated::isolated_gaps(&s);
    let count = isolated::isolated_count(&s);
    let h = isolated::min_isolated_gap(&s);

    if !(count == abs_u * abs_v
        && count == brute.len() as i64
        && profile.gaps.len() as i64 == count)
    {
        fail(
            Property::CountIsUv,
            format!(
                "count {count}, |uv| {}, oracle {}",
                abs_u * abs_v,
                brute.len()
            ),
        );
    }
    if &profile.gaps != brute {
        fail(
            Property::IsolatedSetMatchesOracle,
            format!("closed {:?} vs oracle {:?}", profile.gaps, brute),
        );
    }
    if brute.first() != Some(&h) {
        fail(
            Property::MinIsSmallestIsolatedGap,
            format!("h {h}, oracle min {:?}", brute.first()),
        );
    }
    if brute.last() != Some(&f) || !profile.gaps.contains(&f) || report.frobenius != f {
        fail(
            Property::FrobeniusIsMaxIsolatedGap,
            format!("F {f}, oracle max {:?}", brute.last()),
        );
    }

    match oracle::oracle_count_T(a, b) {
        Ok(t) if t == abs_u * abs_v => {}
        Ok(t) => fail(
            Property::DualCountIsUv,
            format!("#T {t}, |uv| {}", abs_u * abs_v),
        ),
        Err(e) => fail(Property::DualCountIsUv, e.to_string()),
    }

    let matrix = isolated::gap_matrix(&s);
    if matrix != GapMatrix::from_corollary(&s) {
        fail(
            Property::MatrixRulesAgree,
            "entry rule and corollary rule differ".into(),
        );
    }

    // Residue blocks modulo a, from the oracle set.
    let blocks = isolated::group_by_residue(brute, a);
    let uniform = blocks.blocks.len() as i64 == abs_v
        && !blocks.blocks.contains_key(&0)
        && blocks.blocks.values().all(|block| {
            let hi = block[0];
            block.len() as i64 == abs_u && block.iter().zip(0..).all(|(&x, k)| x == hi + k * a)
        });
    if !uniform {
        fail(
            Property::PartitionModAUniform,
            format!("{:?}", blocks.blocks),
        );
    }

    let mut minima: Vec<i64> = blocks.minima().into_values().collect();
    minima.sort_unstable();
    let expected: Vec<i64> = (0..abs_v).map(|k| h + k * b).collect();
    if minima != isolated::minimal_isolated_gaps(&s) || minima != expected {
        fail(
            Property::MinimalIsolatedGaps,
            format!("block minima {minima:?}"),
        );
    }

    let dual = isolated::dual_set(&s);
    let scanned: Vec<i64> = (0..f)
        .filter(|&t| s.contains(t) && !s.contains(t - 1) && !s.contains(t + 1))
        .collect();
    let image: BTreeSet<i64> = dual.elements.iter().map(|t| f - t).collect();
    let target: BTreeSet<i64> = brute.iter().copied().collect();
    if dual.elements != scanned || image != target || image.len() != dual.elements.len() {
        fail(
            Property::DualBijection,
            format!("T {:?}, scan {scanned:?}", dual.elements),
        );
    }

    for &t in &dual.elements {
        let split = (0..=t / a).find_map(|l1| {
            let rest = t - l1 * a;
            (rest % b == 0).then_some((l1, rest / b))
        });
        match split {
            Some((l1, l2)) if l1 < abs_u && l2 < abs_v => {}
            other => {
                fail(
                    Property::DualCoefficientsBounded,
                    format!("{t} = {other:?}"),
                );
                break;
            }
        }
    }

    'members: for m in (1..=2 * b).filter(|&m| s.contains(m)) {
        let grouped = isolated::group_by_residue(brute, m);
        for block in grouped.blocks.values() {
            let r0 = (f - block[0]).rem_euclid(m);
            if block.iter().any(|x| (f - x).rem_euclid(m) != r0) {
                fail(Property::DualBlocksCongruent, format!("modulus {m}"));
                break 'members;
            }
        }
    }

    match isolated::smith_extension(&s) {
        Ok(ext) if isolated::is_perfect(&ext) => {}
        Ok(ext) => fail(
            Property::SmithExtensionPerfect,
            format!(
                "<{a}, {b}, {h}> has isolated gaps {:?}",
                ext.isolated_gaps()
            ),
        ),
        Err(e) => fail(Property::SmithExtensionPerfect, e.to_string()),
    }

    let sig = isolated::h_residue_signature(&s);
    if !sig.is_allowed() {
        fail(Property::ResidueSignatureAllowed, format!("{sig:?}"));
    }

    for &x in brute {
        let next = x + a;
        let same_block = next % a == x % a && target.contains(&next);
        if !(pair::pair_membership(&s, next) || same_block) {
            fail(Property::BlockSuccessor, format!("x = {x}"));
            break;
        }
    }

    for &x in brute {
        let first = (1..).map(|n| x + n * a).find(|&y| s.contains(y)).unwrap();
        if first % b != 0 {
            fail(
                Property::FirstMemberIsMultipleOfB,
                format!("x = {x}, first member {first}"),
            );
            break;
        }
    }

    out
}
