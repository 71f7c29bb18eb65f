//! Isolated gaps of numerical semigroups with two generators.
//!
//! For coprime `1 < a < b` the isolated gaps of `<a, b>` (gaps `x` with
//! `x - 1` and `x + 1` both in the semigroup) are given in closed form by the
//! definitely least solution `(u, v)` of `a*x + b*y = 1`: there are `|uv|` of
//! them, the smallest is `F - (|u| - 1)a - (|v| - 1)b`, and together they fill
//! a `|v| x |u|` matrix with row step `b` and column step `a`.
//!
//! [`oracle`] recomputes the same quantities by brute force and [`verify`]
//! compares the two over ranges of pairs.
//!
//! ```
//! use semigap::{isolated_gaps, PairSemigroup};
//!
//! let s = PairSemigroup::new(9, 13).unwrap();
//! assert_eq!(isolated_gaps(&s).gaps, vec![64, 73, 77, 82, 86, 95]);
//! ```

pub mod arith;
pub mod error;
pub mod generic;
pub mod isolated;
pub mod oracle;
pub mod pair;
pub mod report;
pub mod verify;

pub use arith::extended_gcd;
pub use error::{Result, SemigroupError};
pub use generic::{apery_set, generic_semigroup, is_symmetric, GenericSemigroup};
pub use isolated::{
    dual_set, gap_matrix, h_residue_signature, is_perfect, isolated_count, isolated_gaps,
    min_isolated_gap, minimal_isolated_gaps, residue_partition, smith_extension, DualSet,
    GapMatrix, IsolatedGapProfile, ResiduePartition, ResidueSignature,
};
pub use oracle::{oracle_count_T, oracle_dls, oracle_isolated_gaps, OracleReport};
pub use pair::{dls, pair_gaps, pair_membership, DlsSolution, PairSemigroup};
pub use report::{AnalysisDocument, Format};
pub use verify::{verify, Property, VerificationSummary, Violation};
