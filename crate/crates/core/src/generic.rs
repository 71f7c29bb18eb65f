//! Numerical semigroups with an arbitrary finite generating set.

use crate::arith::{self, check_generator};
use crate::error::{Result, SemigroupError, MAX_TABLE_LEN};

/// A numerical semigroup given by any finite list of generators with gcd 1.
///
/// Membership is decided through the Apéry set with respect to the smallest
/// generator, which also yields the Frobenius number. A boolean table covers
/// `0..=frobenius`; everything above it is a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericSemigroup {
    generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    frobenius: i64,
    /// `apery[r]` is the least member congruent to `r` modulo the multiplicity.
    apery: Vec<i64>,
    membership: Vec<bool>,
}

impl GenericSemigroup {
    pub fn new(generators: &[i64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(SemigroupError::Empty);
        }
        for &g in generators {
            check_generator(g)?;
        }
        let mut generators = generators.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = arith::gcd_all(&generators);
        if g != 1 {
            return Err(SemigroupError::GeneratorsNotCoprime { generators, gcd: g });
        }

        let multiplicity = generators[0];
        let largest = *generators.last().unwrap();
        let bound = arith::mul(multiplicity, largest, "table bound")?;
        if bound > MAX_TABLE_LEN {
            return Err(SemigroupError::TableTooLarge(bound));
        }

        let apery = round_robin_apery(&generators);
        let frobenius = apery.iter().max().copied().unwrap() - multiplicity;

        let mut membership = vec![false; (frobenius + 1).max(0) as usize];
        for (x, slot) in membership.iter_mut().enumerate() {
            let x = x as i64;
            *slot = x >= apery[(x % multiplicity) as usize];
        }

        let mut s = Self {
            generators,
            minimal_generators: Vec::new(),
            frobenius,
            apery,
            membership,
        };
        s.minimal_generators = s
            .generators
            .iter()
            .copied()
            .filter(|&g| !s.generators.iter().any(|&h| h < g && s.contains(g - h)))
            .collect();
        Ok(s)
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Largest non-member, or `-1` for the whole of ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn membership_table(&self) -> &[bool] {
        &self.membership
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.membership[x as usize]
        }
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Gaps `x` with both `x - 1` and `x + 1` in the semigroup, by direct scan.
    pub fn isolated_gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x) && self.contains(x - 1) && self.contains(x + 1))
            .collect()
    }

    /// `Ap(S, n)`: the least member in each residue class modulo `n`, sorted.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(SemigroupError::NotMember(n));
        }
        if n == self.multiplicity() {
            let mut out = self.apery.clone();
            out.sort_unstable();
            return Ok(out);
        }
        if n > MAX_TABLE_LEN {
            return Err(SemigroupError::TableTooLarge(n));
        }
        let mut least = vec![None; n as usize];
        let mut remaining = n;
        let mut x = 0i64;
        while remaining > 0 {
            if self.contains(x) {
                let slot = &mut least[(x % n) as usize];
                if slot.is_none() {
                    *slot = Some(x);
                    remaining -= 1;
                }
            }
            x += 1;
        }
        let mut out: Vec<i64> = least.into_iter().map(Option::unwrap).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `F(S) - x ∈ S` for every gap `x`. ℕ counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.gaps()
            .into_iter()
            .all(|x| self.contains(self.frobenius - x))
    }
}

/// Least member in each residue class mod the smallest generator, by the
/// round-robin relaxation: for each further generator `g`, walk every cycle
/// of `r -> r + g (mod m)` once, starting at the cycle's current minimum.
fn round_robin_apery(generators: &[i64]) -> Vec<i64> {
    let m = generators[0];
    let mu = m as usize;
    let mut apery = vec![i64::MAX; mu];
    apery[0] = 0;
    for &g in &generators[1..] {
        let d = arith::gcd(m, g) as usize;
        let step = (g % m) as usize;
        let cycle_len = mu / d;
        for start in 0..d {
            // locate the minimum on this cycle
            let mut best = start;
            let mut r = start;
            for _ in 0..cycle_len {
                if apery[r] < apery[best] {
                    best = r;
                }
                r = (r + step) % mu;
            }
            if apery[best] == i64::MAX {
                continue;
            }
            let mut r = best;
            for _ in 0..cycle_len {
                let next = (r + step) % mu;
                let candidate = apery[r] + g;
                if candidate < apery[next] {
                    apery[next] = candidate;
                }
                r = next;
            }
        }
    }
    apery
}

pub fn generic_semigroup(generators: &[i64]) -> Result<GenericSemigroup> {
    GenericSemigroup::new(generators)
}

pub fn apery_set(s: &GenericSemigroup, n: i64) -> Result<Vec<i64>> {
    s.apery_set(n)
}

pub fn is_symmetric(s: &GenericSemigroup) -> bool {
    s.is_symmetric()
}
