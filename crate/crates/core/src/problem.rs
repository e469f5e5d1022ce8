//! Schubert problems of lines and their structural operations.
//!
//! A problem is a multiset of positive condition codimensions with even sum.
//! Writing `s` for the sum, the ambient projective dimension is
//! `n = (s + 2) / 2` and the problem is solvable (has a positive count) iff
//! every condition is at most `n - 1`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A Schubert problem of lines, stored in canonical (weakly decreasing) form.
///
/// The empty problem is permitted as the multiplicative unit of the recursion:
/// it has count 1 and arises when a decrement step consumes both chosen
/// conditions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertProblem {
    conditions: Vec<u32>,
}

impl SchubertProblem {
    /// Builds a problem from condition codimensions, in any order.
    ///
    /// Rejects zero entries and odd sums instead of silently producing a
    /// zero count.
    pub fn new(conditions: impl AsRef<[u32]>) -> Result<Self> {
        let conditions = conditions.as_ref();
        if conditions.iter().any(|&a| a == 0) {
            return Err(Error::NonPositiveCondition);
        }
        let sum: u64 = conditions.iter().map(|&a| u64::from(a)).sum();
        if sum % 2 != 0 {
            return Err(Error::OddSum { sum });
        }
        let mut conditions = conditions.to_vec();
        conditions.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SchubertProblem { conditions })
    }

    /// The empty problem, with count 1 by convention.
    pub fn empty() -> Self {
        SchubertProblem {
            conditions: Vec::new(),
        }
    }

    /// Internal constructor for callers that guarantee an even sum.
    /// Sorts into canonical form; zero entries are dropped.
    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        parts.retain(|&a| a > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(parts.iter().map(|&a| u64::from(a)).sum::<u64>() % 2 == 0);
        SchubertProblem { conditions: parts }
    }

    /// Conditions in canonical weakly decreasing order.
    pub fn conditions(&self) -> &[u32] {
        &self.conditions
    }

    /// Number of conditions.
    pub fn len(&self) -> usize {
        self.conditions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditions.is_empty()
    }

    /// Sum of the condition codimensions.
    pub fn sum(&self) -> u64 {
        self.conditions.iter().map(|&a| u64::from(a)).sum()
    }

    /// Ambient projective dimension `n = (sum + 2) / 2`.
    pub fn n(&self) -> u64 {
        (self.sum() + 2) / 2
    }

    /// Whether every condition fits the ambient space: `a_i <= n - 1`.
    ///
    /// Exactly the problems with positive count.
    pub fn is_valid(&self) -> bool {
        match self.conditions.first() {
            Some(&max) => u64::from(max) <= self.n() - 1,
            None => true,
        }
    }

    /// Whether the problem is reduced: valid, and the two largest conditions
    /// sum to at most `n - 1`.
    pub fn is_reduced(&self) -> bool {
        if !self.is_valid() {
            return false;
        }
        match self.conditions[..] {
            [] | [_] => true,
            [a, b, ..] => u64::from(a) + u64::from(b) <= self.n() - 1,
        }
    }

    /// Repeatedly decrements the two largest conditions while their sum
    /// exceeds `n - 1`, dropping conditions that reach zero. The count is
    /// preserved at every step.
    ///
    /// Stops when fewer than three conditions remain: the only valid
    /// two-condition problems are `(a, a)`, which already have count 1.
    pub fn reduce(&self) -> Result<SchubertProblem> {
        if !self.is_valid() {
            return Err(Error::InvalidProblem);
        }
        let mut parts = self.conditions.clone();
        loop {
            let sum: u64 = parts.iter().map(|&a| u64::from(a)).sum();
            let n = (sum + 2) / 2;
            if parts.len() < 3 || u64::from(parts[0]) + u64::from(parts[1]) <= n - 1 {
                break;
            }
            parts[0] -= 1;
            parts[1] -= 1;
            parts.retain(|&a| a > 0);
            parts.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(SchubertProblem { conditions: parts })
    }

    /// Splits the problem along the designated pair of conditions, per the
    /// special-position recursion: with the pair `(x, y)` last, the count
    /// decomposes as `K(.., x, y) = K(.., x+y) + K(.., x-1, y-1)`.
    ///
    /// Returns `(merged, decremented)`. Zero entries produced by the
    /// decrement are dropped; if both vanish the decremented branch is the
    /// empty problem.
    pub fn recursion_split(
        &self,
        i: usize,
        j: usize,
    ) -> Result<(SchubertProblem, SchubertProblem)> {
        assert!(i != j && i < self.len() && j < self.len(), "bad pair indices");
        if !self.is_valid() {
            return Err(Error::InvalidProblem);
        }
        let (x, y) = (self.conditions[i], self.conditions[j]);
        let rest: Vec<u32> = self
            .conditions
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, &a)| a)
            .collect();

        let mut merged = rest.clone();
        merged.push(x + y);
        let mut decremented = rest;
        decremented.push(x - 1);
        decremented.push(y - 1);

        Ok((
            SchubertProblem::from_parts_unchecked(merged),
            SchubertProblem::from_parts_unchecked(decremented),
        ))
    }

    /// Same split, designating the pair by value rather than position.
    /// Both values must occur (twice, if equal).
    pub fn recursion_split_values(&self, x: u32, y: u32) -> Result<(SchubertProblem, SchubertProblem)> {
        let i = self
            .conditions
            .iter()
            .position(|&a| a == x)
            .expect("x not present in problem");
        let j = self
            .conditions
            .iter()
            .enumerate()
            .position(|(k, &a)| a == y && k != i)
            .expect("y not present in problem (pair must occur)");
        self.recursion_split(i, j)
    }
}

impl core::fmt::Display for SchubertProblem {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.conditions.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(conds: &[u32]) -> SchubertProblem {
        SchubertProblem::new(conds).unwrap()
    }

    #[test]
    fn constructor_rejects_odd_sum() {
        assert_eq!(
            SchubertProblem::new([1, 1, 1]),
            Err(Error::OddSum { sum: 3 })
        );
    }

    #[test]
    fn constructor_rejects_zero() {
        assert_eq!(
            SchubertProblem::new([2, 0, 2]),
            Err(Error::NonPositiveCondition)
        );
    }

    #[test]
    fn canonical_form_is_weakly_decreasing() {
        assert_eq!(p(&[2, 2, 1, 2, 3]).conditions(), &[3, 2, 2, 2, 1]);
    }

    #[test]
    fn ambient_dimension() {
        assert_eq!(p(&[1, 1, 1, 1]).n(), 3);
        assert_eq!(p(&[2, 2, 1, 2, 3]).n(), 6);
        assert_eq!(p(&[2, 2]).n(), 3);
        assert_eq!(SchubertProblem::empty().n(), 1);
    }

    #[test]
    fn validity() {
        assert!(p(&[2, 2, 1, 2, 3]).is_valid());
        assert!(!p(&[4, 1, 1]).is_valid());
        assert!(p(&[1, 1]).is_valid());
        assert!(SchubertProblem::empty().is_valid());
    }

    #[test]
    fn reducedness() {
        assert!(p(&[2, 2, 1, 2, 3]).is_reduced());
        assert!(!p(&[1, 1, 2]).is_reduced());
        assert!(p(&[1, 1, 1, 1]).is_reduced());
        // (1,1) stays below the pair threshold but is returned unchanged by
        // reduce; it is not reduced in the strict pairwise sense.
        assert!(!p(&[1, 1]).is_reduced());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(p(&[1, 1, 2]).reduce().unwrap(), p(&[1, 1]));
        assert_eq!(p(&[2, 2, 1, 2, 3]).reduce().unwrap(), p(&[2, 2, 1, 2, 3]));
        assert_eq!(p(&[2, 2, 2]).reduce().unwrap(), p(&[1, 1]));
    }

    #[test]
    fn reduce_rejects_invalid() {
        assert_eq!(p(&[4, 1, 1]).reduce(), Err(Error::InvalidProblem));
    }

    #[test]
    fn reduce_produces_reduced_or_pair() {
        // every valid problem with sum <= 16 lands on a strictly reduced
        // problem or on (a, a)
        for q in crate::verify::all_valid_problems_up_to_sum(16) {
            let r = q.reduce().unwrap();
            assert!(
                r.is_reduced() || (r.len() == 2 && r.conditions()[0] == r.conditions()[1]),
                "reduce({q}) = {r}"
            );
        }
    }

    #[test]
    fn split_worked_example() {
        let q = p(&[2, 2, 1, 2, 3]);
        // canonical order (3,2,2,2,1); split the pair of values (2,3)
        let (merged, decremented) = q.recursion_split_values(2, 3).unwrap();
        assert_eq!(merged, p(&[2, 2, 1, 5]));
        assert_eq!(decremented, p(&[2, 2, 1, 1, 2]));
    }

    #[test]
    fn split_drops_zeros() {
        let q = p(&[1, 1, 1, 1]);
        let (merged, decremented) = q.recursion_split(2, 3).unwrap();
        assert_eq!(merged, p(&[1, 1, 2]));
        assert_eq!(decremented, p(&[1, 1]));

        let (merged, decremented) = p(&[1, 1]).recursion_split(0, 1).unwrap();
        assert_eq!(merged, p(&[2]));
        assert_eq!(decremented, SchubertProblem::empty());
    }

    #[test]
    fn split_rejects_invalid() {
        assert_eq!(
            p(&[4, 1, 1]).recursion_split(0, 1),
            Err(Error::InvalidProblem)
        );
    }
}
