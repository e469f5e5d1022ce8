//! Certificates that a problem's Galois group is at least alternating.
//!
//! The engine is a special-position recursion: a reduced problem splits along
//! a chosen pair of conditions into a "merged" and a "decremented" branch
//! whose counts add up to the original count. When the branch counts differ
//! (or both equal 1) and both branch groups are at least alternating, the
//! criterion lifts the property to the original problem. Certificates record
//! the reduction, the chosen rearrangement, both branch counts, and the
//! clause used, so they can be re-validated from scratch.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::problem::SchubertProblem;
use crate::repring::{kostka, kostka_of_parts};

/// Which clause of the criterion certified a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// Count at most 2; the group is transitive, and any transitive subgroup
    /// on at most two points contains the alternating group.
    BaseSmallK,
    /// Both branch counts equal 1.
    BothBranchesOne,
    /// Branch counts are nonzero and differ.
    UnequalBranches,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::BaseSmallK => "base-small-k",
            Clause::BothBranchesOne => "both-branches-one",
            Clause::UnequalBranches => "unequal-branches",
        }
    }

    /// Human-readable reason recorded alongside the clause.
    pub fn justification(self) -> &'static str {
        match self {
            Clause::BaseSmallK => {
                "count <= 2: a transitive group on at most 2 points contains the alternating group"
            }
            Clause::BothBranchesOne => "both branch counts equal 1",
            Clause::UnequalBranches => "branch counts are nonzero and unequal",
        }
    }
}

impl core::fmt::Display for Clause {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A recursive proof tree. Every node re-derives from its own fields: the
/// reduction of `problem`, the exact count, and (for recursive clauses) the
/// rearrangement whose last two entries are the split pair, with the two
/// branch certificates as children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCertificate {
    pub problem: SchubertProblem,
    pub reduced: SchubertProblem,
    pub kostka_value: BigUint,
    pub clause: Clause,
    /// Conditions of `reduced` in the order used for the split; the last two
    /// entries are the chosen pair. Absent for [`Clause::BaseSmallK`].
    pub rearrangement: Option<Vec<u32>>,
    pub merged_child: Option<Arc<AlternatingCertificate>>,
    pub decremented_child: Option<Arc<AlternatingCertificate>>,
}

/// Outcome of the discriminating-pair search on a reduced problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrimination {
    /// The chosen pair `(x, y)` with `x <= y`.
    pub pair: (u32, u32),
    pub merged: SchubertProblem,
    pub decremented: SchubertProblem,
    /// Counts of the merged and decremented branches.
    pub counts: (BigUint, BigUint),
    /// Either [`Clause::BothBranchesOne`] or [`Clause::UnequalBranches`].
    pub clause: Clause,
}

impl Discrimination {
    /// The reduced problem's conditions reordered with the split pair last.
    pub fn rearrangement(&self, reduced: &SchubertProblem) -> Vec<u32> {
        let (x, y) = self.pair;
        let mut rest: Vec<u32> = reduced.conditions().to_vec();
        let i = rest.iter().position(|&a| a == y).unwrap();
        rest.remove(i);
        let j = rest.iter().position(|&a| a == x).unwrap();
        rest.remove(j);
        rest.push(x);
        rest.push(y);
        rest
    }
}

/// Distinct unordered pairs available in the multiset, largest sums first,
/// ties broken toward the more lopsided pair.
fn candidate_pairs(conds: &[u32]) -> Vec<(u32, u32)> {
    let mut values: Vec<(u32, u32)> = Vec::new(); // (value, multiplicity), descending
    for &a in conds {
        match values.last_mut() {
            Some((v, mult)) if *v == a => *mult += 1,
            _ => values.push((a, 1)),
        }
    }
    let mut pairs = Vec::new();
    for (i, &(y, my)) in values.iter().enumerate() {
        if my >= 2 {
            pairs.push((y, y));
        }
        for &(x, _) in &values[i + 1..] {
            pairs.push((x, y));
        }
    }
    pairs.sort_unstable_by(|&(x1, y1), &(x2, y2)| {
        (x2 as u64 + y2 as u64, y2).cmp(&(x1 as u64 + y1 as u64, y1))
    });
    pairs
}

/// Finds a pair of conditions of the reduced problem whose two branches have
/// counts that are either unequal (and nonzero) or both 1. Pairs are scanned
/// in the fixed order of [`candidate_pairs`] and the first success wins.
///
/// Failure would falsify the induction lemma (or this implementation); it is
/// reported, never asserted away.
pub fn find_discriminating_rearrangement(p: &SchubertProblem) -> Result<Discrimination> {
    find_discriminating_rearrangement_with(p, kostka)
}

/// [`find_discriminating_rearrangement`] with a caller-supplied counting
/// function, so sweeps can inject a shared memo cache.
pub fn find_discriminating_rearrangement_with(
    p: &SchubertProblem,
    mut count: impl FnMut(&SchubertProblem) -> BigUint,
) -> Result<Discrimination> {
    if p.len() < 2 {
        return Err(Error::Precondition("need at least two conditions"));
    }
    if !p.is_reduced() {
        return Err(Error::Precondition("problem must be reduced"));
    }
    let one = BigUint::one();
    for (x, y) in candidate_pairs(p.conditions()) {
        let (merged, decremented) = p.recursion_split_values(x, y)?;
        let k_merged = count(&merged);
        let k_decremented = count(&decremented);
        let clause = if k_merged == one && k_decremented == one {
            Clause::BothBranchesOne
        } else if k_merged != k_decremented && !k_merged.is_zero() && !k_decremented.is_zero() {
            Clause::UnequalBranches
        } else {
            continue;
        };
        return Ok(Discrimination {
            pair: (x, y),
            merged,
            decremented,
            counts: (k_merged, k_decremented),
            clause,
        });
    }
    Err(Error::LemmaFailure(p.conditions().to_vec()))
}

/// Memoizing certificate builder.
///
/// With the cache enabled, structurally identical subproblems share one
/// certificate node; disabling it rebuilds every node. Both modes produce
/// structurally identical trees.
pub struct Verifier {
    certificates: BTreeMap<Vec<u32>, Arc<AlternatingCertificate>>,
    counts: BTreeMap<Vec<u32>, BigUint>,
    cache_certificates: bool,
}

impl Verifier {
    pub fn new() -> Self {
        Verifier {
            certificates: BTreeMap::new(),
            counts: BTreeMap::new(),
            cache_certificates: true,
        }
    }

    /// A verifier that rebuilds every certificate node from scratch.
    pub fn without_cache() -> Self {
        Verifier {
            cache_certificates: false,
            ..Verifier::new()
        }
    }

    fn count_memo(&mut self, p: &SchubertProblem) -> BigUint {
        if let Some(k) = self.counts.get(p.conditions()) {
            return k.clone();
        }
        let k = kostka(p);
        self.counts.insert(p.conditions().to_vec(), k.clone());
        k
    }

    /// Builds the certificate tree for a valid problem.
    ///
    /// Recursion scheme: reduce, certify directly when the count is at most
    /// 1, otherwise split along a discriminating pair and recurse into both
    /// branches. Terminates because `(sum, length)` drops lexicographically
    /// from a reduced problem to each branch.
    pub fn verify(&mut self, p: &SchubertProblem) -> Result<Arc<AlternatingCertificate>> {
        if !p.is_valid() {
            return Err(Error::InvalidProblem);
        }
        if let Some(cert) = self.certificates.get(p.conditions()) {
            return Ok(cert.clone());
        }
        let reduced = p.reduce()?;
        let kostka_value = self.count_memo(&reduced);

        let cert = if kostka_value <= BigUint::one() {
            AlternatingCertificate {
                problem: p.clone(),
                reduced,
                kostka_value,
                clause: Clause::BaseSmallK,
                rearrangement: None,
                merged_child: None,
                decremented_child: None,
            }
        } else {
            let disc = find_discriminating_rearrangement_with(&reduced, |q| self.count_memo(q))?;
            debug_assert!(
                (disc.merged.sum(), disc.merged.len()) < (reduced.sum(), reduced.len())
                    && disc.decremented.sum() < reduced.sum()
            );
            let rearrangement = disc.rearrangement(&reduced);
            let merged_child = self.verify(&disc.merged)?;
            let decremented_child = self.verify(&disc.decremented)?;
            AlternatingCertificate {
                problem: p.clone(),
                reduced,
                kostka_value,
                clause: disc.clause,
                rearrangement: Some(rearrangement),
                merged_child: Some(merged_child),
                decremented_child: Some(decremented_child),
            }
        };
        let cert = Arc::new(cert);
        if self.cache_certificates {
            self.certificates
                .insert(p.conditions().to_vec(), cert.clone());
        }
        Ok(cert)
    }
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new()
    }
}

/// Certifies that the problem's Galois group contains the alternating group.
pub fn verify_at_least_alternating(p: &SchubertProblem) -> Result<Arc<AlternatingCertificate>> {
    Verifier::new().verify(p)
}

/// Re-validates a certificate bottom-up, recomputing every count and
/// re-checking every clause independently of how the tree was built.
/// Shared subtrees (by pointer) are validated once.
pub fn validate_certificate(cert: &AlternatingCertificate) -> Result<()> {
    validate_node(cert, &mut alloc::collections::BTreeSet::new())
}

fn validate_node(
    cert: &AlternatingCertificate,
    seen: &mut alloc::collections::BTreeSet<usize>,
) -> Result<()> {
    if !cert.problem.is_valid() {
        return Err(Error::InvalidCertificate("problem is invalid"));
    }
    if cert.problem.reduce()? != cert.reduced {
        return Err(Error::InvalidCertificate("reduction mismatch"));
    }
    if kostka(&cert.problem) != cert.kostka_value || kostka(&cert.reduced) != cert.kostka_value {
        return Err(Error::InvalidCertificate("count mismatch"));
    }
    match cert.clause {
        Clause::BaseSmallK => {
            if cert.kostka_value > BigUint::from(2u32) {
                return Err(Error::InvalidCertificate("base clause needs count <= 2"));
            }
            if cert.rearrangement.is_some()
                || cert.merged_child.is_some()
                || cert.decremented_child.is_some()
            {
                return Err(Error::InvalidCertificate("base node must be a leaf"));
            }
        }
        Clause::BothBranchesOne | Clause::UnequalBranches => {
            let rearrangement = cert
                .rearrangement
                .as_ref()
                .ok_or(Error::InvalidCertificate("missing rearrangement"))?;
            let mut sorted = rearrangement.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted != cert.reduced.conditions() {
                return Err(Error::InvalidCertificate(
                    "rearrangement is not a reordering of the reduced problem",
                ));
            }
            let [.., x, y] = rearrangement[..] else {
                return Err(Error::InvalidCertificate("rearrangement too short"));
            };
            let merged = cert
                .merged_child
                .as_ref()
                .ok_or(Error::InvalidCertificate("missing merged child"))?;
            let decremented = cert
                .decremented_child
                .as_ref()
                .ok_or(Error::InvalidCertificate("missing decremented child"))?;
            let (expect_merged, expect_decremented) =
                cert.reduced.recursion_split_values(x, y)?;
            if merged.problem != expect_merged || decremented.problem != expect_decremented {
                return Err(Error::InvalidCertificate("children do not match the split"));
            }
            let (k1, k2) = (&merged.kostka_value, &decremented.kostka_value);
            if k1.clone() + k2 != cert.kostka_value {
                return Err(Error::InvalidCertificate("branch counts do not add up"));
            }
            match cert.clause {
                Clause::BothBranchesOne => {
                    if !k1.is_one() || !k2.is_one() {
                        return Err(Error::InvalidCertificate("branch counts must both be 1"));
                    }
                }
                Clause::UnequalBranches => {
                    if k1 == k2 || k1.is_zero() || k2.is_zero() {
                        return Err(Error::InvalidCertificate(
                            "branch counts must be nonzero and unequal",
                        ));
                    }
                }
                Clause::BaseSmallK => unreachable!(),
            }
            if seen.insert(Arc::as_ptr(merged) as usize) {
                validate_node(merged, seen)?;
            }
            if seen.insert(Arc::as_ptr(decremented) as usize) {
                validate_node(decremented, seen)?;
            }
        }
    }
    Ok(())
}

/// Visits every problem for lines in projective `n`-space: partitions of
/// `2n - 2` with parts at most `n - 1`, ordered by length and then
/// lexicographically decreasing. The slice passed to the visitor is in
/// canonical (weakly decreasing) order.
pub fn for_each_problem(n: u64, mut f: impl FnMut(&[u32])) {
    if n < 2 {
        return;
    }
    let sum = 2 * n - 2;
    let cap = (n - 1) as u32;
    let mut buf: Vec<u32> = Vec::with_capacity(sum as usize);
    for len in 2..=sum {
        descend(sum, len as u32, cap, &mut buf, &mut f);
    }
}

/// Recursive partition generator: chooses the next (largest remaining) part
/// from high to low, which yields lexicographically decreasing order.
fn descend(remaining: u64, slots: u32, cap: u32, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if slots == 1 {
        if remaining >= 1 && remaining <= u64::from(cap) {
            buf.push(remaining as u32);
            f(buf);
            buf.pop();
        }
        return;
    }
    let slots64 = u64::from(slots);
    if remaining < slots64 || remaining > slots64 * u64::from(cap) {
        return;
    }
    let hi = u64::from(cap).min(remaining - (slots64 - 1));
    let lo = remaining.div_ceil(slots64); // the first part is the largest
    let mut v = hi;
    while v >= lo {
        buf.push(v as u32);
        descend(remaining - v, slots - 1, v as u32, buf, f);
        buf.pop();
        v -= 1;
    }
}

/// All problems for lines in projective `n`-space, in the visiting order of
/// [`for_each_problem`]. Materializes the whole list; for large `n` prefer
/// the visitor.
pub fn enumerate_problems(n: u64) -> Vec<SchubertProblem> {
    let mut out = Vec::new();
    for_each_problem(n, |parts| {
        out.push(SchubertProblem::from_parts_unchecked(parts.to_vec()));
    });
    out
}

/// Every valid problem with even sum at most `max_sum`, smallest sums first.
/// Handy for exhaustive desk-scale checks.
pub fn all_valid_problems_up_to_sum(max_sum: u64) -> Vec<SchubertProblem> {
    let mut out = Vec::new();
    let mut n = 2;
    while 2 * n - 2 <= max_sum {
        out.extend(enumerate_problems(n));
        n += 1;
    }
    out
}

/// The signed difference `K(2^m, 4) - K(2^m, 1, 1)`, negative for `m < 14`
/// and positive from `m = 14` on.
pub fn a2_difference(m: u32) -> BigInt {
    let mut with_four = alloc::vec![2u32; m as usize];
    with_four.push(4);
    let mut with_ones = alloc::vec![2u32; m as usize];
    with_ones.extend_from_slice(&[1, 1]);
    BigInt::from(kostka_of_parts(&with_four)) - BigInt::from(kostka_of_parts(&with_ones))
}

/// Exact comparison of the two branch counts of the all-equal problem
/// `(a^(m+2))`: `K(a^m, 2a)` versus `K(a^m, (a-1)^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualCaseCheck {
    /// The `m` actually used; when `a * m` is odd, `m` is bumped by one so
    /// that both sides are genuine (even-sum) problems.
    pub m_used: u32,
    pub k_merged: BigUint,
    pub k_decremented: BigUint,
    /// Whether `K(a^m, 2a) < K(a^m, (a-1)^2)` holds strictly.
    pub holds: bool,
}

pub fn equal_case_check(a: u32, m: u32) -> EqualCaseCheck {
    assert!(a >= 3 && m >= 2, "defined for a >= 3, m >= 2");
    let m_used = if (a * m) % 2 == 1 { m + 1 } else { m };
    let mut merged = alloc::vec![a; m_used as usize];
    merged.push(2 * a);
    let mut decremented = alloc::vec![a; m_used as usize];
    decremented.extend_from_slice(&[a - 1, a - 1]);
    let k_merged = kostka_of_parts(&merged);
    let k_decremented = kostka_of_parts(&decremented);
    let holds = k_merged < k_decremented;
    EqualCaseCheck {
        m_used,
        k_merged,
        k_decremented,
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(conds: &[u32]) -> SchubertProblem {
        SchubertProblem::new(conds).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn pair_scan_order() {
        let pairs = candidate_pairs(&[3, 2, 2, 2, 1]);
        assert_eq!(pairs, [(2, 3), (1, 3), (2, 2), (1, 2)]);
    }

    #[test]
    fn discriminates_worked_example() {
        let d = find_discriminating_rearrangement(&p(&[2, 2, 1, 2, 3])).unwrap();
        assert_eq!(d.pair, (2, 3));
        assert_eq!(d.counts, (big(1), big(4)));
        assert_eq!(d.clause, Clause::UnequalBranches);
    }

    #[test]
    fn discriminates_four_ones() {
        let d = find_discriminating_rearrangement(&p(&[1, 1, 1, 1])).unwrap();
        assert_eq!(d.pair, (1, 1));
        assert_eq!(d.counts, (big(1), big(1)));
        assert_eq!(d.clause, Clause::BothBranchesOne);
    }

    #[test]
    fn discriminates_sixteen_twos() {
        let d = find_discriminating_rearrangement(&p(&[2; 16])).unwrap();
        assert_eq!(d.pair, (2, 2));
        assert_eq!(d.counts, (big(113_841), big(113_634)));
        assert_eq!(d.clause, Clause::UnequalBranches);
    }

    #[test]
    fn discriminate_requires_reduced() {
        assert!(matches!(
            find_discriminating_rearrangement(&p(&[1, 1, 2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn verify_four_ones_uses_both_branches_one() {
        let cert = verify_at_least_alternating(&p(&[1, 1, 1, 1])).unwrap();
        assert_eq!(cert.clause, Clause::BothBranchesOne);
        assert_eq!(cert.kostka_value, big(2));
        let merged = cert.merged_child.as_ref().unwrap();
        let decremented = cert.decremented_child.as_ref().unwrap();
        assert_eq!(merged.problem, p(&[1, 1, 2]));
        assert_eq!(merged.kostka_value, big(1));
        assert_eq!(decremented.problem, p(&[1, 1]));
        assert_eq!(decremented.kostka_value, big(1));
    }

    #[test]
    fn verify_worked_example() {
        let cert = verify_at_least_alternating(&p(&[2, 2, 1, 2, 3])).unwrap();
        assert_eq!(cert.clause, Clause::UnequalBranches);
        assert_eq!(cert.kostka_value, big(5));
        let ks = (
            cert.merged_child.as_ref().unwrap().kostka_value.clone(),
            cert.decremented_child.as_ref().unwrap().kostka_value.clone(),
        );
        assert_eq!(ks, (big(1), big(4)));
        assert_eq!(
            cert.rearrangement.as_deref(),
            Some(&[2, 2, 1, 2, 3][..])
        );
    }

    #[test]
    fn verify_single_solution_is_base_case() {
        let cert = verify_at_least_alternating(&p(&[2, 2])).unwrap();
        assert_eq!(cert.clause, Clause::BaseSmallK);
        assert_eq!(cert.kostka_value, big(1));
        assert!(cert.rearrangement.is_none());
    }

    #[test]
    fn verify_rejects_invalid() {
        assert_eq!(
            verify_at_least_alternating(&p(&[4, 1, 1])).err(),
            Some(Error::InvalidProblem)
        );
    }

    #[test]
    fn certificates_revalidate() {
        for conds in [&[1, 1, 1, 1][..], &[2, 2, 1, 2, 3], &[2; 10], &[3, 3, 2, 2]] {
            let cert = verify_at_least_alternating(&p(conds)).unwrap();
            validate_certificate(&cert).unwrap();
        }
    }

    #[test]
    fn mutated_certificate_fails_validation() {
        let cert = verify_at_least_alternating(&p(&[2, 2, 1, 2, 3])).unwrap();
        let mut tampered = (*cert).clone();
        tampered.kostka_value = big(6);
        assert!(validate_certificate(&tampered).is_err());

        let mut tampered = (*cert).clone();
        tampered.clause = Clause::BothBranchesOne;
        assert!(validate_certificate(&tampered).is_err());

        let mut tampered = (*cert).clone();
        tampered.merged_child = cert.decremented_child.clone();
        assert!(validate_certificate(&tampered).is_err());
    }

    #[test]
    fn cache_is_transparent() {
        for conds in [&[1, 1, 1, 1][..], &[2; 12], &[3, 2, 2, 2, 1, 4]] {
            let cached = Verifier::new().verify(&p(conds)).unwrap();
            let uncached = Verifier::without_cache().verify(&p(conds)).unwrap();
            assert_eq!(cached, uncached);
        }
    }

    /// Independent count of partitions of `sum` with parts at most `cap`.
    fn partition_count_oracle(sum: usize, cap: usize) -> u64 {
        let mut ways = alloc::vec![0u64; sum + 1];
        ways[0] = 1;
        for part in 1..=cap {
            for total in part..=sum {
                ways[total] += ways[total - part];
            }
        }
        ways[sum]
    }

    #[test]
    fn enumerates_smallest_spaces() {
        assert_eq!(enumerate_problems(2), [p(&[1, 1])]);
        assert_eq!(
            enumerate_problems(3),
            [p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn enumeration_matches_count_oracle() {
        for n in 2..=12u64 {
            let expected = partition_count_oracle((2 * n - 2) as usize, (n - 1) as usize);
            assert_eq!(enumerate_problems(n).len() as u64, expected, "n = {n}");
        }
        // frozen value from the oracle
        assert_eq!(enumerate_problems(5).len(), 15);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        for n in 2..=9u64 {
            let probs = enumerate_problems(n);
            for q in &probs {
                assert!(q.is_valid());
                assert_eq!(q.sum(), 2 * n - 2);
            }
            let mut seen = probs.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), probs.len(), "duplicates at n = {n}");
            for w in probs.windows(2) {
                let key = |q: &SchubertProblem| (q.len(), core::cmp::Reverse(q.conditions().to_vec()));
                assert!(key(&w[0]) < key(&w[1]), "order at n = {n}");
            }
        }
    }

    #[test]
    fn a2_difference_matches_published_rows() {
        assert_eq!(a2_difference(6), BigInt::from(-11));
        assert_eq!(a2_difference(14), BigInt::from(207));
        assert_eq!(a2_difference(16), BigInt::from(23_853));
    }

    #[test]
    fn equal_case_examples() {
        let c = equal_case_check(3, 2);
        assert_eq!((c.k_merged.clone(), c.k_decremented.clone()), (big(1), big(3)));
        assert!(c.holds);
        assert!(equal_case_check(3, 4).holds);
        assert!(equal_case_check(4, 2).holds);
    }

    #[test]
    fn equal_case_restores_parity() {
        let c = equal_case_check(3, 3);
        assert_eq!(c.m_used, 4);
        assert!(!c.k_merged.is_zero());
    }
}
