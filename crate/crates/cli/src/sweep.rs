//! Exhaustive certification sweeps over all problems for lines in projective
//! `n`-space, `n = 2..=n_max`.
//!
//! The sweep checks, for every problem, the one clause the recursion needs at
//! that problem: reduce, then either the count is at most 1 or a
//! discriminating pair exists. The branch problems of a reduced problem are
//! themselves problems of the family with smaller (sum, length), so they are
//! swept in their own right; certifying the local clause everywhere is
//! exactly the induction, without materializing one certificate tree per
//! problem. Single problems get full trees via `verify_at_least_alternating`.
//!
//! ## Fast walk
//!
//! Problems are walked as partitions with parts chosen in ascending order,
//! carrying the counting state `M_{c_k} ... M_{c_1} e_0` down the tree. At a
//! leaf the last two chosen parts are the two largest, which is the first
//! pair the discriminating scan would try, and both branch counts fall out of
//! the grandparent state: with state `v` over the first `m - 2` parts and top
//! pair `a1 >= a2`,
//!
//! - merged count  = coefficient of `e_{a1+a2}` in `v`, and
//! - decremented count = `(M_{a2-1} v)` at `e_{a1-1}`, a short dot product,
//!
//! because multiplying by `e_w` maps only `e_w` down to `e_0`. Their sum is
//! the problem's own count, so the small-count base case is also decided on
//! the spot. Problems that are not reduced, or where the first pair does not
//! discriminate, fall back to the plain per-problem step; the outcome is
//! identical to running the plain step everywhere, which the tests check.

use std::sync::atomic::{AtomicU32, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use schublines_core::{find_discriminating_rearrangement_with, SchubertProblem};
use serde::Serialize;

use crate::cache::SharedMemo;

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub n: u64,
    pub problems: u64,
    pub all_certified: bool,
    pub failures: Vec<Vec<u32>>,
    pub seconds: f64,
}

/// Verifies the local clause for one problem, the plain way. `Err` carries
/// the problem for the failure report; per the induction lemma this should
/// never fire.
pub(crate) fn certify_step(parts: &[u32], memo: &SharedMemo) -> Result<(), SchubertProblem> {
    let p = SchubertProblem::new(parts).expect("enumerated problems are well-formed");
    let reduced = p.reduce().expect("enumerated problems are valid");
    let k = memo.count(&reduced);
    if k <= BigUint::one() {
        return Ok(());
    }
    match find_discriminating_rearrangement_with(&reduced, |q| memo.count(q)) {
        Ok(_) => Ok(()),
        Err(_) => Err(p),
    }
}

/// Counting state after a fixed prefix of conditions: `coeffs[k]` is the
/// multiplicity of `e_{2k + parity}`. Exact in `u128` for sums up to 127,
/// since every multiplicity is bounded by `2^sum`.
struct DpState {
    coeffs: Vec<u128>,
    parity: u32,
    sum: u32,
}

impl DpState {
    fn initial() -> Self {
        DpState {
            coeffs: vec![1],
            parity: 0,
            sum: 0,
        }
    }

    fn coefficient(&self, weight: u32) -> u128 {
        if weight % 2 != self.parity {
            return 0;
        }
        let idx = ((weight - self.parity) / 2) as usize;
        self.coeffs.get(idx).copied().unwrap_or(0)
    }

    /// `self <- M_a(src)`, via a difference array; wrapping arithmetic is
    /// exact because the reconstructed values are true multiplicities.
    fn apply_from(&mut self, src: &DpState, a: u32) {
        let sum = src.sum + a;
        let parity = sum % 2;
        let len = ((sum - parity) / 2 + 1) as usize;
        self.coeffs.clear();
        self.coeffs.resize(len + 1, 0u128);
        for (k, &c) in src.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let b = 2 * k as u32 + src.parity;
            let lo = ((b.abs_diff(a) - parity) / 2) as usize;
            let hi = ((b + a - parity) / 2) as usize;
            self.coeffs[lo] = self.coeffs[lo].wrapping_add(c);
            self.coeffs[hi + 1] = self.coeffs[hi + 1].wrapping_sub(c);
        }
        let mut acc = 0u128;
        for slot in self.coeffs.iter_mut().take(len) {
            acc = acc.wrapping_add(*slot);
            *slot = acc;
        }
        self.coeffs.truncate(len);
        self.parity = parity;
        self.sum = sum;
    }

    /// Count of the prefix extended by `{a2 - 1, a1 - 1}` (zeros dropped):
    /// the `e_{a1-1}` coordinate of `M_{a2-1}` applied to this state.
    fn decremented_count(&self, a2: u32, a1: u32) -> u128 {
        debug_assert!(a1 >= a2 && a2 >= 1);
        let lo = a1 - a2;
        let hi = a1 + a2 - 2;
        let mut total = 0u128;
        let mut j = lo;
        while j <= hi {
            total += self.coefficient(j);
            j += 2;
        }
        total
    }
}

/// One leaf of the walk: the problem is `prefix ∪ {a2, a1}` with
/// `a1 >= a2 >=` every prefix part, and `prefix_state` the counting state
/// over the prefix alone. Returns whether the problem is certified on the
/// spot; `None` defers to the fallback path.
fn leaf_certified(prefix_state: &DpState, a2: u32, a1: u32) -> Option<bool> {
    let k_merged = prefix_state.coefficient(a1 + a2);
    let k_decremented = prefix_state.decremented_count(a2, a1);
    let total = k_merged + k_decremented; // the problem's own count
    if total <= 1 {
        return Some(true);
    }
    let sum = prefix_state.sum as u64 + u64::from(a1) + u64::from(a2);
    let reduced = u64::from(a1) + u64::from(a2) <= sum / 2; // n - 1 = sum / 2
    if !reduced {
        return None;
    }
    if k_merged == 1 && k_decremented == 1 {
        return Some(true);
    }
    if k_merged != k_decremented && k_merged != 0 && k_decremented != 0 {
        return Some(true);
    }
    None
}

struct Walk<'a> {
    cap: u32,
    memo: &'a SharedMemo,
    parts: Vec<u32>, // ascending
    problems: u64,
    failures: Vec<Vec<u32>>,
}

impl Walk<'_> {
    /// Extends the partition by parts `>= last`. Invariant: `last` is the
    /// most recent entry of `self.parts`, `state` is the counting state over
    /// all of `self.parts`, and `prev` the state with `last` left off.
    fn descend(&mut self, prev: &DpState, last: u32, state: &DpState, remaining: u32) {
        let mut next = DpState::initial();
        for c in last..=self.cap.min(remaining) {
            let rest = remaining - c;
            if rest == 0 {
                // leaf: the problem is parts ∪ {c}; its two largest entries
                // are (last, c) and `prev` is their prefix state
                self.problems += 1;
                let certified = leaf_certified(prev, last, c)
                    .unwrap_or_else(|| self.fallback(c).is_ok());
                if !certified {
                    self.failures.push(self.canonical(c));
                }
            } else if rest >= c {
                next.apply_from(state, c);
                self.parts.push(c);
                self.descend(state, c, &next, rest);
                self.parts.pop();
            }
        }
    }

    fn canonical(&self, final_part: u32) -> Vec<u32> {
        let mut parts = self.parts.clone();
        parts.push(final_part);
        parts.reverse();
        parts
    }

    fn fallback(&self, final_part: u32) -> Result<(), SchubertProblem> {
        certify_step(&self.canonical(final_part), self.memo)
    }
}

pub fn sweep(n_max: u64, jobs: usize, memo: &SharedMemo) -> Vec<SweepReport> {
    (2..=n_max.max(1)).map(|n| sweep_one(n, jobs, memo)).collect()
}

fn sweep_one(n: u64, jobs: usize, memo: &SharedMemo) -> SweepReport {
    let start = Instant::now();
    if 2 * n - 2 > 127 {
        // beyond the u128 exactness bound of the walk; certify plainly
        return sweep_one_plain(n, start, memo);
    }
    let sum = (2 * n - 2) as u32;
    let cap = (n - 1) as u32;

    let worker = |first: u32, memo: &SharedMemo| -> (u64, Vec<Vec<u32>>) {
        let root = DpState::initial();
        let mut state = DpState::initial();
        state.apply_from(&root, first);
        let mut walk = Walk {
            cap,
            memo,
            parts: vec![first],
            problems: 0,
            failures: Vec::new(),
        };
        walk.descend(&root, first, &state, sum - first);
        (walk.problems, walk.failures)
    };

    // split the walk by the smallest part; every problem has exactly one
    let first_parts: Vec<u32> = (1..=cap).filter(|&c| sum - c >= c).collect();
    let mut problems = 0u64;
    let mut failures: Vec<Vec<u32>> = Vec::new();
    if jobs <= 1 {
        for &first in &first_parts {
            let (done, fails) = worker(first, memo);
            problems += done;
            failures.extend(fails);
        }
    } else {
        let cursor = AtomicU32::new(0);
        let done = AtomicU64::new(0);
        let failed: Mutex<Vec<Vec<u32>>> = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let idx = cursor.fetch_add(1, Ordering::Relaxed) as usize;
                    let Some(&first) = first_parts.get(idx) else { break };
                    let (count, fails) = worker(first, memo);
                    done.fetch_add(count, Ordering::Relaxed);
                    if !fails.is_empty() {
                        failed.lock().unwrap().extend(fails);
                    }
                });
            }
        });
        problems = done.into_inner();
        failures = failed.into_inner().unwrap();
    }

    // deterministic report regardless of worker interleaving
    failures.sort();
    failures.dedup();
    SweepReport {
        n,
        problems,
        all_certified: failures.is_empty(),
        failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn sweep_one_plain(n: u64, start: Instant, memo: &SharedMemo) -> SweepReport {
    let mut problems = 0u64;
    let mut failures: Vec<Vec<u32>> = Vec::new();
    schublines_core::for_each_problem(n, |parts| {
        problems += 1;
        if certify_step(parts, memo).is_err() {
            failures.push(parts.to_vec());
        }
    });
    SweepReport {
        n,
        problems,
        all_certified: failures.is_empty(),
        failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schublines_core::{for_each_problem, kostka_u128};

    #[test]
    fn smallest_space() {
        let memo = SharedMemo::new();
        let reports = sweep(2, 1, &memo);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].problems, 1);
        assert!(reports[0].all_certified);
    }

    #[test]
    fn problem_counts_match_the_enumerator() {
        let memo = SharedMemo::new();
        for report in sweep(12, 1, &memo) {
            let mut expected = 0u64;
            for_each_problem(report.n, |_| expected += 1);
            assert_eq!(report.problems, expected, "n = {}", report.n);
            assert!(report.all_certified);
        }
    }

    #[test]
    fn leaf_counts_match_full_recounts() {
        // the in-walk branch counts must equal from-scratch counts
        for n in 2..=10u64 {
            for_each_problem(n, |parts| {
                if parts.len() < 2 {
                    return;
                }
                let (a1, a2) = (parts[0], parts[1]);
                let prefix = &parts[2..];
                let mut state = DpState::initial();
                let mut next = DpState::initial();
                for &c in prefix.iter().rev() {
                    next.apply_from(&state, c);
                    std::mem::swap(&mut state, &mut next);
                }
                let mut merged: Vec<u32> = prefix.to_vec();
                merged.push(a1 + a2);
                let mut decremented: Vec<u32> = prefix.to_vec();
                decremented.extend([a1 - 1, a2 - 1]);
                assert_eq!(
                    state.coefficient(a1 + a2),
                    kostka_u128(&merged).unwrap(),
                    "merged branch of {parts:?}"
                );
                assert_eq!(
                    state.decremented_count(a2, a1),
                    kostka_u128(&decremented).unwrap(),
                    "decremented branch of {parts:?}"
                );
            });
        }
    }

    #[test]
    fn walk_agrees_with_plain_step_everywhere() {
        let memo = SharedMemo::new();
        for n in 2..=13u64 {
            for_each_problem(n, |parts| {
                assert!(certify_step(parts, &memo).is_ok(), "plain step at {parts:?}");
            });
            let report = sweep_one(n, 1, &memo);
            assert!(report.all_certified, "walk at n = {n}");
        }
    }

    #[test]
    fn parallel_and_serial_agree() {
        let memo = SharedMemo::new();
        let serial = sweep(8, 1, &memo);
        let parallel = sweep(8, 3, &memo);
        for (a, b) in serial.iter().zip(&parallel) {
            assert_eq!(
                (a.n, a.problems, a.all_certified),
                (b.n, b.problems, b.all_certified)
            );
            assert_eq!(a.failures, b.failures);
        }
    }
}
