//! The representation ring of sl2 and the exact Kostka count.
//!
//! Tensoring with the irreducible module of highest weight `a` acts on the
//! basis `{e_b}` by the Clebsch-Gordan rule
//! `e_a * e_b = e_{b+a} + e_{b+a-2} + ... + e_{|b-a|}`.
//! The count attached to a problem `(a_1, ..., a_m)` is the coefficient of
//! `e_0` after applying the chain of these operators to `e_0`; it equals the
//! number of two-rowed tableaux of the matching rectangular shape and content.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::problem::SchubertProblem;

/// A finitely supported nonnegative-integer vector over the basis `{e_j}`.
///
/// This is the semantic model of the counting state; the production counter
/// in [`kostka`] uses a dense single-parity array instead, since the support
/// after each step is an interval inside one parity class.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepRingVector {
    coeffs: BTreeMap<u32, BigUint>,
}

impl RepRingVector {
    /// The basis vector `e_j`.
    pub fn basis(j: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(j, BigUint::one());
        RepRingVector { coeffs }
    }

    pub fn zero() -> Self {
        RepRingVector::default()
    }

    /// Coefficient of `e_j` (zero when absent).
    pub fn coefficient(&self, j: u32) -> BigUint {
        self.coeffs.get(&j).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Sparse view of the nonzero coefficients, in increasing weight order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigUint)> {
        self.coeffs.iter().map(|(&j, c)| (j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_to(&mut self, j: u32, c: &BigUint) {
        let entry = self.coeffs.entry(j).or_insert_with(BigUint::zero);
        *entry += c;
    }

    /// The common parity of all supported weights, when the support is
    /// nonempty and pure. The counting chain preserves purity: after applying
    /// `e_{a_1}, ..., e_{a_i}` to `e_0` the support parity is
    /// `(a_1 + ... + a_i) mod 2`.
    pub fn support_parity(&self) -> Option<u8> {
        let mut parities = self.coeffs.keys().map(|&j| (j % 2) as u8);
        let first = parities.next()?;
        parities.all(|p| p == first).then_some(first)
    }
}

impl core::ops::Add for &RepRingVector {
    type Output = RepRingVector;

    fn add(self, other: &RepRingVector) -> RepRingVector {
        let mut out = self.clone();
        for (j, c) in other.iter() {
            out.add_to(j, c);
        }
        out
    }
}

/// Applies the multiplication-by-`e_a` operator: each basis term `e_b` maps
/// to `e_{b+a} + e_{b+a-2} + ... + e_{|b-a|}`, multiplicities accumulating
/// exactly.
pub fn cg_apply(v: &RepRingVector, a: u32) -> RepRingVector {
    let mut out = RepRingVector::zero();
    for (b, c) in v.iter() {
        let lo = b.abs_diff(a);
        let hi = b + a;
        let mut j = lo;
        while j <= hi {
            out.add_to(j, c);
            j += 2;
        }
    }
    out
}

/// Exact count of the Schubert problem: the coefficient of `e_0` in
/// `M_{a_m} ... M_{a_1} e_0`. Positive exactly when the problem is valid;
/// the empty problem counts 1.
pub fn kostka(p: &SchubertProblem) -> BigUint {
    kostka_of_parts(p.conditions())
}

/// [`kostka`] on a raw condition slice (order is irrelevant to the count).
pub fn kostka_of_parts(parts: &[u32]) -> BigUint {
    match kostka_u128(parts) {
        Some(k) => BigUint::from(k),
        None => kostka_big(parts),
    }
}

/// Overflow-safe fast path. Every intermediate multiplicity is bounded by
/// the total dimension `prod(a_i + 1) <= 2^sum`, so for sums up to 127 the
/// whole chain fits in `u128`. Returns `None` when that bound cannot be
/// guaranteed.
pub fn kostka_u128(parts: &[u32]) -> Option<u128> {
    let sum: u64 = parts.iter().map(|&a| u64::from(a)).sum();
    if sum > 127 {
        return None;
    }
    // cur[k] is the coefficient of e_{2k + parity}
    let mut cur: Vec<u128> = vec![1];
    let mut next: Vec<u128> = Vec::new();
    let mut parity: u32 = 0;
    let mut prefix: u32 = 0;
    for &a in parts {
        prefix += a;
        let new_parity = prefix % 2;
        let new_len = (prefix - new_parity) as usize / 2 + 1;
        // difference array over packed indices; wrapping arithmetic is exact
        // because the reconstructed prefix sums are the true (in-range) values
        next.clear();
        next.resize(new_len + 1, 0u128);
        for (k, &c) in cur.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let b = 2 * k as u32 + parity;
            let lo = b.abs_diff(a);
            let hi = b + a;
            let k_lo = ((lo - new_parity) / 2) as usize;
            let k_hi = ((hi - new_parity) / 2) as usize;
            next[k_lo] = next[k_lo].wrapping_add(c);
            next[k_hi + 1] = next[k_hi + 1].wrapping_sub(c);
        }
        let mut acc: u128 = 0;
        for slot in next.iter_mut().take(new_len) {
            acc = acc.wrapping_add(*slot);
            *slot = acc;
        }
        next.truncate(new_len);
        core::mem::swap(&mut cur, &mut next);
        parity = new_parity;
    }
    Some(if parity == 0 { cur[0] } else { 0 })
}

/// Arbitrary-precision path for sums beyond the `u128` guarantee.
fn kostka_big(parts: &[u32]) -> BigUint {
    let mut cur: Vec<BigUint> = vec![BigUint::one()];
    let mut parity: u32 = 0;
    let mut prefix: u64 = 0;
    for &a in parts {
        prefix += u64::from(a);
        let new_parity = (prefix % 2) as u32;
        let new_len = ((prefix - u64::from(new_parity)) / 2 + 1) as usize;
        let mut next: Vec<BigUint> = vec![BigUint::zero(); new_len];
        for (k, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = 2 * k as u64 + u64::from(parity);
            let lo = b.abs_diff(u64::from(a));
            let hi = b + u64::from(a);
            let mut j = lo;
            while j <= hi {
                let idx = ((j - u64::from(new_parity)) / 2) as usize;
                next[idx] += c;
                j += 2;
            }
        }
        cur = next;
        parity = new_parity;
    }
    if parity == 0 {
        cur.swap_remove(0)
    } else {
        BigUint::zero()
    }
}

/// Closed-form count for problems of shape `(1^num_ones, b)` via the
/// hook-length formula: with `c = (num_ones + b) / 2`,
/// `K(1^num_ones, b) = num_ones! (b + 1) / ((c - b)! (c + 1)!)`.
///
/// Returns 0 when `b` exceeds `c` (the problem is then invalid), matching
/// the tableau count.
pub fn hook_kostka(num_ones: u32, b: u32) -> Result<BigUint> {
    if (num_ones + b) % 2 != 0 {
        return Err(Error::Parity);
    }
    let c = (num_ones + b) / 2;
    if b > c {
        return Ok(BigUint::zero());
    }
    let numerator = factorial(num_ones) * BigUint::from(b + 1);
    let denominator = factorial(c - b) * factorial(c + 1);
    debug_assert!((&numerator % &denominator).is_zero());
    Ok(numerator / denominator)
}

fn factorial(n: u32) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
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
    fn cg_apply_single_term() {
        let v = cg_apply(&RepRingVector::basis(0), 2);
        assert_eq!(v, RepRingVector::basis(2));
    }

    #[test]
    fn cg_apply_diagonal_row() {
        let v = cg_apply(&RepRingVector::basis(3), 3);
        let weights: Vec<u32> = v.iter().map(|(j, _)| j).collect();
        assert_eq!(weights, [0, 2, 4, 6]);
        assert!(v.iter().all(|(_, c)| *c == BigUint::one()));
    }

    #[test]
    fn cg_apply_accumulates() {
        let mut v = RepRingVector::basis(1);
        v.add_to(3, &BigUint::one());
        let w = cg_apply(&v, 1);
        assert_eq!(w.coefficient(0), big(1));
        assert_eq!(w.coefficient(2), big(2));
        assert_eq!(w.coefficient(4), big(1));
        assert_eq!(w.coefficient(6), big(0));
    }

    #[test]
    fn support_parity_is_prefix_sum() {
        let chain = [2, 2, 1, 2, 3];
        let mut v = RepRingVector::basis(0);
        let mut prefix = 0u32;
        for &a in &chain {
            v = cg_apply(&v, a);
            prefix += a;
            assert_eq!(v.support_parity(), Some((prefix % 2) as u8));
        }
    }

    #[test]
    fn kostka_worked_examples() {
        assert_eq!(kostka(&p(&[2, 2, 1, 2, 3])), big(5));
        assert_eq!(kostka(&p(&[1, 1, 1, 1])), big(2));
        for a in 1..20 {
            assert_eq!(kostka(&p(&[a, a])), big(1));
        }
    }

    #[test]
    fn kostka_large_row() {
        let mut parts = vec![2u32; 14];
        parts.push(4);
        assert_eq!(kostka(&p(&parts)), big(113_841));
    }

    #[test]
    fn kostka_of_empty_is_one() {
        assert_eq!(kostka(&SchubertProblem::empty()), big(1));
    }

    #[test]
    fn kostka_zero_iff_invalid() {
        assert_eq!(kostka(&p(&[4, 1, 1])), big(0));
        assert_eq!(kostka(&p(&[2])), big(0));
    }

    #[test]
    fn kostka_agrees_with_map_model() {
        for q in [
            p(&[2, 2, 1, 2, 3]),
            p(&[1, 1, 1, 1]),
            p(&[3, 3, 2, 2]),
            p(&[4, 1, 1]),
        ] {
            let mut v = RepRingVector::basis(0);
            for &a in q.conditions() {
                v = cg_apply(&v, a);
            }
            assert_eq!(v.coefficient(0), kostka(&q));
        }
    }

    #[test]
    fn big_path_matches_fast_path() {
        // force the arbitrary-precision path and compare on a shared case
        let parts = vec![2u32; 16];
        assert_eq!(kostka_big(&parts), BigUint::from(kostka_u128(&parts).unwrap()));
        let mut mixed = vec![1u32; 10];
        mixed.extend_from_slice(&[5, 3, 2, 2]);
        assert_eq!(kostka_big(&mixed), BigUint::from(kostka_u128(&mixed).unwrap()));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(hook_kostka(4, 0).unwrap(), big(2));
        assert_eq!(hook_kostka(4, 2).unwrap(), big(3));
        assert_eq!(hook_kostka(2, 2).unwrap(), big(1));
        assert_eq!(hook_kostka(3, 2), Err(Error::Parity));
        assert_eq!(hook_kostka(2, 4).unwrap(), big(0));
    }
}
