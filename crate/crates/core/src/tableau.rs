//! Two-rowed semistandard Young tableaux.
//!
//! For a problem with condition list `(a_1, ..., a_m)` (taken in a fixed
//! order) the witnessing objects are rectangular two-rowed tableaux of shape
//! `(n-1, n-1)` in which label `i` occurs exactly `a_i` times, rows weakly
//! increase, and columns strictly increase. Enumeration here is a
//! backtracking search used as an independent oracle for the counting chain
//! in [`crate::repring`]; it is never the production counter.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::problem::SchubertProblem;

/// Default cap on the number of tableaux an enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A two-rowed rectangular semistandard tableau with 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowTableau {
    row1: Vec<u32>,
    row2: Vec<u32>,
}

impl TwoRowTableau {
    /// Validates the shape and ordering constraints.
    pub fn new(row1: Vec<u32>, row2: Vec<u32>) -> Result<Self> {
        if row1.len() != row2.len() {
            return Err(Error::Precondition("rows must have equal length"));
        }
        if row1.iter().chain(&row2).any(|&x| x == 0) {
            return Err(Error::Precondition("labels are 1-based"));
        }
        let weakly_increasing = |row: &[u32]| row.windows(2).all(|w| w[0] <= w[1]);
        if !weakly_increasing(&row1) || !weakly_increasing(&row2) {
            return Err(Error::Precondition("rows must weakly increase"));
        }
        if row1.iter().zip(&row2).any(|(a, b)| a >= b) {
            return Err(Error::Precondition("columns must strictly increase"));
        }
        Ok(TwoRowTableau { row1, row2 })
    }

    pub fn row1(&self) -> &[u32] {
        &self.row1
    }

    pub fn row2(&self) -> &[u32] {
        &self.row2
    }

    /// Occurrences of each label `1..=max_label`.
    pub fn content(&self, max_label: u32) -> Vec<u32> {
        let mut counts = vec![0u32; max_label as usize];
        for &x in self.row1.iter().chain(&self.row2) {
            counts[(x - 1) as usize] += 1;
        }
        counts
    }
}

impl core::fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let write_row = |f: &mut core::fmt::Formatter<'_>, row: &[u32]| -> core::fmt::Result {
            for (k, x) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        };
        write_row(f, &self.row1)?;
        write!(f, " / ")?;
        write_row(f, &self.row2)
    }
}

/// Enumerates all tableaux for the problem's canonical condition order.
/// Invalid problems yield an empty sequence.
pub fn enumerate_tableaux(p: &SchubertProblem) -> Result<Vec<TwoRowTableau>> {
    enumerate_for_content(p.conditions(), DEFAULT_ENUMERATION_CAP)
}

/// Enumerates all tableaux for an explicit content, `content[i]` being the
/// number of occurrences of label `i + 1` (zero counts are allowed).
///
/// Results come in lexicographic order of the first-row word; the second row
/// is the sorted complement of the first. Errors with [`Error::ResourceLimit`]
/// if more than `cap` tableaux exist.
pub fn enumerate_for_content(content: &[u32], cap: u64) -> Result<Vec<TwoRowTableau>> {
    let sum: u64 = content.iter().map(|&a| u64::from(a)).sum();
    if sum % 2 != 0 {
        return Ok(Vec::new());
    }
    let half = (sum / 2) as usize;
    let mut out = Vec::new();
    let mut row1_counts = vec![0u32; content.len()];
    search(content, half, 0, 0, 0, &mut row1_counts, &mut out, cap)?;
    Ok(out)
}

/// Backtracking over how many copies of each label the first row takes.
///
/// A choice of first-row multiset extends to a (unique) tableau exactly when
/// for every label v, the second row's entries with label <= v fit strictly
/// under first-row entries with label <= v - 1; equivalently
/// `2 * placed(v-1) + take(v) >= content(<= v)`. The second row is then the
/// sorted complement and every column is strict. Larger first-row counts for
/// small labels are tried first, which yields lexicographic order of the
/// first-row word.
#[allow(clippy::too_many_arguments)]
fn search(
    content: &[u32],
    half: usize,
    label_idx: usize,
    placed: u64,
    prefix_content: u64,
    row1_counts: &mut [u32],
    out: &mut Vec<TwoRowTableau>,
    cap: u64,
) -> Result<()> {
    if label_idx == content.len() {
        if placed == half as u64 {
            if out.len() as u64 >= cap {
                return Err(Error::ResourceLimit { cap });
            }
            out.push(assemble(content, row1_counts));
        }
        return Ok(());
    }
    let avail = u64::from(content[label_idx]);
    let room = half as u64 - placed;
    let max_take = avail.min(room);
    let new_prefix = prefix_content + avail;
    let mut take = max_take as i64;
    while take >= 0 {
        if 2 * placed + take as u64 >= new_prefix {
            row1_counts[label_idx] = take as u32;
            search(
                content,
                half,
                label_idx + 1,
                placed + take as u64,
                new_prefix,
                row1_counts,
                out,
                cap,
            )?;
            row1_counts[label_idx] = 0;
        } else {
            break; // smaller takes only get worse
        }
        take -= 1;
    }
    Ok(())
}

fn assemble(content: &[u32], row1_counts: &[u32]) -> TwoRowTableau {
    let mut row1 = Vec::new();
    let mut row2 = Vec::new();
    for (idx, (&total, &in_row1)) in content.iter().zip(row1_counts).enumerate() {
        let label = idx as u32 + 1;
        row1.extend(core::iter::repeat(label).take(in_row1 as usize));
        row2.extend(core::iter::repeat(label).take((total - in_row1) as usize));
    }
    debug_assert!(row1.iter().zip(&row2).all(|(a, b)| a < b));
    TwoRowTableau { row1, row2 }
}

/// The tableau injection behind the strict count inequality
/// `K(b, alpha, beta+gamma) < K(b, gamma, beta+alpha)` for a reduced problem
/// `(b_1, ..., b_m, alpha, beta, gamma)` with `alpha <= beta <= gamma` and
/// `alpha < gamma`.
///
/// The input tableau has content `(b_1, ..., b_m, alpha, beta+gamma)` on
/// labels `1..=m+2`. Writing `a` for the number of `(m+1)`s in its first
/// row, the image keeps the first row and rewrites the tail of the second to
/// `(m+1)^(gamma-a) (m+2)^(beta+alpha)`.
pub fn iota_injection(
    t: &TwoRowTableau,
    b: &[u32],
    alpha: u32,
    beta: u32,
    gamma: u32,
) -> Result<TwoRowTableau> {
    if !(alpha <= beta && beta <= gamma) {
        return Err(Error::Precondition("need alpha <= beta <= gamma"));
    }
    if alpha >= gamma {
        return Err(Error::Precondition("need alpha < gamma"));
    }
    let mut parent: Vec<u32> = b.to_vec();
    parent.extend_from_slice(&[alpha, beta, gamma]);
    let parent = SchubertProblem::new(parent)?;
    if !parent.is_reduced() {
        return Err(Error::Precondition("parent problem must be reduced"));
    }

    let m = b.len() as u32;
    let mut expected: Vec<u32> = b.to_vec();
    expected.extend_from_slice(&[alpha, beta + gamma]);
    if t.content(m + 2) != expected {
        return Err(Error::Precondition("tableau content does not match source"));
    }

    let a = t.row1.iter().filter(|&&x| x == m + 1).count() as u32;
    // the second row ends with (m+1)^(alpha-a) (m+2)^(beta+gamma); keep the
    // part filled by labels <= m and rewrite the tail
    let keep = t.row2.iter().take_while(|&&x| x <= m).count();
    let mut row2 = t.row2[..keep].to_vec();
    row2.extend(core::iter::repeat(m + 1).take((gamma - a) as usize));
    row2.extend(core::iter::repeat(m + 2).take((beta + alpha) as usize));
    TwoRowTableau::new(t.row1.clone(), row2)
}

/// A tableau of content `(b_1, ..., b_m, gamma, beta+alpha)` that is outside
/// the image of [`iota_injection`]: take any tableau of content
/// `(b_1, ..., b_m, gamma-alpha-1, beta-1)` and append `alpha + 1` columns of
/// `m+1` over `m+2`. Its first row then holds more than `alpha` copies of
/// `m+1`, which no image tableau does.
///
/// Returns `None` only if the seed content admits no tableau, which cannot
/// happen when the parent problem is reduced.
pub fn iota_witness(b: &[u32], alpha: u32, beta: u32, gamma: u32) -> Option<TwoRowTableau> {
    let m = b.len() as u32;
    let mut seed_content: Vec<u32> = b.to_vec();
    seed_content.extend_from_slice(&[gamma - alpha - 1, beta - 1]);
    let seed = enumerate_for_content(&seed_content, 1).ok()?.pop()?;
    let mut row1 = seed.row1;
    let mut row2 = seed.row2;
    row1.extend(core::iter::repeat(m + 1).take((alpha + 1) as usize));
    row2.extend(core::iter::repeat(m + 2).take((alpha + 1) as usize));
    TwoRowTableau::new(row1, row2).ok()
}
