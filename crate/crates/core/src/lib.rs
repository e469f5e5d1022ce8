//! Exact Schubert calculus of lines.
//!
//! A Schubert problem of lines in projective space is encoded by its list of
//! condition codimensions; its solution count is a two-rowed Kostka number.
//! This crate computes those counts exactly, enumerates the witnessing
//! tableaux, produces certificate trees showing that the Galois group of any
//! such problem is at least alternating, and cross-checks the counts against
//! a trigonometric integral formula coming from the spectral decomposition of
//! the Clebsch-Gordan operators.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live
//! in the companion `schublines` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod problem;
pub mod repring;
pub mod spectral;
pub mod tableau;
pub mod verify;

pub use error::Error;
pub use problem::SchubertProblem;
pub use repring::{cg_apply, hook_kostka, kostka, kostka_of_parts, kostka_u128, RepRingVector};
pub use tableau::{
    enumerate_for_content, enumerate_tableaux, iota_injection, iota_witness, TwoRowTableau,
};
pub use verify::{
    a2_difference, all_valid_problems_up_to_sum, enumerate_problems, equal_case_check,
    find_discriminating_rearrangement, find_discriminating_rearrangement_with, for_each_problem,
    validate_certificate, verify_at_least_alternating, AlternatingCertificate, Clause,
    Discrimination, EqualCaseCheck, Verifier,
};

pub use num_bigint::{BigInt, BigUint};
