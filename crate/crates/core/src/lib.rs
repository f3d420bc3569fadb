//! Counting and listing finite semirings.
//!
//! A semiring here is a set with a commutative associative addition and an
//! associative multiplication that distributes over it on both sides; no
//! identities are required. Classes are counted up to isomorphism, or up to
//! isomorphism or anti-isomorphism, optionally restricted to semirings with a
//! zero, with a one, additively idempotent ones, or commutative ones.
//!
//! The building blocks are exposed as modules:
//!
//! * [`table`]: Cayley tables, the axioms, relabelling and canonical forms.
//! * [`perm`] and [`group`]: permutations, automorphism groups, double cosets.
//! * [`semigroups`]: orderly generation of semigroups up to (anti-)isomorphism.
//! * [`census`]: the semiring census over double-coset representatives.
//! * [`report`], [`records`] and [`cli`]: reference tables, JSONL exchange
//!   and the command-line front end.

pub mod cache;
pub mod census;
pub mod cli;
pub mod error;
pub mod group;
pub mod perm;
pub mod records;
pub mod report;
pub mod semigroups;
pub mod table;

pub use census::{
    census_self_check, count_semirings, enumerate_semirings, filter_predicates, verify_semiring,
    Census, CensusQuery, CensusResult, Filter, Provenance, SelfCheck, SemiringPair,
    VerificationReport,
};
pub use error::{Error, Result};
pub use group::{
    aut_star_group, automorphism_group, double_coset_reps, double_cosets, group_closure,
    PermGroup,
};
pub use perm::{all_perms, compose, Permutation};
pub use semigroups::{
    count_semigroups, enumerate_semigroups, Reach, SemigroupClass, SemigroupConstraint,
};
pub use table::{distributes, distributes_report, zero_element, Equivalence, Law, OpTable};
