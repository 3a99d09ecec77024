//! Questions as topologies on finite sets of irreducible assertions.
//!
//! A question over a ground set `X` is a topology on `X`; its open sets are the
//! candidate answers. This crate provides the kernel types ([`GroundSet`],
//! [`Subset`], [`SubsetFamily`], [`Topology`]), the elimination operator
//! `T - N(x)` with its three-way classification ([`Resolution`]), negation
//! questions and clopen communication ([`MachinePair`]), and exhaustive
//! enumeration of every question on ground sets of up to
//! [`MAX_ENUMERATION_SIZE`] points.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

mod calculus;
mod enumeration;
mod error;
mod negation;
mod sets;

pub use calculus::{QuestionType, Resolution, ResolutionStep};
pub use enumeration::{
    count_topologies, decode_family, elimination_efficiency, encode_family, enumerate_topologies,
    enumeration_report, family_codes, find_definite_questions, first_open_partitions,
    parent_questions, Constraints, EnumerationReport, FamilyCodes, PointCensus, Topologies,
    MAX_ENUMERATION_SIZE,
};
pub use error::Error;
pub use negation::{atomic_machine_census, is_sigma_field, AtomicMachine, MachinePair};
pub use sets::{
    check_topology, generated_topology, is_topology, Axiom, AxiomViolation, GroundSet, Subset,
    SubsetFamily, Topology, MAX_GROUND_SIZE,
};
