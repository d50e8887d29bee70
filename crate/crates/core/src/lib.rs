//! Finite groupoids and their endomorphism monoids.
//!
//! A finite groupoid `G` is stored as a dense product table over element ids
//! `0..n`. From it this crate builds the two monoids of self-maps
//!
//! * `S_G  = { f : d(f(x)) = r(x) }` under `(f * g)(x) = g(f(x) x) f(x)`, identity `r`;
//! * `S'_G = { f : r(f(x)) = d(x) }` under `(h ⋆ k)(x) = h(x) k(x h(x))`, identity `d`;
//!
//! enumerates them with full Cayley tables, analyses their semigroup structure
//! (idempotents, zeros, ideals, units, cancellative submonoids), and represents
//! them as 0/1 composition operators on the coordinate space over `G`.
//!
//! All groupoids carry the discrete topology, so every self-map is continuous
//! and density means surjectivity.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod action;
mod census;
mod endo;
mod error;
mod functor;
mod groupoid;
mod limits;
mod morphism;
mod operator;
mod structure;
mod suite;
mod table;

pub use action::{transformation_groupoid, transformation_groupoid_capped, GroupAction};
pub use census::{
    census_branches, enumerate_groupoids, principal_converse_search, search_branch, Branch, Census,
    ProbeEntry, ProbeReport,
};
pub use endo::{
    canonical_elements, involution_map, involution_star, membership, star, star_into, star_prime,
    star_prime_into, translation_maps, CanonicalElements, GFun, MapSpace, Membership, Side,
    Translations,
};
pub use error::{Axiom, Error, Result};
pub use functor::{
    automorphism_audit, embedded_map, functoriality_audit, induced_map, induced_monoid_map,
    transformation_embedding_audit, AutomorphismAudit, EmbeddingAudit, FunctorAudit,
};
pub use groupoid::{AxiomStatus, Groupoid, RawGroupoid};
pub use limits::Limits;
pub use morphism::{find_isomorphism, fixed_points, isomorphisms, morphism_classify, MorphismKind};
pub use operator::{
    left_operator, representation_audit, right_operator, LinOp, RepresentationAudit, SideAudit,
};
pub use structure::{
    antihom_classification, dense_submonoid, group_of_units, ideal_check, intersection_analysis,
    involution_indices, left_zero_criterion, range_domain_criterion, range_domain_sweep,
    special_elements, subgroupoid_semigroup, units_crosscheck, AntihomVerdicts, CrossCheck,
    DenseSubmonoid, IdealFlags, Intersection, LeftZeroCriterion, RangeDomain, RangeDomainSweep,
    SpecialElements, SubSemigroup, UnitGroup,
};
pub use suite::{run_suite, PropId, StructureReport, Verdict, Witness};
pub use table::{AssocCoverage, MonoidTable};
