//! Exact computational toolkit for group operads and crossed interval groups.
//!
//! The library implements, over exact arithmetic and with exhaustive checks at
//! bounded degree:
//!
//! - the symmetric-group operad and its block composition ([`perm`]);
//! - the category of intervals, its morphism calculus, and the
//!   active/inert factorization ([`interval`]);
//! - crossed interval groups, the wreath construction `W(H0, H1)`, and the
//!   named instances (symmetric, hyperoctahedral, Weyl, reflection)
//!   ([`crossed`]);
//! - operads, group operads, and the semidirect product over the symmetric
//!   operad ([`operad`]), plus the braid operad with Artin-action equality
//!   ([`braid`]);
//! - the embedding of pointed operads into interval sets and its
//!   crossed-group refinement ([`embed`]);
//! - operadicity and tameness deciders with the associated quotients
//!   ([`operadic`]);
//! - the Hochschild chain complex of an associative algebra built through the
//!   paracyclic category and the monoidal total category, cross-checked
//!   against the classical boundary ([`homology`]).
//!
//! All verification entry points return structured [`report::Report`]s that
//! carry witnesses for every violation. Heavy loops run on rayon when the
//! default `parallel` feature is enabled and fall back to sequential
//! iteration otherwise; both paths are always exposed for benchmarking via
//! [`exec::Exec`].



pub mod algebra;
pub mod braid;
pub mod embed;
pub mod crossed;

pub mod exec;
pub mod group;

pub mod interval;
pub mod operad;
pub mod operadic;
pub mod paracyclic;


pub mod perm;

pub mod ratmat;
pub mod report;
pub mod util;

pub use crate::interval::{IntervalMorphism, Point, SignedPermutation};
pub use crate::perm::Permutation;
pub use crate::report::{Report, Status, Violation};
