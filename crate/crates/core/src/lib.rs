//! Finite graphs treated as maps from edges to endpoint pairs, with the
//! machinery that grows out of that view: relational systems, four kinds of
//! vertex maps and exhaustive universal-property verification, quotients by
//! connected partitions, minors, well-founded orders with a generic
//! induction fold, and transformation graphs whose vertices are derived
//! objects (spanning trees, matchings, degree-sequence realizations, edge
//! subsets).
//!
//! Everything is exact and deterministic: searches enumerate in canonical
//! (sorted-id) order, refuse over-budget inputs before starting, and return
//! inspectable witnesses.

pub mod budget;
pub mod catalog;
pub mod contraction;
pub mod error;
pub mod graph;
pub mod id;
pub mod incidence;
pub mod invariant;
pub mod io;
pub mod minor;
pub mod morphism;
pub mod order;
pub mod product;
pub mod relational;
pub mod transform;

pub use budget::DEFAULT_BUDGET;
pub use error::{Error, Result};
pub use graph::{Graph, MergeMode};
pub use id::Id;
pub use morphism::{Morphism, MorphismKind, VertexMap};
