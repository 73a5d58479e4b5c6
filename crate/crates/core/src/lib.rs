//! Graph invariants, independence complexes, and simplicial homology for
//! verifying regularity bounds on edge rings of small graphs.
//!
//! The crate is organized bottom-up: bit-mask vertex sets and graphs, then
//! matching-style invariants, then the independence complex with its face
//! enumeration and homology over prime fields, and finally a theorem registry
//! plus sweep harness that checks the implemented statements against every
//! graph in scope.

pub mod bitset;
pub mod cm;
pub mod enumerate;
pub mod field;
pub mod formats;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod hochster;
pub mod homology;
pub mod matching;
pub mod selftest;
pub mod simplicial;
pub mod structure;
pub mod theorems;

pub use bitset::VertexSet;
pub use graph::{Edge, Graph};
pub use simplicial::SimplicialComplex;
