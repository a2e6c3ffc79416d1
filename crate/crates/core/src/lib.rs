//! Construction, verification and empirical measurement of epsilon-t-nets
//! for finite hypergraphs.
//!
//! An epsilon-t-net for a hypergraph on n vertices is a family of t-element
//! vertex subsets such that every hyperedge with at least epsilon*n vertices
//! fully contains a member. The crate provides the hypergraph data model and
//! shatter machinery, exact (guarded) dimension computations, tuple
//! hypergraphs over low-crossing spanning cycles, a collection of net
//! constructions with a universal verifier and an exact branch-and-bound
//! oracle, planar range-space generators, and the Turán / pair-coloring
//! applications.

pub mod apps;
pub mod entropy;
pub mod error;
pub mod gen;
pub mod geometry;
pub mod hypergraph;
pub mod nets;
pub mod set;
pub mod tuples;
pub mod util;
pub mod vcdim;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use set::VertexSet;
