//! Exact graph invariants for binomial edge ideals.
//!
//! The crate computes the number of maximal cliques `c(G)`, the maximum size
//! `η(G)` of a clique-disjoint edge set, the induced-path invariant `L(G)`,
//! and the number `iv(G)` of non-free vertices. It also carries an independent
//! desk-scale oracle for the Castelnuovo–Mumford regularity of `S/J_G`, and
//! checkers for the inequality chain `L(G) ≤ reg S/J_G ≤ η(G) ≤ c(G)` and for
//! the conditions that make an invariant an upper bound on the regularity.

pub mod bitset;
pub mod compat;
pub mod error;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod registry;
pub mod regularity;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Induced};
