//! Restricted edge-connectivity of graphs and graph products.
//!
//! Graphs are simple and undirected on `0..n`. λ_k(G) is the minimum number
//! of edges whose removal leaves only components of order at least `k`;
//! [`connectivity`] computes it by max-flow and by exhaustive search.
#![no_std]
extern crate alloc;

pub mod connectivity;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod products;
pub mod theorem;

pub use connectivity::{CutValue, Method, RestrictedCut};
pub use graph::{CutResult, Graph, GraphError, VertexSet};
