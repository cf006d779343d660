//! Spectral conditions for Hamiltonian properties of graphs with large minimum degree.
//!
//! The crate covers the graph algebra (complement, quasi-complement, join, union, `⊔`),
//! adjacency and signless-Laplacian spectral radii, the degree-sum closures, the
//! extremal families, exact Hamiltonicity oracles, and checkers that turn a graph
//! plus a minimum-degree parameter into a certified verdict.

pub mod bitset;
pub mod closure;
pub mod conditions;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod iso;
pub mod oracle;
pub mod report;
pub mod spectral;
pub mod survey;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph, GraphStats, Part};
