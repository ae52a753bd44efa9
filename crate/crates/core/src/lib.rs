//! Tree decompositions measured by the independence number of their bags.
//!
//! The crate covers validation and measurement of (refined) tree
//! decompositions, conversion to nice form, a maximum weight independent set
//! dynamic program whose cost is governed by the residual independence number
//! of the bags, independent packings of connected subgraphs reduced to that
//! program, and exact exponential oracles used as ground truth.
//!
//! Vertices are `0..n` in memory. Every file format is 1-indexed.

pub mod decomposition;
mod error;
pub mod graph;
pub mod mwis;
pub mod oracle;
pub mod packing;
mod weight;

pub use decomposition::{NiceRefinedTreeDecomposition, RefinedTreeDecomposition};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use mwis::{solve_mwis, MwisSolution};
pub use weight::{Weight, WeightMap};
