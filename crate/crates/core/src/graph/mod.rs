//! Graphs, exact small-instance invariants and generators.

mod bitset;
mod chordal;
pub mod generators;
#[allow(clippy::module_inception)]
mod graph;
mod independence;
pub mod io;
mod ramsey;

pub use bitset::VertexSet;
pub(crate) use bitset::{low_bits, mask_bits};
pub use chordal::{
    clique_tree, is_chordal, is_perfect_elimination_ordering, maximal_cliques_chordal,
    maximum_cardinality_search,
};
pub use graph::{Graph, Relabeling, DEFAULT_MATRIX_CAP};
pub(crate) use independence::alpha_of_mask;
pub use independence::{
    alpha_exact, alpha_exact_with_cap, alpha_within, is_independent, max_clique_within,
    max_independent_set_within, omega_exact, omega_exact_with_cap, DEFAULT_EXACT_CAP,
};
pub use ramsey::ramsey_binding_bound;
