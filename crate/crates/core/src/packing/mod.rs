//! Maximum weight independent packings of connected subgraphs, solved as
//! MWIS on the derived conflict graph.

mod derived;
mod family;
pub mod io;
mod patterns;
mod solve;

pub use derived::{derived_decomposition, derived_graph, derived_graph_with, DerivedMethod};
pub use family::{PackingInstance, SubgraphFamily};
pub use patterns::{
    blob_family, connected_sets, enumerate_f_subgraphs, spans, Pattern, BLOB_CAP, PATTERN_CAP,
};
pub use solve::{
    brute_force_packing, dissociation_set, induced_matching, k_separator, solve_packing,
    solve_packing_with, ComponentSeparator, PackingSolution, SolvedPacking,
    BRUTE_FORCE_PACKING_CAP,
};
