//! (Refined) tree decompositions: validation, measures, nice form,
//! clique-cutset composition and the `.td` format.

mod compose;
pub mod io;
mod nice;
mod refined;

pub use compose::compose_clique_cutset;
pub use nice::{make_nice, NiceRefinedTreeDecomposition, NodeKind, NICE_NODE_FACTOR};
pub use refined::{
    independence_number, independence_number_with_cap, residual_independence_number,
    residual_independence_number_with_cap, trivial_decomposition, validate,
    RefinedTreeDecomposition, ValidationReport, Violation,
};
