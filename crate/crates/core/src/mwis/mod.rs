//! Max Weight Independent Set over nice refined tree decompositions.

mod dp;
mod family;

pub use dp::{
    solve_mwis, solve_mwis_nice, solve_mwis_plain, solve_mwis_with, MwisSolution, SolveOptions,
};
pub use family::{enumerate_bag_independent_sets, BagIndependentFamily, BagSet};
