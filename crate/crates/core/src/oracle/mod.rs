//! Exact ground truth at desk scale.

mod brute;
mod elimination;

pub use brute::{brute_force_mwis, BRUTE_FORCE_CAP};
pub use elimination::{
    elimination_bag, fill_in_clique_tree, tin_exact, tin_exact_with, treewidth_exact,
    treewidth_exact_with, OracleLimits, DEFAULT_ORACLE_CAP, MAX_ORACLE_CAP,
};
