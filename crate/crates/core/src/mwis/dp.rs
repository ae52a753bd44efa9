use std::collections::HashMap;

use rayon::prelude::*;

use crate::decomposition::{
    make_nice, NiceRefinedTreeDecomposition, NodeKind, RefinedTreeDecomposition,
};
use crate::error::{Error, Result};
use crate::graph::{is_independent, Graph, VertexSet};
use crate::mwis::family::enumerate_at;
use crate::weight::{Weight, WeightMap};

/// Maximum weight independent set with its weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwisSolution {
    pub weight: Weight,
    pub set: VertexSet,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    /// Worker threads for tables of independent nodes; `1` runs sequentially.
    /// Results do not depend on this value.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { threads: 1 }
    }
}

#[derive(Clone, Debug)]
struct Entry {
    value: Weight,
    /// Forget nodes only: the optimum keeps the forgotten vertex.
    with_forgotten: bool,
}

/// `c[t, ·]`, keyed by ascending vertex lists.
type Table = HashMap<Vec<usize>, Entry>;

/// Maximum weight independent set of `g` given a refined tree decomposition
/// whose residual independence number is at most `k`.
///
/// Runs in `O(2^ℓ · n^(k+1) · |V(T)|)` for ℓ = max |U_t|, given the adjacency
/// matrix (graphs above the matrix cap fall back to binary-searched adjacency
/// lists, adding a logarithmic factor to every independence test).
pub fn solve_mwis(
    g: &Graph,
    weights: &WeightMap,
    td: &RefinedTreeDecomposition,
    k: usize,
) -> Result<MwisSolution> {
    solve_mwis_with(g, weights, td, k, SolveOptions::default())
}

pub fn solve_mwis_with(
    g: &Graph,
    weights: &WeightMap,
    td: &RefinedTreeDecomposition,
    k: usize,
    options: SolveOptions,
) -> Result<MwisSolution> {
    check_weights(g, weights)?;
    let nice = make_nice(g, td)?;
    solve_mwis_nice(g, weights, &nice, k, options)
}

/// Plain tree decompositions (every `U_t` empty) with independence number at
/// most `k`; runs in `O(n^(k+1) · |V(T)|)`.
pub fn solve_mwis_plain(
    g: &Graph,
    weights: &WeightMap,
    td: &RefinedTreeDecomposition,
    k: usize,
) -> Result<MwisSolution> {
    if td.refinement_level() != 0 {
        return Err(Error::InvalidParameter(
            "plain solve requires every refined set to be empty".into(),
        ));
    }
    solve_mwis(g, weights, td, k)
}

fn check_weights(g: &Graph, weights: &WeightMap) -> Result<()> {
    if weights.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "{} weights for {} vertices",
            weights.len(),
            g.n()
        )));
    }
    Ok(())
}

/// The dynamic program on an already nice decomposition.
pub fn solve_mwis_nice(
    g: &Graph,
    weights: &WeightMap,
    nice: &NiceRefinedTreeDecomposition,
    k: usize,
    options: SolveOptions,
) -> Result<MwisSolution> {
    check_weights(g, weights)?;
    let heights = nice.heights();
    let levels = heights.iter().copied().max().unwrap_or(0) + 1;
    let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); levels];
    for (t, &h) in heights.iter().enumerate() {
        by_level[h].push(t);
    }

    let mut tables: Vec<Option<Table>> = vec![None; nice.node_count()];
    let pool = (options.threads > 1)
        .then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(options.threads)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
        })
        .transpose()?;
    for level in &by_level {
        let computed: Vec<(usize, Result<Table>)> = match &pool {
            Some(pool) => pool.install(|| {
                level
                    .par_iter()
                    .map(|&t| (t, node_table(g, weights, nice, k, t, &tables)))
                    .collect()
            }),
            None => level
                .iter()
                .map(|&t| (t, node_table(g, weights, nice, k, t, &tables)))
                .collect(),
        };
        for (t, table) in computed {
            tables[t] = Some(table?);
        }
    }

    let root = nice.root();
    let value = tables[root].as_ref().expect("root table")[&Vec::new()]
        .value
        .clone();
    let set = reconstruct(g, nice, &tables);
    assert!(
        is_independent(g, &set)?,
        "reconstructed set is not independent"
    );
    assert_eq!(
        weights.total(set.iter()),
        value,
        "witness weight differs from table value"
    );
    Ok(MwisSolution { weight: value, set })
}

fn node_table(
    g: &Graph,
    weights: &WeightMap,
    nice: &NiceRefinedTreeDecomposition,
    k: usize,
    t: usize,
    tables: &[Option<Table>],
) -> Result<Table> {
    let family = enumerate_at(g, nice.bag(t), nice.refined(t), k, t)?;
    let child = |i: usize| tables[nice.children(t)[i]].as_ref().expect("child table");
    let mut table = Table::with_capacity(family.len());
    for member in family.sets {
        let s = member.set;
        let entry = match nice.kind(t) {
            NodeKind::Leaf => Entry {
                value: Weight::zero(),
                with_forgotten: false,
            },
            NodeKind::Introduce(v) => {
                let value = match s.binary_search(&v) {
                    Ok(pos) => {
                        let mut rest = s.clone();
                        rest.remove(pos);
                        &child(0)[&rest].value + weights.get(v)
                    }
                    Err(_) => child(0)[&s].value.clone(),
                };
                Entry {
                    value,
                    with_forgotten: false,
                }
            }
            NodeKind::Forget(v) => {
                let without = &child(0)[&s].value;
                let mut grown = s.clone();
                grown.insert(grown.binary_search(&v).unwrap_err(), v);
                match child(0).get(&grown) {
                    Some(with) if with.value > *without => Entry {
                        value: with.value.clone(),
                        with_forgotten: true,
                    },
                    _ => Entry {
                        value: without.clone(),
                        with_forgotten: false,
                    },
                }
            }
            NodeKind::Join => {
                let sum = &child(0)[&s].value + &child(1)[&s].value;
                Entry {
                    value: &sum - &weights.total(s.iter().copied()),
                    with_forgotten: false,
                }
            }
        };
        table.insert(s, entry);
    }
    Ok(table)
}

/// Walks the tables from `c[root, ∅]` down, collecting every chosen bag set.
fn reconstruct(
    g: &Graph,
    nice: &NiceRefinedTreeDecomposition,
    tables: &[Option<Table>],
) -> VertexSet {
    let mut chosen = VertexSet::new(g.n());
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(nice.root(), Vec::new())];
    while let Some((t, s)) = stack.pop() {
        s.iter().for_each(|&v| {
            chosen.insert(v);
        });
        let kids = nice.children(t);
        match nice.kind(t) {
            NodeKind::Leaf => {}
            NodeKind::Introduce(v) => {
                let rest = s.iter().copied().filter(|&x| x != v).collect();
                stack.push((kids[0], rest));
            }
            NodeKind::Forget(v) => {
                let entry = &tables[t].as_ref().expect("table")[&s];
                let mut next = s.clone();
                if entry.with_forgotten {
                    next.insert(next.binary_search(&v).unwrap_err(), v);
                }
                stack.push((kids[0], next));
            }
            NodeKind::Join => {
                stack.push((kids[0], s.clone()));
                stack.push((kids[1], s));
            }
        }
    }
    chosen
}
