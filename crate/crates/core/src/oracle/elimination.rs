//! Exact tree-independence number and treewidth by dynamic programming over
//! sets of eliminated vertices.
//!
//! Why elimination orderings suffice: the bags of any tree decomposition `T`
//! induce a chordal supergraph `H` (join vertices sharing a bag), and every
//! maximal clique of `H` lies inside a bag of `T`. Every chordal supergraph is
//! the fill-in of some elimination ordering, whose elimination bags are cliques
//! of `H`. Since α is monotone under taking subsets, the best elimination
//! ordering is at least as good as `T`, for α and for bag size alike.
//!
//! The bag of `v` after eliminating `E` depends only on `E`, so the state is
//! the eliminated set: `best(E) = min_{v ∈ E} max(best(E \ v), cost(bag(v, E \ v)))`.

use std::collections::HashMap;

use crate::decomposition::{trivial_decomposition, RefinedTreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{alpha_of_mask, clique_tree, mask_bits, Graph, VertexSet};

/// Largest graph the subset DP accepts by default (`2^n · n` states).
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Hard ceiling even with a raised cap; the DP tables are indexed by `u32` masks.
pub const MAX_ORACLE_CAP: usize = 30;

/// `{v}` plus every vertex outside `E ∪ {v}` reachable from `v` by a path whose
/// internal vertices all lie in `E`.
pub fn elimination_bag(g: &Graph, v: usize, eliminated: &VertexSet) -> Result<VertexSet> {
    g.check_vertex(v)?;
    g.check_set(eliminated)?;
    if eliminated.contains(v) {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} is already eliminated"
        )));
    }
    let mut bag = VertexSet::new(g.n());
    bag.insert(v);
    let mut seen = VertexSet::new(g.n());
    seen.insert(v);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if seen.insert(y) {
                if eliminated.contains(y) {
                    stack.push(y);
                } else {
                    bag.insert(y);
                }
            }
        }
    }
    Ok(bag)
}

/// Mask version of [`elimination_bag`].
#[inline]
fn bag_mask(adj: &[u64], v: usize, eliminated: u64) -> u64 {
    let mut reached = adj[v];
    let mut inside = reached & eliminated;
    let mut visited = 0u64;
    while inside & !visited != 0 {
        let fresh = inside & !visited;
        visited |= fresh;
        for x in mask_bits(fresh) {
            reached |= adj[x];
        }
        inside = reached & eliminated;
    }
    (reached & !eliminated) | (1 << v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Runs the subset DP minimizing the maximum bag cost; returns the optimum and
/// an optimal elimination ordering.
fn optimal_elimination(
    g: &Graph,
    limits: OracleLimits,
    what: &'static str,
    mut cost: impl FnMut(u64) -> u32,
) -> Result<(u32, Vec<usize>)> {
    let n = g.n();
    let cap = limits.max_vertices.min(MAX_ORACLE_CAP);
    if n > cap {
        return Err(Error::CapExceeded { what, size: n, cap });
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let states = 1usize << n;
    let mut best = vec![u32::MAX; states];
    let mut last = vec![u8::MAX; states];
    best[0] = 0;
    for set in 1..states {
        let mask = set as u64;
        let mut value = u32::MAX;
        let mut pick = u8::MAX;
        for v in mask_bits(mask) {
            let before = (mask & !(1 << v)) as usize;
            if best[before] >= value {
                continue;
            }
            let c = best[before].max(cost(bag_mask(&adj, v, before as u64)));
            if c < value {
                value = c;
                pick = v as u8;
            }
        }
        best[set] = value;
        last[set] = pick;
    }
    let mut order = Vec::with_capacity(n);
    let mut set = states - 1;
    while set != 0 {
        let v = last[set] as usize;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    Ok((best[states - 1], order))
}

/// Exact tree-independence number with a witness decomposition attaining it.
pub fn tin_exact(g: &Graph) -> Result<(usize, RefinedTreeDecomposition)> {
    tin_exact_with(g, OracleLimits::default())
}

pub fn tin_exact_with(
    g: &Graph,
    limits: OracleLimits,
) -> Result<(usize, RefinedTreeDecomposition)> {
    if g.is_null() {
        return Ok((0, trivial_decomposition(g)));
    }
    let adj = g.adjacency_masks().ok_or(Error::CapExceeded {
        what: "tree-independence number",
        size: g.n(),
        cap: limits.max_vertices.min(MAX_ORACLE_CAP),
    })?;
    let mut memo: HashMap<u64, u32> = HashMap::new();
    let (value, order) = optimal_elimination(g, limits, "tree-independence number", |bag| {
        *memo.entry(bag).or_insert_with(|| alpha_of_mask(&adj, bag))
    })?;
    Ok((value as usize, fill_in_clique_tree(g, &order)?))
}

/// Exact treewidth; `-1` for the null graph.
pub fn treewidth_exact(g: &Graph) -> Result<isize> {
    treewidth_exact_with(g, OracleLimits::default())
}

pub fn treewidth_exact_with(g: &Graph, limits: OracleLimits) -> Result<isize> {
    if g.is_null() {
        return Ok(-1);
    }
    let (value, _) = optimal_elimination(g, limits, "treewidth", |bag| bag.count_ones())?;
    Ok(value as isize - 1)
}

/// Clique tree of the chordal fill-in produced by eliminating in `order`.
pub fn fill_in_clique_tree(g: &Graph, order: &[usize]) -> Result<RefinedTreeDecomposition> {
    let mut eliminated = VertexSet::new(g.n());
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for &v in order {
        let bag = elimination_bag(g, v, &eliminated)?.to_vec();
        for (i, &a) in bag.iter().enumerate() {
            for &b in &bag[i + 1..] {
                edges.push((a, b));
            }
        }
        eliminated.insert(v);
    }
    let fill = Graph::new(g.n(), &edges)?;
    clique_tree(&fill)
}

/// Elimination bags of every vertex of `order`, as masks. Test support.
#[cfg(test)]
pub(crate) fn elimination_bags(g: &Graph, order: &[usize]) -> Vec<u64> {
    let adj = g.adjacency_masks().unwrap();
    let mut eliminated = 0u64;
    order
        .iter()
        .map(|&v| {
            let bag = bag_mask(&adj, v, eliminated);
            eliminated |= 1 << v;
            bag
        })
        .collect()
}
