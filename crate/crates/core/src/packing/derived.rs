use rayon::prelude::*;

use crate::decomposition::{validate, RefinedTreeDecomposition};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::packing::family::SubgraphFamily;

/// How [`derived_graph_with`] finds conflicting members.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DerivedMethod {
    /// Closed neighbourhoods of members (everything within distance two of a
    /// virtual vertex joined to the member) matched through a vertex-to-member
    /// index. Linear in the total size of the reach sets plus the output.
    #[default]
    ReachSets,
    /// Direct test of every pair of members; reference implementation.
    Pairwise,
}

/// The conflict graph `G(H)` on the member indices: `i ~ j` iff the members
/// share a vertex or an edge of `g` joins them.
pub fn derived_graph(g: &Graph, family: &SubgraphFamily) -> Result<Graph> {
    derived_graph_with(g, family, DerivedMethod::ReachSets)
}

pub fn derived_graph_with(
    g: &Graph,
    family: &SubgraphFamily,
    method: DerivedMethod,
) -> Result<Graph> {
    family.check_host(g)?;
    let edges = match method {
        DerivedMethod::ReachSets => reach_set_edges(g, family),
        DerivedMethod::Pairwise => pairwise_edges(g, family),
    };
    Graph::new(family.len(), &edges)
}

/// `owners[v]` lists the members containing `v`, ascending.
pub(crate) fn member_index(family: &SubgraphFamily) -> Vec<Vec<usize>> {
    let mut owners = vec![Vec::new(); family.host_order()];
    for (j, member) in family.members().iter().enumerate() {
        for v in member {
            owners[v].push(j);
        }
    }
    owners
}

fn reach_set_edges(g: &Graph, family: &SubgraphFamily) -> Vec<(usize, usize)> {
    let owners = member_index(family);
    let per_member: Vec<Vec<(usize, usize)>> = (0..family.len())
        .into_par_iter()
        .map(|j| {
            let mut reach = family.member(j).clone();
            for v in family.member(j) {
                for &u in g.neighbors(v) {
                    reach.insert(u);
                }
            }
            let mut later: Vec<usize> = reach
                .iter()
                .flat_map(|v| owners[v].iter().copied())
                .filter(|&i| i > j)
                .collect();
            later.sort_unstable();
            later.dedup();
            later.into_iter().map(|i| (j, i)).collect()
        })
        .collect();
    per_member.into_iter().flatten().collect()
}

fn pairwise_edges(g: &Graph, family: &SubgraphFamily) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if !family.compatible(g, i, j) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Moves `td` onto `G(H)`: the bag of node `t` becomes every member meeting
/// `X_t`, over the same tree. Refined sets are dropped; the residual bound of
/// a refined decomposition does not carry over to the derived graph.
///
/// Every bag of the result induces in `G(H)` no larger an independent set
/// than the original bag does in `g`: pairwise compatible members meeting
/// `X_t` pick pairwise non-adjacent vertices of `X_t`.
pub fn derived_decomposition(
    g: &Graph,
    family: &SubgraphFamily,
    td: &RefinedTreeDecomposition,
) -> Result<RefinedTreeDecomposition> {
    family.check_host(g)?;
    validate(g, td).into_result()?;
    let owners = member_index(family);
    let bags = td
        .bags()
        .iter()
        .map(|bag| {
            let mut derived = VertexSet::new(family.len());
            for v in bag {
                for &j in &owners[v] {
                    derived.insert(j);
                }
            }
            derived
        })
        .collect();
    Ok(RefinedTreeDecomposition::new(
        family.len(),
        bags,
        td.tree_edges().to_vec(),
    ))
}
