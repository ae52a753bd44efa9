use crate::decomposition::refined::{validate, RefinedTreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Glues decompositions of `G[A ∪ C]` and `G[B ∪ C]` along a clique cutset `C`.
///
/// `(A, B, C)` must partition `V(G)` with `A`, `B` nonempty, no edge between
/// `A` and `B`, and `C` a clique. Both input decompositions use the vertex ids
/// of `G`. Each has a bag containing `C`; the lowest such node of either side is
/// linked by one tree edge. Nodes of `td_a` keep their ids, nodes of `td_b`
/// follow. The result's (residual) independence number is the maximum of the
/// two inputs'.
pub fn compose_clique_cutset(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    c: &VertexSet,
    td_a: &RefinedTreeDecomposition,
    td_b: &RefinedTreeDecomposition,
) -> Result<RefinedTreeDecomposition> {
    for set in [a, b, c] {
        if set.universe() != g.n() {
            return Err(Error::NotCutPartition(format!(
                "vertex set over {} vertices for a graph on {}",
                set.universe(),
                g.n()
            )));
        }
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::NotCutPartition("both sides must be nonempty".into()));
    }
    if a.intersects(b) || a.intersects(c) || b.intersects(c) {
        return Err(Error::NotCutPartition("sides overlap".into()));
    }
    if a.len() + b.len() + c.len() != g.n() {
        return Err(Error::NotCutPartition(
            "sides do not cover every vertex".into(),
        ));
    }
    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| (a.contains(u) && b.contains(v)) || (b.contains(u) && a.contains(v)))
    {
        return Err(Error::NotCutPartition(format!(
            "edge ({}, {}) joins the two sides",
            u + 1,
            v + 1
        )));
    }
    if let Some((u, v)) = g.non_adjacent_pair(c) {
        return Err(Error::CutsetNotClique(u, v));
    }

    let side_a = a.union(c);
    let side_b = b.union(c);
    check_side(g, &side_a, td_a, "A")?;
    check_side(g, &side_b, td_b, "B")?;
    let anchor_a = td_a
        .nodes_containing(c)
        .next()
        .ok_or(Error::NoBagContainsCutset("A"))?;
    let anchor_b = td_b
        .nodes_containing(c)
        .next()
        .ok_or(Error::NoBagContainsCutset("B"))?;

    let offset = td_a.node_count();
    let bags = td_a.bags().iter().chain(td_b.bags()).cloned().collect();
    let refined = td_a
        .refined_sets()
        .iter()
        .chain(td_b.refined_sets())
        .cloned()
        .collect();
    let mut edges: Vec<(usize, usize)> = td_a.tree_edges().to_vec();
    edges.extend(
        td_b.tree_edges()
            .iter()
            .map(|&(x, y)| (x + offset, y + offset)),
    );
    edges.push((anchor_a, anchor_b + offset));
    Ok(RefinedTreeDecomposition::new(g.n(), bags, edges).with_refined(refined))
}

/// Validates a decomposition of `G[side]` expressed in the ids of `G`.
fn check_side(
    g: &Graph,
    side: &VertexSet,
    td: &RefinedTreeDecomposition,
    name: &'static str,
) -> Result<()> {
    let invalid = |why: String| Error::InvalidDecomposition(format!("side {name}: {why}"));
    if td.universe() != g.n() {
        return Err(invalid(format!(
            "decomposition is over {} vertices, graph has {}",
            td.universe(),
            g.n()
        )));
    }
    if let Some(v) = td
        .bags()
        .iter()
        .find_map(|bag| bag.difference(side).first())
    {
        return Err(invalid(format!("vertex {} lies outside the side", v + 1)));
    }
    let (sub, map) = g.induced_subgraph(side)?;
    let relabel = |set: &VertexSet| {
        VertexSet::from_vertices(
            sub.n(),
            set.iter().map(|v| map.old_to_new[v].expect("inside side")),
        )
    };
    let bags = td.bags().iter().map(relabel).collect::<Result<Vec<_>>>()?;
    let refined = td
        .refined_sets()
        .iter()
        .map(|u| relabel(&u.intersection(side)))
        .collect::<Result<Vec<_>>>()?;
    if let Some((t, v)) = td
        .refined_sets()
        .iter()
        .enumerate()
        .find_map(|(t, u)| u.difference(side).first().map(|v| (t, v)))
    {
        return Err(invalid(format!(
            "refined vertex {} of node {} lies outside the side",
            v + 1,
            t + 1
        )));
    }
    let local = RefinedTreeDecomposition::new(sub.n(), bags, td.tree_edges().to_vec())
        .with_refined(refined);
    validate(&sub, &local)
        .into_result()
        .map_err(|e| invalid(e.to_string()))
}
