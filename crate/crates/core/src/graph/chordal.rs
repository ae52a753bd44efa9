//! Chordality via maximum cardinality search, and clique trees.

use crate::decomposition::RefinedTreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::bitset::VertexSet;
use crate::graph::Graph;

/// Maximum cardinality search visit order (ties broken by lowest id).
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Whether `order` is a perfect elimination ordering: every vertex is
/// simplicial in the subgraph induced by itself and the vertices after it.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| position[u] > position[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| position[u]) else {
            continue;
        };
        if later.iter().any(|&u| u != parent && !g.has_edge(parent, u)) {
            return false;
        }
    }
    true
}

/// Chordality test. On success returns a perfect elimination ordering in
/// elimination order: the first vertex is simplicial in `G`, and each vertex is
/// simplicial in the subgraph induced by itself and its successors.
///
/// The null graph is chordal.
pub fn is_chordal(g: &Graph) -> (bool, Option<Vec<usize>>) {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    if is_perfect_elimination_ordering(g, &order) {
        (true, Some(order))
    } else {
        (false, None)
    }
}

/// Maximal cliques of a chordal graph, each sorted, in ascending order of their
/// earliest eliminated vertex.
pub fn maximal_cliques_chordal(g: &Graph) -> Result<Vec<VertexSet>> {
    let (chordal, order) = is_chordal(g);
    if !chordal {
        return Err(Error::NotChordal);
    }
    let order = order.expect("ordering for chordal graph");
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let candidates: Vec<VertexSet> = order
        .iter()
        .map(|&v| {
            let mut clique = VertexSet::new(g.n());
            clique.insert(v);
            for &u in g.neighbors(v) {
                if position[u] > position[v] {
                    clique.insert(u);
                }
            }
            clique
        })
        .collect();
    let mut cliques: Vec<VertexSet> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        // a later candidate can only strictly contain an earlier one, never equal it
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.len() < d.len() && c.is_subset(d));
        if !dominated {
            cliques.push(c.clone());
        }
    }
    Ok(cliques)
}

/// Clique tree of a nonnull chordal graph: bags are the maximal cliques, the
/// tree is a maximum-weight spanning tree of the clique intersection graph.
/// Components of a disconnected graph are linked through empty separators.
pub fn clique_tree(g: &Graph) -> Result<RefinedTreeDecomposition> {
    if g.is_null() {
        return Err(Error::NullGraph);
    }
    let cliques = maximal_cliques_chordal(g)?;
    let m = cliques.len();
    // Prim on the complete clique graph, weight = |Ci ∩ Cj|; ties to lowest ids
    let mut in_tree = vec![false; m];
    let mut best: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut edges = Vec::with_capacity(m.saturating_sub(1));
    in_tree[0] = true;
    for j in 1..m {
        best[j] = Some((cliques[0].intersection_len(&cliques[j]), 0));
    }
    for _ in 1..m {
        let next = (0..m)
            .filter(|&j| !in_tree[j])
            .max_by(|&a, &b| {
                let (wa, _) = best[a].unwrap();
                let (wb, _) = best[b].unwrap();
                wa.cmp(&wb).then(b.cmp(&a))
            })
            .expect("remaining clique");
        let (_, parent) = best[next].unwrap();
        in_tree[next] = true;
        edges.push((parent.min(next), parent.max(next)));
        for j in 0..m {
            if !in_tree[j] {
                let w = cliques[next].intersection_len(&cliques[j]);
                if w > best[j].unwrap().0 {
                    best[j] = Some((w, next));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(RefinedTreeDecomposition::new(g.n(), cliques, edges))
}
