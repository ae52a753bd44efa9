//! Exact independence and clique numbers by branch and bound.
//!
//! The search is a clique search with greedy-colouring bounds over 64-bit
//! masks; independence numbers are cliques of the complement. Every routine
//! here is exact and refuses instances above its cap.

use crate::error::{Error, Result};
use crate::graph::bitset::{low_bits, mask_bits, VertexSet};
use crate::graph::Graph;

/// Largest vertex set any exact α/ω routine accepts by default.
pub const DEFAULT_EXACT_CAP: usize = 64;

/// Whether no edge of `g` has both endpoints in `set`.
pub fn is_independent(g: &Graph, set: &VertexSet) -> Result<bool> {
    g.check_set(set)?;
    let independent = if g.has_matrix() {
        set.iter().all(|v| !g.row(v).unwrap().intersects(set))
    } else {
        set.iter()
            .all(|v| g.neighbors(v).iter().all(|&u| !set.contains(u)))
    };
    Ok(independent)
}

pub fn alpha_exact(g: &Graph) -> Result<usize> {
    alpha_exact_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn alpha_exact_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    Ok(max_independent_set_within(g, &g.vertex_set(), cap)?.len())
}

pub fn omega_exact(g: &Graph) -> Result<usize> {
    omega_exact_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn omega_exact_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    Ok(max_clique_within(g, &g.vertex_set(), cap)?.len())
}

/// `α(G[set])` for a set of at most `cap` vertices of an arbitrarily large graph.
pub fn alpha_within(g: &Graph, set: &VertexSet, cap: usize) -> Result<usize> {
    Ok(max_independent_set_within(g, set, cap)?.len())
}

/// A maximum independent set of `G[set]`.
pub fn max_independent_set_within(g: &Graph, set: &VertexSet, cap: usize) -> Result<VertexSet> {
    search_within(g, set, cap, "independence number", true)
}

/// A maximum clique of `G[set]`.
pub fn max_clique_within(g: &Graph, set: &VertexSet, cap: usize) -> Result<VertexSet> {
    search_within(g, set, cap, "clique number", false)
}

fn search_within(
    g: &Graph,
    set: &VertexSet,
    cap: usize,
    what: &'static str,
    complement: bool,
) -> Result<VertexSet> {
    g.check_set(set)?;
    let members = set.to_vec();
    let cap = cap.min(64);
    if members.len() > cap {
        return Err(Error::CapExceeded {
            what,
            size: members.len(),
            cap,
        });
    }
    let local = local_masks(g, &members);
    let best = if complement {
        max_independent_set_mask(&local)
    } else {
        max_clique_mask(&local, low_bits(local.len()))
    };
    VertexSet::from_vertices(g.n(), mask_bits(best).map(|i| members[i]))
}

/// Adjacency masks of `G[members]`, indexed by position in `members`.
pub(crate) fn local_masks(g: &Graph, members: &[usize]) -> Vec<u64> {
    debug_assert!(members.len() <= 64);
    members
        .iter()
        .map(|&a| {
            members
                .iter()
                .enumerate()
                .filter(|&(_, &b)| g.has_edge(a, b))
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect()
}

/// Maximum independent set of a graph given by at most 64 adjacency masks.
pub(crate) fn max_independent_set_mask(adj: &[u64]) -> u64 {
    let all = low_bits(adj.len());
    let complement: Vec<u64> = adj
        .iter()
        .enumerate()
        .map(|(i, &row)| !row & all & !(1u64 << i))
        .collect();
    max_clique_mask(&complement, all)
}

/// Maximum independent set restricted to the vertices of `within`.
pub(crate) fn alpha_of_mask(adj: &[u64], within: u64) -> u32 {
    let all = low_bits(adj.len());
    let complement: Vec<u64> = adj
        .iter()
        .enumerate()
        .map(|(i, &row)| !row & all & !(1u64 << i))
        .collect();
    max_clique_mask(&complement, within).count_ones()
}

/// Maximum clique among the candidate vertices `cand`.
pub(crate) fn max_clique_mask(adj: &[u64], cand: u64) -> u64 {
    let mut search = CliqueSearch {
        adj,
        best: 0,
        best_len: 0,
        order: Vec::new(),
    };
    if cand != 0 {
        search.expand(0, cand);
    }
    search.best
}

struct CliqueSearch<'a> {
    adj: &'a [u64],
    best: u64,
    best_len: u32,
    order: Vec<(usize, u32)>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: u64, mut cand: u64) {
        let start = self.order.len();
        self.colour(cand);
        let size = current.count_ones();
        for idx in (start..self.order.len()).rev() {
            let (v, colour) = self.order[idx];
            if size + colour <= self.best_len {
                break;
            }
            let grown = current | 1 << v;
            let next = cand & self.adj[v];
            if next == 0 {
                if size + 1 > self.best_len {
                    self.best = grown;
                    self.best_len = size + 1;
                }
            } else {
                self.expand(grown, next);
            }
            cand &= !(1u64 << v);
        }
        self.order.truncate(start);
    }

    /// Appends `cand` in greedy colour-class order; the colour of a vertex bounds
    /// the clique size reachable from the vertices up to it.
    fn colour(&mut self, cand: u64) {
        let mut uncoloured = cand;
        let mut colour = 0;
        while uncoloured != 0 {
            colour += 1;
            let mut class = uncoloured;
            while class != 0 {
                let v = class.trailing_zeros() as usize;
                class &= !(1u64 << v) & !self.adj[v];
                uncoloured &= !(1u64 << v);
                self.order.push((v, colour));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn independence_checks() {
        let c5 = generators::cycle(5).unwrap();
        assert!(is_independent(&c5, &VertexSet::from_vertices(5, [0, 2]).unwrap()).unwrap());
        let k3 = generators::complete(3);
        assert!(!is_independent(&k3, &VertexSet::from_vertices(3, [0, 1]).unwrap()).unwrap());
        assert!(is_independent(&k3, &VertexSet::new(3)).unwrap());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_exact(&generators::cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(
            alpha_exact(&generators::complete_bipartite(3, 3)).unwrap(),
            3
        );
        assert_eq!(alpha_exact(&Graph::edgeless(7)).unwrap(), 7);
        assert_eq!(alpha_exact(&Graph::edgeless(0)).unwrap(), 0);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_exact(&generators::complete(4)).unwrap(), 4);
        assert_eq!(omega_exact(&generators::cycle(5).unwrap()).unwrap(), 2);
        assert_eq!(omega_exact(&Graph::edgeless(0)).unwrap(), 0);
    }

    #[test]
    fn cap_is_an_explicit_refusal() {
        let g = Graph::edgeless(65);
        assert_eq!(
            alpha_exact(&g),
            Err(Error::CapExceeded {
                what: "independence number",
                size: 65,
                cap: 64
            })
        );
        assert!(alpha_exact_with_cap(&generators::path(10).unwrap(), 9).is_err());
        // a small bag of a large graph is fine
        let big = generators::path(200).unwrap();
        let bag = VertexSet::from_vertices(200, [10, 11, 12, 150]).unwrap();
        assert_eq!(alpha_within(&big, &bag, 64).unwrap(), 3);
    }

    #[test]
    fn witness_sets_are_valid() {
        let g = generators::sharpness(3).unwrap();
        let mis = max_independent_set_within(&g, &g.vertex_set(), 64).unwrap();
        assert!(is_independent(&g, &mis).unwrap());
        assert_eq!(mis.len(), 9);
        let clique = max_clique_within(&g, &g.vertex_set(), 64).unwrap();
        assert!(g.is_clique(&clique));
        assert_eq!(clique.len(), 2);
    }
}
