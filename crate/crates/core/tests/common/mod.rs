//! Corpus builders shared by the integration tests. All randomness is seeded.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treealpha::decomposition::{trivial_decomposition, RefinedTreeDecomposition};
use treealpha::graph::generators::random_gnp;
use treealpha::oracle::fill_in_clique_tree;
use treealpha::{Graph, VertexSet, Weight, WeightMap};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every labelled graph on `n` vertices, in edge-mask order.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    random_gnp(n, p, rng).unwrap()
}

/// Nonnegative rationals with small numerators and denominators, zero included.
pub fn random_weight(rng: &mut ChaCha8Rng) -> Weight {
    Weight::ratio(rng.gen_range(0..=20), rng.gen_range(1..=6)).unwrap()
}

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> WeightMap {
    WeightMap::new((0..n).map(|_| random_weight(rng)).collect())
}

/// Clique tree of the fill-in of a uniformly random elimination ordering.
pub fn random_decomposition(rng: &mut ChaCha8Rng, g: &Graph) -> RefinedTreeDecomposition {
    if g.is_null() {
        return trivial_decomposition(g);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    fill_in_clique_tree(g, &order).unwrap()
}

/// Marks each bag vertex as refined with probability one half.
pub fn random_refinement(
    rng: &mut ChaCha8Rng,
    td: &RefinedTreeDecomposition,
) -> RefinedTreeDecomposition {
    let refined = td
        .bags()
        .iter()
        .map(|bag| {
            VertexSet::from_vertices(bag.universe(), bag.iter().filter(|_| rng.gen_bool(0.5)))
                .unwrap()
        })
        .collect();
    td.clone().with_refined(refined)
}

/// A connected vertex set of up to `max_size` vertices grown from a random vertex.
pub fn random_connected_set(rng: &mut ChaCha8Rng, g: &Graph, max_size: usize) -> VertexSet {
    let target = rng.gen_range(1..=max_size);
    let mut set = VertexSet::new(g.n());
    set.insert(rng.gen_range(0..g.n()));
    while set.len() < target {
        let frontier: Vec<usize> = set
            .iter()
            .flat_map(|v| g.neighbors(v).iter().copied())
            .filter(|&u| !set.contains(u))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        match frontier.choose(rng) {
            Some(&u) => {
                set.insert(u);
            }
            None => break,
        }
    }
    set
}

/// Square of the line graph, built from edge endpoints alone. Returned as the
/// edge list over `g.edges()` indices.
pub fn line_graph_square(g: &Graph) -> (Vec<(usize, usize)>, BTreeSet<(usize, usize)>) {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let touch = |i: usize, j: usize| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    };
    let mut square = BTreeSet::new();
    for i in 0..m {
        for j in i + 1..m {
            if touch(i, j) || (0..m).any(|x| x != i && x != j && touch(i, x) && touch(x, j)) {
                square.insert((i, j));
            }
        }
    }
    (edges, square)
}

/// A graph with a clique cutset: vertices `A`, then `B`, then `C`; `C` is a
/// clique, no edge joins `A` and `B`, other pairs appear with probability `p`.
pub struct CliqueSum {
    pub graph: Graph,
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
}

pub fn random_clique_sum(
    rng: &mut ChaCha8Rng,
    max_side: usize,
    max_cut: usize,
    p: f64,
) -> CliqueSum {
    let na = rng.gen_range(1..=max_side);
    let nb = rng.gen_range(1..=max_side);
    let nc = rng.gen_range(1..=max_cut);
    let n = na + nb + nc;
    let side = |v: usize| {
        if v < na {
            0
        } else if v < na + nb {
            1
        } else {
            2
        }
    };
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (su, sv) = (side(u), side(v));
            let keep = match (su, sv) {
                (2, 2) => true,
                (0, 1) | (1, 0) => false,
                _ => rng.gen_bool(p),
            };
            if keep {
                edges.push((u, v));
            }
        }
    }
    let set = |r: std::ops::Range<usize>| VertexSet::from_vertices(n, r).unwrap();
    CliqueSum {
        graph: Graph::new(n, &edges).unwrap(),
        a: set(0..na),
        b: set(na..na + nb),
        c: set(na + nb..n),
    }
}

/// Rewrites a decomposition of an induced subgraph into the ids of the host.
pub fn lift(
    td: &RefinedTreeDecomposition,
    new_to_old: &[usize],
    host_n: usize,
) -> RefinedTreeDecomposition {
    let bags = td
        .bags()
        .iter()
        .map(|bag| VertexSet::from_vertices(host_n, bag.iter().map(|v| new_to_old[v])).unwrap())
        .collect();
    RefinedTreeDecomposition::new(host_n, bags, td.tree_edges().to_vec())
}

/// Member index by vertex list.
pub fn index_members(members: &[VertexSet]) -> HashMap<Vec<usize>, usize> {
    members
        .iter()
        .enumerate()
        .map(|(j, m)| (m.to_vec(), j))
        .collect()
}
