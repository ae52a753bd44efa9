use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{alpha_within, Graph, VertexSet, DEFAULT_EXACT_CAP};

/// A tree decomposition whose nodes carry a bag `X_t` and a refined subset
/// `U_t ⊆ X_t`. Plain tree decompositions have every `U_t` empty.
///
/// Built unchecked; call [`validate`] before trusting it. The refinement level
/// ℓ is derived as `max |U_t|` rather than stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedTreeDecomposition {
    universe: usize,
    bags: Vec<VertexSet>,
    refined: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl RefinedTreeDecomposition {
    /// Decomposition over vertices `0..universe` with empty refined sets.
    pub fn new(universe: usize, bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        let refined = vec![VertexSet::new(universe); bags.len()];
        RefinedTreeDecomposition {
            universe,
            bags,
            refined,
            edges,
        }
    }

    /// Builds from plain vertex lists, range-checking every member.
    pub fn from_lists(
        universe: usize,
        bags: &[Vec<usize>],
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let bags = bags
            .iter()
            .map(|b| VertexSet::from_vertices(universe, b.iter().copied()))
            .collect::<Result<_>>()?;
        Ok(Self::new(universe, bags, edges))
    }

    pub fn with_refined(mut self, refined: Vec<VertexSet>) -> Self {
        assert_eq!(refined.len(), self.bags.len(), "one refined set per node");
        self.refined = refined;
        self
    }

    pub fn set_refined(&mut self, node: usize, refined: VertexSet) {
        self.refined[node] = refined;
    }

    /// Number of graph vertices the bags range over.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &VertexSet {
        &self.bags[node]
    }

    pub fn refined_sets(&self) -> &[VertexSet] {
        &self.refined
    }

    pub fn refined(&self, node: usize) -> &VertexSet {
        &self.refined[node]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// ℓ = max |U_t|.
    pub fn refinement_level(&self) -> usize {
        self.refined.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Max bag size minus one; `-1` when every bag is empty.
    pub fn width(&self) -> isize {
        self.bags
            .iter()
            .map(|b| b.len() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Sorted bag contents and edges with `a < b` in lexicographic order;
    /// node numbering is preserved.
    pub fn canonicalized(&self) -> Self {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        RefinedTreeDecomposition {
            edges,
            ..self.clone()
        }
    }

    /// Nodes whose bag contains every vertex of `set`, lowest id first.
    pub fn nodes_containing(&self, set: &VertexSet) -> impl Iterator<Item = usize> + '_ {
        let set = set.clone();
        (0..self.node_count()).filter(move |&t| set.is_subset(&self.bags[t]))
    }
}

/// The trivial decomposition: one bag holding every vertex.
pub fn trivial_decomposition(g: &Graph) -> RefinedTreeDecomposition {
    RefinedTreeDecomposition::new(g.n(), vec![g.vertex_set()], Vec::new())
}

/// One violated clause of the tree-decomposition definition, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoNodes,
    UniverseMismatch { decomposition: usize, graph: usize },
    NotATree(String),
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    SubtreeDisconnected(usize),
    RefinedOutsideBag { node: usize, vertex: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // vertex and node ids are shown 1-indexed
        match self {
            Violation::NoNodes => write!(f, "decomposition has no nodes"),
            Violation::UniverseMismatch {
                decomposition,
                graph,
            } => write!(
                f,
                "decomposition is over {decomposition} vertices, graph has {graph}"
            ),
            Violation::NotATree(why) => write!(f, "tree edges do not form a tree: {why}"),
            Violation::VertexUncovered(v) => write!(f, "vertex {} is in no bag", v + 1),
            Violation::EdgeUncovered(u, v) => {
                write!(f, "edge ({}, {}) is in no bag", u + 1, v + 1)
            }
            Violation::SubtreeDisconnected(v) => {
                write!(f, "bags containing vertex {} are not connected", v + 1)
            }
            Violation::RefinedOutsideBag { node, vertex } => write!(
                f,
                "refined vertex {} of node {} is not in its bag",
                vertex + 1,
                node + 1
            ),
        }
    }
}

/// Outcome of [`validate`]: at most one witness per violated clause.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidDecomposition(v.to_string())),
        }
    }
}

/// Checks vertex coverage, edge coverage, connectivity of every `T_u`,
/// `U_t ⊆ X_t` and that the tree edges form a tree.
pub fn validate(g: &Graph, td: &RefinedTreeDecomposition) -> ValidationReport {
    let mut report = ValidationReport::default();
    let nodes = td.node_count();
    if nodes == 0 {
        report.violations.push(Violation::NoNodes);
        return report;
    }
    if td.universe != g.n() {
        report.violations.push(Violation::UniverseMismatch {
            decomposition: td.universe,
            graph: g.n(),
        });
        return report;
    }
    let tree_ok = match tree_defect(nodes, &td.edges) {
        Some(why) => {
            report.violations.push(Violation::NotATree(why));
            false
        }
        None => true,
    };

    let mut covered = VertexSet::new(g.n());
    td.bags.iter().for_each(|b| covered.union_with(b));
    if let Some(v) = (0..g.n()).find(|&v| !covered.contains(v)) {
        report.violations.push(Violation::VertexUncovered(v));
    }

    if let Some((u, v)) = g
        .edges()
        .find(|&(u, v)| !td.bags.iter().any(|b| b.contains(u) && b.contains(v)))
    {
        report.violations.push(Violation::EdgeUncovered(u, v));
    }

    if tree_ok {
        // in a tree, the nodes holding u induce a connected subgraph iff
        // they span exactly one edge fewer than their count
        let mut holders = vec![0usize; g.n()];
        let mut spanning = vec![0usize; g.n()];
        for bag in &td.bags {
            bag.iter().for_each(|v| holders[v] += 1);
        }
        for &(a, b) in &td.edges {
            td.bags[a]
                .intersection(&td.bags[b])
                .iter()
                .for_each(|v| spanning[v] += 1);
        }
        if let Some(v) = (0..g.n()).find(|&v| holders[v] > 0 && spanning[v] + 1 != holders[v]) {
            report.violations.push(Violation::SubtreeDisconnected(v));
        }
    }

    let refined_witness = td.refined.iter().enumerate().find_map(|(t, u)| {
        u.difference(&td.bags[t])
            .first()
            .map(|vertex| Violation::RefinedOutsideBag { node: t, vertex })
    });
    if td.refined.len() != nodes {
        report.violations.push(Violation::NotATree(
            "refined set count differs from node count".into(),
        ));
    } else if let Some(v) = refined_witness {
        report.violations.push(v);
    }
    report
}

fn tree_defect(nodes: usize, edges: &[(usize, usize)]) -> Option<String> {
    if edges.len() + 1 != nodes {
        return Some(format!("{} nodes but {} edges", nodes, edges.len()));
    }
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in edges {
        if a >= nodes || b >= nodes {
            return Some(format!(
                "edge ({}, {}) references a missing node",
                a + 1,
                b + 1
            ));
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Some(format!("edge ({}, {}) closes a cycle", a + 1, b + 1));
        }
        parent[ra] = rb;
    }
    None
}

/// `α(T) = max_t α(G[X_t])`.
pub fn independence_number(g: &Graph, td: &RefinedTreeDecomposition) -> Result<usize> {
    independence_number_with_cap(g, td, DEFAULT_EXACT_CAP)
}

pub fn independence_number_with_cap(
    g: &Graph,
    td: &RefinedTreeDecomposition,
    cap: usize,
) -> Result<usize> {
    td.bags
        .iter()
        .try_fold(0, |best, bag| Ok(best.max(alpha_within(g, bag, cap)?)))
}

/// Residual independence number `max_t α(G[X_t \ U_t])`.
pub fn residual_independence_number(g: &Graph, td: &RefinedTreeDecomposition) -> Result<usize> {
    residual_independence_number_with_cap(g, td, DEFAULT_EXACT_CAP)
}

pub fn residual_independence_number_with_cap(
    g: &Graph,
    td: &RefinedTreeDecomposition,
    cap: usize,
) -> Result<usize> {
    td.bags
        .iter()
        .zip(&td.refined)
        .try_fold(0, |best, (bag, refined)| {
            Ok(best.max(alpha_within(g, &bag.difference(refined), cap)?))
        })
}
