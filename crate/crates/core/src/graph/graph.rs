use crate::error::{Error, Result};
use crate::graph::bitset::VertexSet;

/// Graphs up to this order get adjacency bit rows at construction.
pub const DEFAULT_MATRIX_CAP: usize = 4096;

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are strictly ascending. Graphs with at most
/// [`DEFAULT_MATRIX_CAP`] vertices (or a caller-chosen cap) also carry
/// symmetric adjacency bit rows for constant-time edge and independence tests.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: Option<Vec<VertexSet>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Maps vertices of a graph to the vertices of an induced subgraph and back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_matrix_cap(n, edges, DEFAULT_MATRIX_CAP)
    }

    /// Like [`Graph::new`], with an explicit cap on bit-row materialization.
    pub fn with_matrix_cap(n: usize, edges: &[(usize, usize)], matrix_cap: usize) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adj, matrix_cap))
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n], DEFAULT_MATRIX_CAP)
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>, matrix_cap: usize) -> Self {
        let n = adj.len();
        let rows = (n <= matrix_cap).then(|| {
            adj.iter()
                .map(|list| {
                    let mut row = VertexSet::new(n);
                    list.iter().for_each(|&u| {
                        row.insert(u);
                    });
                    row
                })
                .collect()
        });
        Graph { n, adj, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_matrix(&self) -> bool {
        self.rows.is_some()
    }

    /// Adjacency bit row of `v`, when the matrix view is materialized.
    pub fn row(&self, v: usize) -> Option<&VertexSet> {
        self.rows.as_ref().map(|rows| &rows[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.rows {
            Some(rows) => rows[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        match self.row(v) {
            Some(row) => row.clone(),
            None => {
                let mut set = VertexSet::new(self.n);
                self.adj[v].iter().for_each(|&u| {
                    set.insert(u);
                });
                set
            }
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.neighborhood(v);
        set.insert(v);
        set
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Adjacency masks for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &u| m | 1 << u))
                .collect()
        })
    }

    /// `G[S]`, with vertices renumbered in ascending order of their old ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Relabeling)> {
        self.check_set(set)?;
        let new_to_old = set.to_vec();
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let adj = new_to_old
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&u| old_to_new[u])
                    .collect()
            })
            .collect();
        Ok((
            Self::from_sorted_adjacency(adj, DEFAULT_MATRIX_CAP),
            Relabeling {
                old_to_new,
                new_to_old,
            },
        ))
    }

    /// `G - v`; vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = self.vertex_set();
        keep.remove(v);
        Ok(self.induced_subgraph(&keep)?.0)
    }

    /// `G / uv`. The merged vertex takes id `min(u, v)` and vertices above
    /// `max(u, v)` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map = |x: usize| {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(a, b)| !(a == keep && b == gone))
            .map(|(a, b)| (map(a), map(b)))
            .collect();
        Graph::new(self.n - 1, &edges)
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                (0..self.n)
                    .filter(|&v| v != u && !self.has_edge(u, v))
                    .collect()
            })
            .collect();
        Self::from_sorted_adjacency(adj, DEFAULT_MATRIX_CAP)
    }

    /// Every vertex of `set` is adjacent to every other.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        self.non_adjacent_pair(set).is_none()
    }

    pub(crate) fn non_adjacent_pair(&self, set: &VertexSet) -> Option<(usize, usize)> {
        let members = set.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.has_edge(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Whether `G[set]` is connected. The empty set is not.
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if set.contains(y) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == set.len()
    }
}
