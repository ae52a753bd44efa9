use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{generators, io::parse_graph, Graph, VertexSet};
use crate::packing::family::SubgraphFamily;

/// Largest pattern order; matching tries every bijection onto a candidate set.
pub const PATTERN_CAP: usize = 5;

/// Largest host accepted by [`blob_family`] by default.
pub const BLOB_CAP: usize = 12;

/// A small connected graph to look for as a spanning subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Graph,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Self> {
        let name = name.into();
        if graph.is_null() {
            return Err(Error::InvalidPattern(format!("{name}: null pattern")));
        }
        if graph.n() > PATTERN_CAP {
            return Err(Error::CapExceeded {
                what: "pattern order",
                size: graph.n(),
                cap: PATTERN_CAP,
            });
        }
        if !graph.is_connected_within(&graph.vertex_set()) {
            return Err(Error::InvalidPattern(format!(
                "{name}: disconnected pattern"
            )));
        }
        Ok(Pattern { name, graph })
    }

    /// `k1`..`k5` complete, `p1`..`p5` paths, `c3`..`c5` cycles, `s1`..`s4`
    /// stars with that many leaves.
    pub fn named(name: &str) -> Result<Self> {
        let unknown = || Error::InvalidPattern(format!("unknown pattern {name:?}"));
        let lower = name.to_ascii_lowercase();
        let (kind, order) = lower.split_at(1.min(lower.len()));
        let order: usize = order.parse().map_err(|_| unknown())?;
        let graph = match kind {
            "k" => generators::complete(order),
            "p" => generators::path(order)?,
            "c" => generators::cycle(order)?,
            "s" => generators::complete_bipartite(1, order),
            _ => return Err(unknown()),
        };
        Pattern::new(lower, graph)
    }

    /// Comma separated names, as accepted by [`Pattern::named`].
    pub fn parse_list(list: &str) -> Result<Vec<Self>> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Pattern::named)
            .collect()
    }

    /// A pattern written as a `.gr` graph.
    pub fn from_gr(name: impl Into<String>, text: &str) -> Result<Self> {
        Pattern::new(name, parse_graph(text)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Every connected vertex set of size at most `r`, each exactly once, ordered
/// by size and then lexicographically.
///
/// Sets are grown from their smallest vertex `v`; a vertex enters the
/// extension list only when it is adjacent to the newest vertex and to no
/// earlier one, which makes every set reachable along a single branch.
pub fn connected_sets(g: &Graph, r: usize) -> Vec<VertexSet> {
    let mut found: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        let extension: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| u > v).collect();
        grow(g, r, v, &mut vec![v], extension, &mut found);
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
        .into_iter()
        .map(|s| VertexSet::from_vertices(g.n(), s).expect("vertices in range"))
        .collect()
}

fn grow(
    g: &Graph,
    r: usize,
    root: usize,
    set: &mut Vec<usize>,
    mut extension: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let mut sorted = set.clone();
    sorted.sort_unstable();
    out.push(sorted);
    if set.len() == r {
        return;
    }
    while let Some(w) = extension.pop() {
        let mut next = extension.clone();
        for &u in g.neighbors(w) {
            let exclusive = u > root
                && !set.contains(&u)
                && !next.contains(&u)
                && set.iter().all(|&x| !g.has_edge(x, u));
            if exclusive {
                next.push(u);
            }
        }
        set.push(w);
        grow(g, r, root, set, next, out);
        set.pop();
    }
}

/// Whether `pattern` maps bijectively onto `set` with every pattern edge
/// landing on an edge of `g`.
pub fn spans(g: &Graph, set: &[usize], pattern: &Graph) -> bool {
    if set.len() != pattern.n() {
        return false;
    }
    let induced_edges = set
        .iter()
        .enumerate()
        .map(|(i, &a)| set[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
        .sum::<usize>();
    if induced_edges < pattern.edge_count() {
        return false;
    }
    let mut image = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; set.len()];
    assign(g, set, pattern, 0, &mut image, &mut used)
}

fn assign(
    g: &Graph,
    set: &[usize],
    pattern: &Graph,
    next: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if next == pattern.n() {
        return true;
    }
    for slot in 0..set.len() {
        if used[slot] {
            continue;
        }
        let fits = pattern
            .neighbors(next)
            .iter()
            .filter(|&&p| p < next)
            .all(|&p| g.has_edge(set[image[p]], set[slot]));
        if fits {
            used[slot] = true;
            image[next] = slot;
            if assign(g, set, pattern, next + 1, image, used) {
                return true;
            }
            used[slot] = false;
        }
    }
    false
}

/// One member per vertex set `S` (of size at most the largest pattern order)
/// such that some pattern is isomorphic to a spanning subgraph of `G[S]`.
pub fn enumerate_f_subgraphs(g: &Graph, patterns: &[Pattern]) -> Result<SubgraphFamily> {
    let r = patterns.iter().map(Pattern::order).max().unwrap_or(0);
    if r > PATTERN_CAP {
        return Err(Error::CapExceeded {
            what: "pattern order",
            size: r,
            cap: PATTERN_CAP,
        });
    }
    let members = connected_sets(g, r)
        .into_iter()
        .filter(|s| {
            let vertices = s.to_vec();
            patterns.iter().any(|p| spans(g, &vertices, p.graph()))
        })
        .collect();
    Ok(SubgraphFamily::new_unchecked(g.n(), members))
}

/// Every connected induced subgraph of `g`; exponential, hence the cap.
pub fn blob_family(g: &Graph, cap: usize) -> Result<SubgraphFamily> {
    if g.n() > cap {
        return Err(Error::CapExceeded {
            what: "blob family host order",
            size: g.n(),
            cap,
        });
    }
    Ok(SubgraphFamily::new_unchecked(
        g.n(),
        connected_sets(g, g.n()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packing::derived_graph;

    fn lists(family: &SubgraphFamily) -> Vec<Vec<usize>> {
        family.members().iter().map(VertexSet::to_vec).collect()
    }

    fn names(list: &str) -> Vec<Pattern> {
        Pattern::parse_list(list).unwrap()
    }

    #[test]
    fn named_patterns() {
        assert_eq!(Pattern::named("k3").unwrap().graph().edge_count(), 3);
        assert_eq!(Pattern::named("P4").unwrap().graph().edge_count(), 3);
        assert_eq!(Pattern::named("s3").unwrap().order(), 4);
        assert_eq!(Pattern::named("c5").unwrap().graph().edge_count(), 5);
        assert!(Pattern::named("k6").is_err());
        assert!(Pattern::named("k0").is_err());
        assert!(Pattern::named("x2").is_err());
        assert!(Pattern::named("").is_err());
        assert!(Pattern::from_gr("two", "p tw 2 0\n").is_err());
        assert_eq!(names("k1, k2,").len(), 2);
    }

    #[test]
    fn connected_set_counts() {
        // K4: every nonempty subset.
        assert_eq!(connected_sets(&generators::complete(4), 4).len(), 15);
        // P4: subpaths.
        assert_eq!(connected_sets(&generators::path(4).unwrap(), 4).len(), 10);
        // C5: 5 singles, 5 edges, 5 arcs of each length 3 and 4, the whole cycle.
        assert_eq!(connected_sets(&generators::cycle(5).unwrap(), 5).len(), 21);
        assert_eq!(connected_sets(&generators::cycle(5).unwrap(), 2).len(), 10);
    }

    #[test]
    fn connected_sets_match_subset_scan() {
        let g = generators::sharpness(3).unwrap();
        let sets = connected_sets(&g, 4);
        let mut expected = 0;
        for mask in 1u64..1 << 12 {
            let set = VertexSet::from_mask(12, mask);
            if set.len() <= 4 && g.is_connected_within(&set) {
                expected += 1;
            }
        }
        assert_eq!(sets.len(), expected);
        assert!(sets.iter().all(|s| g.is_connected_within(s)));
    }

    #[test]
    fn enumeration_examples() {
        let p4 = generators::path(4).unwrap();
        assert_eq!(
            lists(&enumerate_f_subgraphs(&p4, &names("k1")).unwrap()),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            lists(&enumerate_f_subgraphs(&p4, &names("k2")).unwrap()),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
        let k3 = generators::complete(3);
        assert_eq!(
            lists(&enumerate_f_subgraphs(&k3, &names("p3")).unwrap()),
            vec![vec![0, 1, 2]]
        );
        assert!(enumerate_f_subgraphs(&p4, &names("k3")).unwrap().is_empty());
        let c4 = generators::cycle(4).unwrap();
        assert_eq!(enumerate_f_subgraphs(&c4, &names("s3")).unwrap().len(), 0);
        assert_eq!(enumerate_f_subgraphs(&c4, &names("p4")).unwrap().len(), 1);
        assert_eq!(enumerate_f_subgraphs(&c4, &names("p3")).unwrap().len(), 4);
    }

    #[test]
    fn blob_examples() {
        let k2 = generators::complete(2);
        let blobs = blob_family(&k2, BLOB_CAP).unwrap();
        assert_eq!(lists(&blobs), vec![vec![0], vec![1], vec![0, 1]]);
        assert_eq!(derived_graph(&k2, &blobs).unwrap(), generators::complete(3));

        let p3 = generators::path(3).unwrap();
        let blobs = blob_family(&p3, BLOB_CAP).unwrap();
        assert_eq!(blobs.len(), 6);
        let dg = derived_graph(&p3, &blobs).unwrap();
        assert_eq!(dg.edge_count(), 14);
        assert!(!dg.has_edge(0, 2));
        assert!(blob_family(&Graph::edgeless(13), BLOB_CAP).is_err());
    }
}
