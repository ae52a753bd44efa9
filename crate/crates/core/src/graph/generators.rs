//! Standard families and the gadget graphs used to probe tree-independence number.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("valid complete graph")
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "path needs at least one vertex".into(),
        ));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_{m,n}` with sides `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    Graph::new(m + n, &edges).expect("valid complete bipartite graph")
}

/// Two disjoint copies of `h` (vertices `0..n` and `n..2n`) plus every edge
/// between the copies. Its tree-independence number equals `α(h)`.
pub fn double_join(h: &Graph) -> Graph {
    let n = h.n();
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (u + n, v + n)));
    edges.extend((0..n).flat_map(|u| (n..2 * n).map(move |v| (u, v))));
    Graph::new(2 * n, &edges).expect("valid double join")
}

/// `K_k` on hubs `0..k` with every hub pair `ij` replaced by `k` internally
/// disjoint paths of length two. Treewidth `k - 1`, tree-independence number `k`.
pub fn sharpness(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "sharpness gadget needs k >= 3, got {k}"
        )));
    }
    let mut edges = Vec::new();
    let mut next = k;
    for i in 0..k {
        for j in i + 1..k {
            for _ in 0..k {
                edges.push((i, next));
                edges.push((j, next));
                next += 1;
            }
        }
    }
    Graph::new(next, &edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Generator selected by name, as used by the command line and the web demo.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Edgeless(usize),
    CompleteBipartite(usize, usize),
    DoubleJoin(Box<GeneratorKind>),
    Sharpness(usize),
}

impl GeneratorKind {
    /// Parses `kind params...`, e.g. `["cycle", "5"]` or `["double-join", "path", "4"]`.
    /// `knn n` is shorthand for `complete-bipartite n n`.
    pub fn parse(words: &[&str]) -> Result<Self> {
        let (kind, rest) = parse_kind(words)?;
        if !rest.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "unexpected arguments {rest:?}"
            )));
        }
        Ok(kind)
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GeneratorKind::Complete(n) => Ok(complete(*n)),
            GeneratorKind::Path(n) => path(*n),
            GeneratorKind::Cycle(n) => cycle(*n),
            GeneratorKind::Edgeless(n) => Ok(Graph::edgeless(*n)),
            GeneratorKind::CompleteBipartite(m, n) => Ok(complete_bipartite(*m, *n)),
            GeneratorKind::DoubleJoin(inner) => Ok(double_join(&inner.build()?)),
            GeneratorKind::Sharpness(k) => sharpness(*k),
        }
    }
}

fn parse_kind<'a, 'b>(words: &'a [&'b str]) -> Result<(GeneratorKind, &'a [&'b str])> {
    let Some((&name, rest)) = words.split_first() else {
        return Err(Error::InvalidParameter("missing generator kind".into()));
    };
    let count = |rest: &'a [&'b str]| -> Result<(usize, &'a [&'b str])> {
        let (&first, tail) = rest
            .split_first()
            .ok_or_else(|| Error::InvalidParameter(format!("{name} needs a size parameter")))?;
        let value = first
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{name}: bad size {first:?}")))?;
        Ok((value, tail))
    };
    let positive = |value: usize| -> Result<usize> {
        if value == 0 {
            Err(Error::InvalidParameter(format!(
                "{name} needs a positive size"
            )))
        } else {
            Ok(value)
        }
    };
    Ok(match name {
        "complete" | "k" => {
            let (n, tail) = count(rest)?;
            (GeneratorKind::Complete(positive(n)?), tail)
        }
        "path" => {
            let (n, tail) = count(rest)?;
            (GeneratorKind::Path(positive(n)?), tail)
        }
        "cycle" => {
            let (n, tail) = count(rest)?;
            (GeneratorKind::Cycle(n), tail)
        }
        "edgeless" => {
            let (n, tail) = count(rest)?;
            (GeneratorKind::Edgeless(n), tail)
        }
        "knn" => {
            let (n, tail) = count(rest)?;
            let n = positive(n)?;
            (GeneratorKind::CompleteBipartite(n, n), tail)
        }
        "complete-bipartite" | "complete_bipartite" | "kmn" => {
            let (m, tail) = count(rest)?;
            let (n, tail) = count(tail)?;
            (
                GeneratorKind::CompleteBipartite(positive(m)?, positive(n)?),
                tail,
            )
        }
        "double-join" | "double_join" => {
            let (inner, tail) = parse_kind(rest)?;
            (GeneratorKind::DoubleJoin(Box::new(inner)), tail)
        }
        "sharpness" => {
            let (k, tail) = count(rest)?;
            (GeneratorKind::Sharpness(k), tail)
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown generator {other:?}"
            )));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_edge_count() {
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
    }

    #[test]
    fn double_join_of_c5() {
        // 2·|E(C5)| + 5·5 cross edges
        let g = double_join(&cycle(5).unwrap());
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 2 * 5 + 25);
    }

    #[test]
    fn sharpness_three() {
        // 3 hubs + 3 pairs · 3 middles, each middle of degree two
        let g = sharpness(3).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(g.edge_count(), 18);
        assert!((3..12).all(|v| g.degree(v) == 2));
        assert!((0..3).all(|v| g.degree(v) == 6));
        let g4 = sharpness(4).unwrap();
        assert_eq!(g4.n(), 4 + 4 * 6);
    }

    #[test]
    fn invalid_parameters() {
        assert!(sharpness(2).is_err());
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(GeneratorKind::parse(&["knn", "0"]).is_err());
        assert!(GeneratorKind::parse(&["bogus"]).is_err());
        assert!(GeneratorKind::parse(&["cycle", "5", "6"]).is_err());
    }

    #[test]
    fn named_generators() {
        let g = GeneratorKind::parse(&["double-join", "cycle", "5"])
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g, double_join(&cycle(5).unwrap()));
        let k = GeneratorKind::parse(&["knn", "3"])
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(k, complete_bipartite(3, 3));
    }
}
