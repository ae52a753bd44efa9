//! PACE-style `.gr` graphs, vertex weight files and vertex set lists.
//!
//! All files use 1-indexed vertices; ids are shifted at this boundary.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::bitset::VertexSet;
use crate::graph::Graph;
use crate::weight::{Weight, WeightMap};

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, words)),
        }
    })
}

pub(crate) fn parse_number(line: usize, word: &str, what: &str) -> Result<usize> {
    word.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {word:?}")))
}

/// 1-indexed vertex id to 0-indexed, range-checked against `n`.
pub(crate) fn parse_vertex(line: usize, word: &str, n: usize) -> Result<usize> {
    let v = parse_number(line, word, "a vertex id")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parses `p tw <n> <m>` followed by `m` edge lines.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `p tw` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(Error::parse(line, "expected header `p tw <n> <m>`"));
    }
    let n = parse_number(line, header[2], "vertex count")?;
    let m = parse_number(line, header[3], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (line, words) in lines {
        if words.len() != 2 {
            return Err(Error::parse(line, "expected an edge `<u> <v>`"));
        }
        let u = parse_vertex(line, words[0], n)?;
        let v = parse_vertex(line, words[1], n)?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop on vertex {}", u + 1)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses `<v> <weight>` lines; unlisted vertices weigh 1.
pub fn parse_weights(text: &str, n: usize) -> Result<WeightMap> {
    let mut weights = vec![Weight::one(); n];
    let mut seen = vec![false; n];
    for (line, words) in content_lines(text) {
        if words.len() != 2 {
            return Err(Error::parse(line, "expected `<vertex> <weight>`"));
        }
        let v = parse_vertex(line, words[0], n)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::parse(
                line,
                format!("duplicate weight for vertex {}", v + 1),
            ));
        }
        weights[v] = words[1]
            .parse()
            .map_err(|e: Error| Error::parse(line, e.to_string()))?;
    }
    Ok(WeightMap::new(weights))
}

pub fn write_weights(weights: &WeightMap) -> String {
    let mut out = String::new();
    for (v, w) in weights.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{} {}", v + 1, w);
    }
    out
}

/// Whitespace-separated 1-indexed vertex ids; `c` lines are comments.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::new(n);
    for (line, words) in content_lines(text) {
        for word in words {
            set.insert(parse_vertex(line, word, n)?);
        }
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn graph_round_trip() {
        let g = generators::sharpness(3).unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let null = Graph::edgeless(0);
        assert_eq!(write_graph(&null), "p tw 0 0\n");
        assert_eq!(parse_graph("p tw 0 0\n").unwrap(), null);
    }

    #[test]
    fn comments_and_one_indexing() {
        let g = parse_graph("c a path\np tw 3 2\n1 2\nc middle\n2 3\n").unwrap();
        assert_eq!(g, generators::path(3).unwrap());
    }

    #[test]
    fn malformed_graphs() {
        assert!(matches!(
            parse_graph("p td 3 0"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p tw 3 1\n1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p tw 3 1\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p tw 3 2\n1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("p tw 3 1\n2 2\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn weights_default_to_one_and_parse_exactly() {
        let w = parse_weights("1 3/2\n3 0.25\n", 3).unwrap();
        assert_eq!(w.get(0), &Weight::ratio(3, 2).unwrap());
        assert_eq!(w.get(1), &Weight::one());
        assert_eq!(w.get(2), &Weight::ratio(1, 4).unwrap());
        assert!(parse_weights("4 1\n", 3).is_err());
        assert!(parse_weights("1 -2\n", 3).is_err());
        assert!(parse_weights("1 1\n1 2\n", 3).is_err());
        assert_eq!(parse_weights(&write_weights(&w), 3).unwrap(), w);
    }

    #[test]
    fn vertex_sets() {
        let s = parse_vertex_set("c side A\n1 3\n5\n", 5).unwrap();
        assert_eq!(s.to_vec(), vec![0, 2, 4]);
        assert!(parse_vertex_set("6", 5).is_err());
    }
}
