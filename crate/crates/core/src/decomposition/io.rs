//! The `.td` format, extended with `r` lines for refined sets.
//!
//! ```text
//! c comment
//! s td <bags> <max-bag-size> <n>
//! b <bag-id> <v1> <v2> ...
//! <i> <j>
//! r <bag-id> <u1> <u2> ...
//! ```
//! Bag ids and vertices are 1-indexed. Writing is canonical: bags by id with
//! sorted contents, then sorted tree edges, then nonempty refined sets.

use std::fmt::Write as _;

use crate::decomposition::refined::RefinedTreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_number, parse_vertex};
use crate::graph::VertexSet;

pub fn parse_td(text: &str) -> Result<RefinedTreeDecomposition> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `s td` header"))?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(Error::parse(
            line,
            "expected header `s td <bags> <max-bag-size> <n>`",
        ));
    }
    let count = parse_number(line, header[2], "bag count")?;
    let max_bag = parse_number(line, header[3], "maximum bag size")?;
    let n = parse_number(line, header[4], "vertex count")?;

    let mut bags: Vec<Option<VertexSet>> = vec![None; count];
    let mut refined: Vec<Option<(usize, VertexSet)>> = vec![None; count];
    let mut edges = Vec::new();
    let bag_id = |line: usize, word: &str| -> Result<usize> {
        let id = parse_number(line, word, "a bag id")?;
        if id == 0 || id > count {
            return Err(Error::parse(
                line,
                format!("bag id {id} outside 1..={count}"),
            ));
        }
        Ok(id - 1)
    };
    for (line, words) in lines {
        match words[0] {
            "b" | "r" => {
                if words.len() < 2 {
                    return Err(Error::parse(line, "missing bag id"));
                }
                let id = bag_id(line, words[1])?;
                let mut set = VertexSet::new(n);
                for w in &words[2..] {
                    set.insert(parse_vertex(line, w, n)?);
                }
                if words[0] == "b" {
                    if set.len() > max_bag {
                        return Err(Error::parse(
                            line,
                            format!("bag {} exceeds the declared size {max_bag}", id + 1),
                        ));
                    }
                    if bags[id].replace(set).is_some() {
                        return Err(Error::parse(line, format!("bag {} declared twice", id + 1)));
                    }
                } else if refined[id].replace((line, set)).is_some() {
                    return Err(Error::parse(
                        line,
                        format!("refined set of bag {} declared twice", id + 1),
                    ));
                }
            }
            _ => {
                if words.len() != 2 {
                    return Err(Error::parse(line, "expected a tree edge `<i> <j>`"));
                }
                edges.push((bag_id(line, words[0])?, bag_id(line, words[1])?));
            }
        }
    }
    let bags: Vec<VertexSet> = bags
        .into_iter()
        .enumerate()
        .map(|(id, bag)| {
            bag.ok_or_else(|| Error::parse(line, format!("bag {} never declared", id + 1)))
        })
        .collect::<Result<_>>()?;
    let mut refined_sets = Vec::with_capacity(count);
    for (id, entry) in refined.into_iter().enumerate() {
        match entry {
            None => refined_sets.push(VertexSet::new(n)),
            Some((line, set)) => {
                if let Some(v) = set.difference(&bags[id]).first() {
                    return Err(Error::parse(
                        line,
                        format!("refined vertex {} is not in bag {}", v + 1, id + 1),
                    ));
                }
                refined_sets.push(set);
            }
        }
    }
    Ok(RefinedTreeDecomposition::new(n, bags, edges).with_refined(refined_sets))
}

pub fn write_td(td: &RefinedTreeDecomposition) -> String {
    let td = td.canonicalized();
    let max_bag = td.bags().iter().map(VertexSet::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.node_count(), max_bag, td.universe());
    let list = |out: &mut String, tag: &str, id: usize, set: &VertexSet| {
        let _ = write!(out, "{tag} {}", id + 1);
        for v in set {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    };
    for (id, bag) in td.bags().iter().enumerate() {
        list(&mut out, "b", id, bag);
    }
    for &(a, b) in td.tree_edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    for (id, u) in td.refined_sets().iter().enumerate() {
        if !u.is_empty() {
            list(&mut out, "r", id, u);
        }
    }
    out
}
