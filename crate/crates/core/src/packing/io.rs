//! Weighted family files.
//!
//! ```text
//! c comment
//! s fam <count>
//! f <id> <weight> <size> <v1> ... <v_size>
//! ```
//! Member ids run over `1..=count`, each declared once; vertices are 1-indexed
//! and weights are rationals (`p/q`), integers or decimals.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_number, parse_vertex};
use crate::graph::{Graph, VertexSet};
use crate::packing::family::{PackingInstance, SubgraphFamily};
use crate::weight::{Weight, WeightMap};

pub fn parse_family(text: &str, host: &Graph) -> Result<PackingInstance> {
    let n = host.n();
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `s fam` header"))?;
    if header.len() != 3 || header[0] != "s" || header[1] != "fam" {
        return Err(Error::parse(line, "expected header `s fam <count>`"));
    }
    let count = parse_number(line, header[2], "member count")?;
    let mut members: Vec<Option<(VertexSet, Weight)>> = vec![None; count];
    for (line, words) in lines {
        if words[0] != "f" || words.len() < 4 {
            return Err(Error::parse(
                line,
                "expected `f <id> <weight> <size> <vertices...>`",
            ));
        }
        let id = parse_number(line, words[1], "a member id")?;
        if id == 0 || id > count {
            return Err(Error::parse(
                line,
                format!("member id {id} outside 1..={count}"),
            ));
        }
        let weight: Weight = words[2]
            .parse()
            .map_err(|e: Error| Error::parse(line, e.to_string()))?;
        let size = parse_number(line, words[3], "member size")?;
        if words.len() - 4 != size {
            return Err(Error::parse(
                line,
                format!(
                    "member {id} declares {size} vertices, lists {}",
                    words.len() - 4
                ),
            ));
        }
        let mut set = VertexSet::new(n);
        for w in &words[4..] {
            if !set.insert(parse_vertex(line, w, n)?) {
                return Err(Error::parse(
                    line,
                    format!("member {id} repeats vertex {w}"),
                ));
            }
        }
        if members[id - 1].replace((set, weight)).is_some() {
            return Err(Error::parse(line, format!("member {id} declared twice")));
        }
    }
    let mut sets = Vec::with_capacity(count);
    let mut weights = Vec::with_capacity(count);
    for (j, member) in members.into_iter().enumerate() {
        let (set, weight) =
            member.ok_or_else(|| Error::parse(line, format!("member {} is missing", j + 1)))?;
        sets.push(set);
        weights.push(weight);
    }
    PackingInstance::new(SubgraphFamily::new(host, sets)?, WeightMap::new(weights))
}

pub fn write_family(instance: &PackingInstance) -> String {
    let family = instance.family();
    let mut out = format!("s fam {}\n", family.len());
    for (j, member) in family.members().iter().enumerate() {
        let _ = write!(out, "f {} {} {}", j + 1, instance.weight(j), member.len());
        for v in member {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn round_trip() {
        let p4 = generators::path(4).unwrap();
        let text = "c edges and a vertex\ns fam 3\nf 2 1.5 1 4\nf 1 3 2 1 2\nf 3 2/3 2 2 3\n";
        let inst = parse_family(text, &p4).unwrap();
        assert_eq!(inst.family().member(1).to_vec(), vec![3]);
        assert_eq!(inst.weight(1), &Weight::ratio(3, 2).unwrap());
        let written = write_family(&inst);
        assert_eq!(
            written,
            "s fam 3\nf 1 3/1 2 1 2\nf 2 3/2 1 4\nf 3 2/3 2 2 3\n"
        );
        assert_eq!(parse_family(&written, &p4).unwrap(), inst);
    }

    #[test]
    fn malformed() {
        let p4 = generators::path(4).unwrap();
        for bad in [
            "",
            "s fam\n",
            "s fam 1\n",
            "s fam 1\nf 1 1 2 1\n",
            "s fam 1\nf 2 1 1 1\n",
            "s fam 1\nf 1 -1 1 1\n",
            "s fam 1\nf 1 1 1 5\n",
            "s fam 1\nf 1 1 2 1 1\n",
            "s fam 2\nf 1 1 1 1\nf 1 1 1 2\n",
            "s fam 1\nf 1 1 2 1 3\n",
            "s fam 1\ng 1 1 1 1\n",
        ] {
            assert!(parse_family(bad, &p4).is_err(), "{bad:?}");
        }
    }
}
