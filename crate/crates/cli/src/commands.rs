use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use treealpha::decomposition::io::{parse_td, write_td};
use treealpha::decomposition::{
    compose_clique_cutset, independence_number, make_nice, residual_independence_number,
    validate as check, NodeKind, RefinedTreeDecomposition,
};
use treealpha::graph::generators::GeneratorKind;
use treealpha::graph::io::{parse_graph, parse_vertex_set, parse_weights, write_graph};
use treealpha::mwis::{solve_mwis_with, SolveOptions};
use treealpha::oracle::{tin_exact_with, treewidth_exact_with, OracleLimits, MAX_ORACLE_CAP};
use treealpha::packing::io::parse_family;
use treealpha::packing::{
    blob_family, derived_decomposition, derived_graph, enumerate_f_subgraphs, k_separator,
    solve_packing_with, PackingInstance, Pattern, BLOB_CAP,
};
use treealpha::{Graph, VertexSet, WeightMap};

use crate::error::CliError;
use crate::report::Session;
use crate::{GraphArg, GraphTd, PackArgs};

fn ids(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn load_graph(session: &mut Session, arg: &GraphArg) -> Result<Graph, CliError> {
    let text = session.read("graph", arg.graph.as_deref())?;
    Ok(parse_graph(&text)?)
}

fn load_td(
    session: &mut Session,
    role: &'static str,
    path: &Path,
) -> Result<RefinedTreeDecomposition, CliError> {
    let text = session.read(role, Some(path))?;
    Ok(parse_td(&text)?)
}

fn load_both(
    session: &mut Session,
    input: &GraphTd,
) -> Result<(Graph, RefinedTreeDecomposition), CliError> {
    let g = load_graph(session, &input.graph)?;
    let td = load_td(session, "td", &input.td)?;
    Ok((g, td))
}

fn load_weights(
    session: &mut Session,
    path: Option<&PathBuf>,
    n: usize,
) -> Result<WeightMap, CliError> {
    match path {
        Some(p) => {
            let text = session.read("weights", Some(p))?;
            Ok(parse_weights(&text, n)?)
        }
        None => Ok(WeightMap::unit(n)),
    }
}

/// Valid decompositions only; anything else exits with a violation.
fn load_valid(
    session: &mut Session,
    input: &GraphTd,
) -> Result<(Graph, RefinedTreeDecomposition), CliError> {
    let (g, td) = load_both(session, input)?;
    check(&g, &td).into_result()?;
    Ok((g, td))
}

pub fn validate(session: &mut Session, input: &GraphTd) -> Result<(bool, Value), CliError> {
    let (g, td) = load_both(session, input)?;
    let report = check(&g, &td);
    let violations: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    Ok((
        report.is_ok(),
        json!({ "valid": report.is_ok(), "violations": violations }),
    ))
}

pub fn measure(session: &mut Session, input: &GraphTd) -> Result<Value, CliError> {
    let (g, td) = load_valid(session, input)?;
    Ok(json!({
        "nodes": td.node_count(),
        "width": td.width(),
        "independence_number": independence_number(&g, &td)?,
        "residual_independence_number": residual_independence_number(&g, &td)?,
        "refinement_level": td.refinement_level(),
    }))
}

pub fn nice(
    session: &mut Session,
    input: &GraphTd,
    output: Option<&PathBuf>,
) -> Result<Value, CliError> {
    let (g, td) = load_valid(session, input)?;
    let nice = make_nice(&g, &td)?;
    let mut kinds = BTreeMap::from([
        ("leaf", 0usize),
        ("introduce", 0),
        ("forget", 0),
        ("join", 0),
    ]);
    for t in 0..nice.node_count() {
        let kind = match nice.kind(t) {
            NodeKind::Leaf => "leaf",
            NodeKind::Introduce(_) => "introduce",
            NodeKind::Forget(_) => "forget",
            NodeKind::Join => "join",
        };
        *kinds.get_mut(kind).expect("known kind") += 1;
    }
    let text = write_td(nice.decomposition());
    let mut results = json!({
        "nodes": nice.node_count(),
        "root": nice.root() + 1,
        "kinds": kinds,
        "width": nice.decomposition().width(),
        "residual_independence_number": residual_independence_number(&g, nice.decomposition())?,
    });
    match output {
        Some(path) => session.write("td", path, &text)?,
        None => results["td"] = Value::String(text),
    }
    Ok(results)
}

pub fn mwis(
    session: &mut Session,
    input: &GraphTd,
    weights: Option<&PathBuf>,
    k: Option<usize>,
    threads: usize,
) -> Result<Value, CliError> {
    let (g, td) = load_valid(session, input)?;
    let w = load_weights(session, weights, g.n())?;
    let k = match k {
        Some(k) => k,
        None => residual_independence_number(&g, &td)?,
    };
    let sol = solve_mwis_with(&g, &w, &td, k, SolveOptions { threads })?;
    Ok(json!({ "k": k, "weight": sol.weight.to_string(), "set": ids(&sol.set) }))
}

pub fn pack(session: &mut Session, args: &PackArgs, threads: usize) -> Result<Value, CliError> {
    let (g, td) = load_valid(session, &args.input)?;
    if args.cover && args.weights.is_some() {
        return Err(CliError::Usage(
            "--cover and --weights are exclusive".into(),
        ));
    }
    let k = match args.k {
        Some(k) => k,
        None => independence_number(&g, &td)?,
    };
    let vertex_weights = load_weights(session, args.weights.as_ref(), g.n())?;
    let mut results = json!({ "k": k });
    let mut presolved = None;

    let instance = if let Some(path) = &args.family {
        if args.weights.is_some() || args.cover {
            return Err(CliError::Usage(
                "family files carry their own weights".into(),
            ));
        }
        let text = session.read("family", Some(path))?;
        parse_family(&text, &g)?
    } else if let Some(list) = &args.patterns {
        let mut patterns = Vec::new();
        for token in list.split(',').map(str::trim) {
            if token.ends_with(".gr") {
                let text = session.read("pattern", Some(Path::new(token)))?;
                patterns.push(Pattern::from_gr(token, &text)?);
            } else {
                patterns.extend(Pattern::parse_list(token)?);
            }
        }
        let family = enumerate_f_subgraphs(&g, &patterns)?;
        PackingInstance::covering(family, &vertex_weights)?
    } else if let Some(s) = args.separator {
        let sep = k_separator(&g, &vertex_weights, s, &td, k)?;
        results["separator"] = json!(ids(&sep.separator));
        results["separator_weight"] = json!(sep.weight.to_string());
        presolved = Some(sep.packing.solution);
        sep.packing.instance
    } else {
        PackingInstance::covering(blob_family(&g, BLOB_CAP)?, &vertex_weights)?
    };

    let family = instance.family();
    if args.emit_derived.is_some() || args.emit_derived_td.is_some() {
        let dg = derived_graph(&g, family)?;
        session.write_optional("derived_graph", args.emit_derived.as_ref(), || {
            write_graph(&dg)
        })?;
        let dtd = derived_decomposition(&g, family, &td)?;
        session.write_optional("derived_td", args.emit_derived_td.as_ref(), || {
            write_td(&dtd)
        })?;
    }
    let sol = match presolved {
        Some(sol) => sol,
        None => solve_packing_with(&g, &instance, &td, k, SolveOptions { threads })?,
    };
    let members: Vec<Vec<usize>> = sol
        .selected
        .iter()
        .map(|&j| ids(family.member(j)))
        .collect();
    results["family_size"] = json!(family.len());
    results["weight"] = json!(sol.weight.to_string());
    results["selected"] = json!(sol.selected.iter().map(|j| j + 1).collect::<Vec<_>>());
    results["members"] = json!(members);
    Ok(results)
}

fn oracle_limits(force: bool) -> OracleLimits {
    if force {
        OracleLimits {
            max_vertices: MAX_ORACLE_CAP,
        }
    } else {
        OracleLimits::default()
    }
}

pub fn tin(
    session: &mut Session,
    graph: &GraphArg,
    force: bool,
    output: Option<&PathBuf>,
) -> Result<Value, CliError> {
    let g = load_graph(session, graph)?;
    let (tin, witness) = tin_exact_with(&g, oracle_limits(force))?;
    let text = write_td(&witness);
    let mut results =
        json!({ "tree_independence_number": tin, "witness_nodes": witness.node_count() });
    match output {
        Some(path) => session.write("td", path, &text)?,
        None => results["td"] = Value::String(text),
    }
    Ok(results)
}

pub fn tw(session: &mut Session, graph: &GraphArg, force: bool) -> Result<Value, CliError> {
    let g = load_graph(session, graph)?;
    Ok(json!({ "treewidth": treewidth_exact_with(&g, oracle_limits(force))? }))
}

/// `None` when the graph went to standard output.
pub fn generate(
    session: &mut Session,
    spec: &[String],
    output: Option<&PathBuf>,
) -> Result<Option<Value>, CliError> {
    let words: Vec<&str> = spec.iter().map(String::as_str).collect();
    let g = GeneratorKind::parse(&words)?.build()?;
    let text = write_graph(&g);
    match output {
        Some(path) => {
            session.write("graph", path, &text)?;
            Ok(Some(
                json!({ "generator": words.join(" "), "n": g.n(), "m": g.edge_count() }),
            ))
        }
        None => {
            print!("{text}");
            Ok(None)
        }
    }
}

pub fn compose(
    session: &mut Session,
    graph: &GraphArg,
    cut: &[PathBuf],
    td_a: &Path,
    td_b: &Path,
    output: Option<&PathBuf>,
) -> Result<Value, CliError> {
    let g = load_graph(session, graph)?;
    let mut sets = Vec::with_capacity(3);
    for (role, path) in ["cut_a", "cut_b", "cut_c"].into_iter().zip(cut) {
        let text = session.read(role, Some(path))?;
        sets.push(parse_vertex_set(&text, g.n())?);
    }
    let ta = load_td(session, "td_a", td_a)?;
    let tb = load_td(session, "td_b", td_b)?;
    let composed = compose_clique_cutset(&g, &sets[0], &sets[1], &sets[2], &ta, &tb)?;
    let text = write_td(&composed);
    let mut results = json!({
        "nodes": composed.node_count(),
        "width": composed.width(),
        "independence_number": independence_number(&g, &composed)?,
        "residual_independence_number": residual_independence_number(&g, &composed)?,
    });
    match output {
        Some(path) => session.write("td", path, &text)?,
        None => results["td"] = Value::String(text),
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_one_indexed() {
        let set = VertexSet::from_vertices(4, [0, 3]).unwrap();
        assert_eq!(ids(&set), vec![1, 4]);
    }
}
