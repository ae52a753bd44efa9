//! WebAssembly bindings behind `www/index.html`.
//!
//! Every operation takes and returns text: graphs in `.gr` format, results as
//! JSON with 1-indexed vertices. The `*_json` functions hold the logic so they
//! can be tested natively; the exported wrappers only convert errors.

use serde_json::json;
use treealpha::graph::generators::GeneratorKind;
use treealpha::graph::io::{parse_graph, parse_weights, write_graph};
use treealpha::oracle::{tin_exact, treewidth_exact, DEFAULT_ORACLE_CAP};
use treealpha::{solve_mwis, Graph, RefinedTreeDecomposition, VertexSet, WeightMap};
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts; both exact oracles stay interactive below it.
pub const DEMO_CAP: usize = DEFAULT_ORACLE_CAP;

/// `.gr` text for a generator such as `cycle 5` or `double-join knn 2`.
#[wasm_bindgen]
pub fn generate(spec: &str) -> Result<String, JsError> {
    generate_text(spec).map_err(|e| JsError::new(&e))
}

/// Tree-independence number and treewidth with an optimal witness decomposition.
#[wasm_bindgen]
pub fn tree_alpha(graph: &str) -> Result<String, JsError> {
    tree_alpha_json(graph).map_err(|e| JsError::new(&e))
}

/// Maximum weight independent set, solved over the optimal witness.
/// `weights` holds `<v> <weight>` lines; blank means unit weights.
#[wasm_bindgen]
pub fn mwis(graph: &str, weights: &str) -> Result<String, JsError> {
    mwis_json(graph, weights).map_err(|e| JsError::new(&e))
}

pub fn generate_text(spec: &str) -> Result<String, String> {
    let words: Vec<&str> = spec.split_whitespace().collect();
    let g = GeneratorKind::parse(&words)
        .and_then(|kind| kind.build())
        .map_err(|e| e.to_string())?;
    Ok(write_graph(&g))
}

pub fn tree_alpha_json(graph: &str) -> Result<String, String> {
    let g = load(graph)?;
    let (tin, witness) = tin_exact(&g).map_err(|e| e.to_string())?;
    let tw = treewidth_exact(&g).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": g.n(),
        "edges": edges(&g),
        "tree_independence_number": tin,
        "treewidth": tw,
        "bags": bags(&witness),
        "tree_edges": witness.tree_edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
    })
    .to_string())
}

pub fn mwis_json(graph: &str, weights: &str) -> Result<String, String> {
    let g = load(graph)?;
    let w = if weights.trim().is_empty() {
        WeightMap::unit(g.n())
    } else {
        parse_weights(weights, g.n()).map_err(|e| e.to_string())?
    };
    let (tin, witness) = tin_exact(&g).map_err(|e| e.to_string())?;
    let sol = solve_mwis(&g, &w, &witness, tin).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": g.n(),
        "edges": edges(&g),
        "k": tin,
        "weight": sol.weight.to_string(),
        "set": ids(&sol.set),
    })
    .to_string())
}

fn load(text: &str) -> Result<Graph, String> {
    let g = parse_graph(text).map_err(|e| e.to_string())?;
    if g.n() > DEMO_CAP {
        return Err(format!(
            "the demo accepts at most {DEMO_CAP} vertices, got {}",
            g.n()
        ));
    }
    Ok(g)
}

fn ids(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn edges(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().map(|(u, v)| [u + 1, v + 1]).collect()
}

fn bags(td: &RefinedTreeDecomposition) -> Vec<Vec<usize>> {
    td.bags().iter().map(ids).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parsed(text: &str) -> Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn generated_graphs_parse_back() {
        let text = generate_text("knn 3").unwrap();
        assert_eq!(parse_graph(&text).unwrap().edge_count(), 9);
        assert!(generate_text("dodecahedron").is_err());
    }

    #[test]
    fn five_cycle_measures() {
        let v = parsed(&tree_alpha_json(&generate_text("cycle 5").unwrap()).unwrap());
        assert_eq!(v["tree_independence_number"], 2);
        assert_eq!(v["treewidth"], 2);
        assert_eq!(v["edges"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn weighted_path() {
        let v = parsed(&mwis_json("p tw 3 2\n1 2\n2 3\n", "1 3\n2 1\n3 3\n").unwrap());
        assert_eq!(v["weight"], "6/1");
        assert_eq!(v["set"], json!([1, 3]));
        let v = parsed(&mwis_json("p tw 3 2\n1 2\n2 3\n", "").unwrap());
        assert_eq!(v["weight"], "2/1");
    }

    #[test]
    fn large_graphs_are_refused() {
        let big = generate_text(&format!("path {}", DEMO_CAP + 1)).unwrap();
        assert!(tree_alpha_json(&big).unwrap_err().contains("at most"));
    }
}
