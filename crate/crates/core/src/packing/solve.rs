use crate::decomposition::RefinedTreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::mwis::{solve_mwis_with, SolveOptions};
use crate::oracle::brute_force_mwis;
use crate::packing::derived::{
    derived_decomposition, derived_graph, derived_graph_with, DerivedMethod,
};
use crate::packing::family::{PackingInstance, SubgraphFamily};
use crate::packing::patterns::{connected_sets, enumerate_f_subgraphs, Pattern, PATTERN_CAP};
use crate::weight::{Weight, WeightMap};

/// Largest family accepted by [`brute_force_packing`].
pub const BRUTE_FORCE_PACKING_CAP: usize = 22;

/// Selected member indices (ascending) and their total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingSolution {
    pub weight: Weight,
    pub selected: Vec<usize>,
}

/// A front-end's instance together with its optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvedPacking {
    pub instance: PackingInstance,
    pub solution: PackingSolution,
}

impl SolvedPacking {
    /// Vertices covered by the selected members.
    pub fn covered(&self) -> VertexSet {
        self.instance.family().union_of(&self.solution.selected)
    }
}

/// Maximum weight independent packing: pairwise vertex-disjoint members with
/// no edge between any two, of largest total weight.
///
/// Solved as MWIS on the derived graph over the derived decomposition, whose
/// independence number is at most that of `td`; `k` must bound the latter.
pub fn solve_packing(
    g: &Graph,
    instance: &PackingInstance,
    td: &RefinedTreeDecomposition,
    k: usize,
) -> Result<PackingSolution> {
    solve_packing_with(g, instance, td, k, SolveOptions::default())
}

pub fn solve_packing_with(
    g: &Graph,
    instance: &PackingInstance,
    td: &RefinedTreeDecomposition,
    k: usize,
    options: SolveOptions,
) -> Result<PackingSolution> {
    let family = instance.family();
    let dg = derived_graph(g, family)?;
    let dtd = derived_decomposition(g, family, td)?;
    let mwis = solve_mwis_with(&dg, instance.weights(), &dtd, k, options)?;
    let selected = mwis.set.to_vec();
    assert_pairwise_compatible(g, family, &selected);
    Ok(PackingSolution {
        weight: mwis.weight,
        selected,
    })
}

fn assert_pairwise_compatible(g: &Graph, family: &SubgraphFamily, selected: &[usize]) {
    for (a, &i) in selected.iter().enumerate() {
        for &j in &selected[a + 1..] {
            assert!(family.compatible(g, i, j), "members {i} and {j} conflict");
        }
    }
}

/// Exhaustive optimum over subfamilies, with conflicts tested pair by pair.
pub fn brute_force_packing(g: &Graph, instance: &PackingInstance) -> Result<PackingSolution> {
    let family = instance.family();
    if family.len() > BRUTE_FORCE_PACKING_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force packing family size",
            size: family.len(),
            cap: BRUTE_FORCE_PACKING_CAP,
        });
    }
    let conflicts = derived_graph_with(g, family, DerivedMethod::Pairwise)?;
    let (weight, set) = brute_force_mwis(&conflicts, instance.weights())?;
    Ok(PackingSolution {
        weight,
        selected: set.to_vec(),
    })
}

/// Weighted induced matching: `F = {K2}`. `edge_weights` follows the order of
/// [`Graph::edges`]; `None` means unit weights.
pub fn induced_matching(
    g: &Graph,
    edge_weights: Option<&WeightMap>,
    td: &RefinedTreeDecomposition,
    k: usize,
) -> Result<SolvedPacking> {
    let family = enumerate_f_subgraphs(g, &[Pattern::named("k2")?])?;
    let weights = match edge_weights {
        None => WeightMap::unit(family.len()),
        Some(w) => {
            if w.len() != g.edge_count() {
                return Err(Error::InvalidParameter(format!(
                    "{} edge weights for {} edges",
                    w.len(),
                    g.edge_count()
                )));
            }
            // Both lists are sorted by (u, v) with u < v.
            w.clone()
        }
    };
    solved(g, PackingInstance::new(family, weights)?, td, k)
}

/// Largest dissociation set (vertices inducing maximum degree at most one):
/// `F = {K1, K2}`, each member weighted by its order.
pub fn dissociation_set(
    g: &Graph,
    td: &RefinedTreeDecomposition,
    k: usize,
) -> Result<SolvedPacking> {
    let family = enumerate_f_subgraphs(g, &Pattern::parse_list("k1,k2")?)?;
    let instance = PackingInstance::covering(family, &WeightMap::unit(g.n()))?;
    solved(g, instance, td, k)
}

/// A minimum weight `s`-component separator `X`: every component of `G - X`
/// has at most `s` vertices. Returned with the packing of the kept components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSeparator {
    pub packing: SolvedPacking,
    pub separator: VertexSet,
    pub weight: Weight,
}

/// Packs connected sets of order at most `s` weighted by their vertex weight;
/// the complement of an optimal packing is an optimal separator.
pub fn k_separator(
    g: &Graph,
    vertex_weights: &WeightMap,
    s: usize,
    td: &RefinedTreeDecomposition,
    k: usize,
) -> Result<ComponentSeparator> {
    if s == 0 {
        return Err(Error::InvalidParameter(
            "component order s must be positive".into(),
        ));
    }
    if s > PATTERN_CAP {
        return Err(Error::CapExceeded {
            what: "separator component order",
            size: s,
            cap: PATTERN_CAP,
        });
    }
    let family = SubgraphFamily::new_unchecked(g.n(), connected_sets(g, s));
    let instance = PackingInstance::covering(family, vertex_weights)?;
    let packing = solved(g, instance, td, k)?;
    let separator = g.vertex_set().difference(&packing.covered());
    let weight = vertex_weights.total(separator.iter());
    Ok(ComponentSeparator {
        packing,
        separator,
        weight,
    })
}

fn solved(
    g: &Graph,
    instance: PackingInstance,
    td: &RefinedTreeDecomposition,
    k: usize,
) -> Result<SolvedPacking> {
    let solution = solve_packing(g, &instance, td, k)?;
    Ok(SolvedPacking { instance, solution })
}
