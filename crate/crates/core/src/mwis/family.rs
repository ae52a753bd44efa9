use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An independent subset `S` of a bag, split into `S ∩ U_t` and `S ∩ (X_t \ U_t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BagSet {
    pub set: Vec<usize>,
    pub refined_part: Vec<usize>,
    pub residual_part: Vec<usize>,
}

/// All independent subsets of one bag, each listed once, vertex lists ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BagIndependentFamily {
    pub sets: Vec<BagSet>,
}

impl BagIndependentFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Enumerates the independent subsets of `bag` by pairing every independent
/// subset of `refined` with every independent subset of `bag \ refined` of size
/// at most `k`, keeping the unions that stay independent.
///
/// Fails if `bag \ refined` holds an independent set of size `k + 1`; the
/// family size is then not bounded by the promised residual bound.
pub fn enumerate_bag_independent_sets(
    g: &Graph,
    bag: &VertexSet,
    refined: &VertexSet,
    k: usize,
) -> Result<BagIndependentFamily> {
    enumerate_at(g, bag, refined, k, 0)
}

pub(crate) fn enumerate_at(
    g: &Graph,
    bag: &VertexSet,
    refined: &VertexSet,
    k: usize,
    node: usize,
) -> Result<BagIndependentFamily> {
    g.check_set(bag)?;
    let refined = refined.intersection(bag);
    let residual = bag.difference(&refined).to_vec();
    let refined = refined.to_vec();

    let mut residual_sets = Vec::new();
    let mut prefix = Vec::new();
    if let Some(witness) =
        independent_subsets(g, &residual, Some(k), &mut prefix, 0, &mut residual_sets)
    {
        return Err(Error::ResidualBoundViolated {
            node,
            bound: k,
            witness,
        });
    }
    let mut refined_sets = Vec::new();
    independent_subsets(g, &refined, None, &mut prefix, 0, &mut refined_sets);

    let mut sets = Vec::new();
    for s2 in &residual_sets {
        for s1 in &refined_sets {
            if s1.iter().all(|&a| s2.iter().all(|&b| !g.has_edge(a, b))) {
                let mut set: Vec<usize> = s1.iter().chain(s2).copied().collect();
                set.sort_unstable();
                sets.push(BagSet {
                    set,
                    refined_part: s1.clone(),
                    residual_part: s2.clone(),
                });
            }
        }
    }
    Ok(BagIndependentFamily { sets })
}

/// Pushes every independent subset of `pool` extending `prefix` (with later
/// pool elements) into `out`. With a size limit, returns the first independent
/// set exceeding it instead of descending further.
fn independent_subsets(
    g: &Graph,
    pool: &[usize],
    limit: Option<usize>,
    prefix: &mut Vec<usize>,
    start: usize,
    out: &mut Vec<Vec<usize>>,
) -> Option<Vec<usize>> {
    out.push(prefix.clone());
    for i in start..pool.len() {
        let v = pool[i];
        if prefix.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        prefix.push(v);
        if limit.is_some_and(|k| prefix.len() > k) {
            let witness = prefix.clone();
            prefix.pop();
            return Some(witness);
        }
        let found = independent_subsets(g, pool, limit, prefix, i + 1, out);
        prefix.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn sets(family: &BagIndependentFamily) -> Vec<Vec<usize>> {
        let mut all: Vec<_> = family.sets.iter().map(|s| s.set.clone()).collect();
        all.sort();
        all
    }

    #[test]
    fn path_bag() {
        let p3 = generators::path(3).unwrap();
        let fam =
            enumerate_bag_independent_sets(&p3, &p3.vertex_set(), &VertexSet::new(3), 2).unwrap();
        assert_eq!(
            sets(&fam),
            vec![vec![], vec![0], vec![0, 2], vec![1], vec![2]]
        );
    }

    #[test]
    fn clique_bag() {
        let k5 = generators::complete(5);
        let fam =
            enumerate_bag_independent_sets(&k5, &k5.vertex_set(), &VertexSet::new(5), 1).unwrap();
        assert_eq!(fam.len(), 6);
    }

    #[test]
    fn refined_cycle_bag() {
        let c4 = generators::cycle(4).unwrap();
        let u = VertexSet::from_vertices(4, [0]).unwrap();
        // the remainder 1-2-3 holds the independent pair {1, 3}
        let err = enumerate_bag_independent_sets(&c4, &c4.vertex_set(), &u, 1).unwrap_err();
        assert!(
            matches!(err, Error::ResidualBoundViolated { ref witness, .. } if witness == &vec![1, 3])
        );
        let fam = enumerate_bag_independent_sets(&c4, &c4.vertex_set(), &u, 2).unwrap();
        assert_eq!(
            sets(&fam),
            vec![
                vec![],
                vec![0],
                vec![0, 2],
                vec![1],
                vec![1, 3],
                vec![2],
                vec![3]
            ]
        );
        let split = fam.sets.iter().find(|s| s.set == vec![0, 2]).unwrap();
        assert_eq!(split.refined_part, vec![0]);
        assert_eq!(split.residual_part, vec![2]);
    }

    #[test]
    fn residual_bound_violation_is_detected() {
        let c4 = generators::cycle(4).unwrap();
        let err = enumerate_bag_independent_sets(&c4, &c4.vertex_set(), &VertexSet::new(4), 1)
            .unwrap_err();
        assert!(
            matches!(err, Error::ResidualBoundViolated { bound: 1, ref witness, .. } if witness.len() == 2)
        );
    }

    #[test]
    fn family_size_respects_the_counting_bound() {
        let g = generators::sharpness(3).unwrap();
        let bag = VertexSet::from_vertices(12, [0, 1, 3, 4, 5, 6]).unwrap();
        let u = VertexSet::from_vertices(12, [0, 1]).unwrap();
        let fam = enumerate_bag_independent_sets(&g, &bag, &u, 4).unwrap();
        // 2^|U| · Σ_{i ≤ 4} C(4, i)
        assert!(fam.len() <= 4 * 16);
        assert!(fam.sets.iter().all(|s| {
            let set = VertexSet::from_vertices(12, s.set.iter().copied()).unwrap();
            crate::graph::is_independent(&g, &set).unwrap()
        }));
    }
}
