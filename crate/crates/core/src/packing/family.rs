use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::weight::{Weight, WeightMap};

/// An indexed family of connected, nonempty vertex sets of one host graph.
///
/// Members are vertex sets rather than subgraphs: a connected subgraph with
/// vertex set `S` exists iff `G[S]` is connected, and two subgraphs on the same
/// vertex set conflict with exactly the same members. Weights that depend on
/// more than the vertex set must be aggregated (maximum per set) by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphFamily {
    host_order: usize,
    members: Vec<VertexSet>,
}

impl SubgraphFamily {
    pub fn new(host: &Graph, members: Vec<VertexSet>) -> Result<Self> {
        let family = SubgraphFamily {
            host_order: host.n(),
            members,
        };
        family.check_host(host)?;
        Ok(family)
    }

    /// Members must already be known to be valid for a host of this order.
    pub(crate) fn new_unchecked(host_order: usize, members: Vec<VertexSet>) -> Self {
        SubgraphFamily {
            host_order,
            members,
        }
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn member(&self, j: usize) -> &VertexSet {
        &self.members[j]
    }

    /// Fails unless every member is a nonempty vertex set inducing a connected
    /// subgraph of `host`.
    pub fn check_host(&self, host: &Graph) -> Result<()> {
        if host.n() != self.host_order {
            return Err(Error::InvalidFamily(format!(
                "family is over {} vertices but the graph has {}",
                self.host_order,
                host.n()
            )));
        }
        for (j, member) in self.members.iter().enumerate() {
            if member.universe() != host.n() {
                return Err(Error::InvalidFamily(format!(
                    "member {} is over {} vertices but the graph has {}",
                    j + 1,
                    member.universe(),
                    host.n()
                )));
            }
            if member.is_empty() {
                return Err(Error::InvalidFamily(format!("member {} is empty", j + 1)));
            }
            if !host.is_connected_within(member) {
                return Err(Error::InvalidFamily(format!(
                    "member {} does not induce a connected subgraph",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Vertex-disjoint with no edge between them.
    pub fn compatible(&self, host: &Graph, i: usize, j: usize) -> bool {
        let (a, b) = (&self.members[i], &self.members[j]);
        !a.intersects(b)
            && a.iter()
                .all(|v| host.neighbors(v).iter().all(|&u| !b.contains(u)))
    }

    /// The members of `selected`, as one vertex set.
    pub fn union_of(&self, selected: &[usize]) -> VertexSet {
        let mut union = VertexSet::new(self.host_order);
        for &j in selected {
            union.union_with(&self.members[j]);
        }
        union
    }
}

/// A family with a nonnegative rational weight per member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingInstance {
    family: SubgraphFamily,
    weights: WeightMap,
}

impl PackingInstance {
    pub fn new(family: SubgraphFamily, weights: WeightMap) -> Result<Self> {
        if weights.len() != family.len() {
            return Err(Error::InvalidFamily(format!(
                "{} weights for {} members",
                weights.len(),
                family.len()
            )));
        }
        Ok(PackingInstance { family, weights })
    }

    pub fn unit(family: SubgraphFamily) -> Self {
        let weights = WeightMap::unit(family.len());
        PackingInstance { family, weights }
    }

    /// Each member weighted by the total vertex weight it covers.
    pub fn covering(family: SubgraphFamily, vertex_weights: &WeightMap) -> Result<Self> {
        if vertex_weights.len() != family.host_order() {
            return Err(Error::InvalidParameter(format!(
                "{} weights for {} vertices",
                vertex_weights.len(),
                family.host_order()
            )));
        }
        let weights = family
            .members()
            .iter()
            .map(|m| vertex_weights.total(m.iter()))
            .collect::<Vec<Weight>>();
        Ok(PackingInstance {
            family,
            weights: weights.into(),
        })
    }

    pub fn family(&self) -> &SubgraphFamily {
        &self.family
    }

    pub fn weights(&self) -> &WeightMap {
        &self.weights
    }

    pub fn weight(&self, j: usize) -> &Weight {
        self.weights.get(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn members_must_be_connected_and_nonempty() {
        let p4 = generators::path(4).unwrap();
        assert!(SubgraphFamily::new(&p4, vec![set(4, &[0, 1]), set(4, &[3])]).is_ok());
        assert!(SubgraphFamily::new(&p4, vec![set(4, &[0, 2])]).is_err());
        assert!(SubgraphFamily::new(&p4, vec![set(4, &[])]).is_err());
        assert!(SubgraphFamily::new(&p4, vec![set(5, &[0])]).is_err());
        let family = SubgraphFamily::new(&p4, vec![set(4, &[0])]).unwrap();
        assert!(family.check_host(&generators::path(5).unwrap()).is_err());
    }

    #[test]
    fn compatibility() {
        let p4 = generators::path(4).unwrap();
        let family = SubgraphFamily::new(
            &p4,
            vec![set(4, &[0]), set(4, &[1, 2]), set(4, &[3]), set(4, &[2])],
        )
        .unwrap();
        assert!(family.compatible(&p4, 0, 2));
        assert!(!family.compatible(&p4, 0, 1));
        assert!(!family.compatible(&p4, 1, 3));
        assert!(!family.compatible(&p4, 2, 3));
    }

    #[test]
    fn covering_weights() {
        let p3 = generators::path(3).unwrap();
        let family = SubgraphFamily::new(&p3, vec![set(3, &[0, 1]), set(3, &[2])]).unwrap();
        let w = WeightMap::new(vec![
            Weight::integer(2),
            Weight::ratio(1, 2).unwrap(),
            Weight::one(),
        ]);
        let inst = PackingInstance::covering(family, &w).unwrap();
        assert_eq!(inst.weight(0), &Weight::ratio(5, 2).unwrap());
        assert_eq!(inst.weight(1), &Weight::one());
    }
}
