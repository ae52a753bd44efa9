use crate::error::{Error, Result};
use crate::graph::{low_bits, mask_bits, Graph, VertexSet};
use crate::weight::{Weight, WeightMap};

pub const BRUTE_FORCE_CAP: usize = 22;

/// Maximum weight independent set by exhaustive branching (take the lowest
/// candidate or drop it), pruned when the remaining weight cannot win.
pub fn brute_force_mwis(g: &Graph, weights: &WeightMap) -> Result<(Weight, VertexSet)> {
    if g.n() > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force MWIS",
            size: g.n(),
            cap: BRUTE_FORCE_CAP,
        });
    }
    if weights.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "{} weights for {} vertices",
            weights.len(),
            g.n()
        )));
    }
    let adj = g.adjacency_masks().expect("n <= 22");
    let mut search = Search {
        adj: &adj,
        weights: weights.as_slice(),
        best: Weight::zero(),
        best_set: 0,
    };
    search.run(low_bits(g.n()), Weight::zero(), 0);
    let set = VertexSet::from_mask(g.n(), search.best_set);
    Ok((search.best, set))
}

struct Search<'a> {
    adj: &'a [u64],
    weights: &'a [Weight],
    best: Weight,
    best_set: u64,
}

impl Search<'_> {
    fn run(&mut self, candidates: u64, current: Weight, chosen: u64) {
        if candidates == 0 {
            if current > self.best {
                self.best = current;
                self.best_set = chosen;
            }
            return;
        }
        let mut bound = current.clone();
        for v in mask_bits(candidates) {
            bound += &self.weights[v];
        }
        if bound <= self.best {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let taken = &current + &self.weights[v];
        self.run(
            candidates & !self.adj[v] & !(1 << v),
            taken,
            chosen | 1 << v,
        );
        self.run(candidates & !(1 << v), current, chosen);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn examples() {
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(
            brute_force_mwis(&c5, &WeightMap::unit(5)).unwrap().0,
            Weight::integer(2)
        );
        let p3 = generators::path(3).unwrap();
        let w = WeightMap::new(vec![
            Weight::integer(3),
            Weight::integer(1),
            Weight::integer(3),
        ]);
        let (best, set) = brute_force_mwis(&p3, &w).unwrap();
        assert_eq!(best, Weight::integer(6));
        assert_eq!(set.to_vec(), vec![0, 2]);
        let (best, set) = brute_force_mwis(&Graph::edgeless(0), &WeightMap::unit(0)).unwrap();
        assert_eq!(best, Weight::zero());
        assert!(set.is_empty());
    }

    #[test]
    fn cap() {
        assert!(brute_force_mwis(&Graph::edgeless(23), &WeightMap::unit(23)).is_err());
    }
}
