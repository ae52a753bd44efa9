//! Conversion of (refined) tree decompositions into nice form.

use std::collections::BTreeSet;

use crate::decomposition::refined::{validate, RefinedTreeDecomposition};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// [`make_nice`] output has at most `NICE_NODE_FACTOR · (width + 2) · |V(T)|`
/// nodes, where `width` and `|V(T)|` belong to the input decomposition.
pub const NICE_NODE_FACTOR: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// A rooted refined tree decomposition whose root and leaf bags are empty and
/// whose other nodes introduce or forget one vertex, or join two equal bags.
#[derive(Clone, Debug)]
pub struct NiceRefinedTreeDecomposition {
    decomposition: RefinedTreeDecomposition,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    kinds: Vec<NodeKind>,
}

impl NiceRefinedTreeDecomposition {
    pub fn decomposition(&self) -> &RefinedTreeDecomposition {
        &self.decomposition
    }

    pub fn into_decomposition(self) -> RefinedTreeDecomposition {
        self.decomposition
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn children(&self, node: usize) -> &[usize] {
        &self.children[node]
    }

    pub fn kind(&self, node: usize) -> NodeKind {
        self.kinds[node]
    }

    pub fn bag(&self, node: usize) -> &VertexSet {
        self.decomposition.bag(node)
    }

    pub fn refined(&self, node: usize) -> &VertexSet {
        self.decomposition.refined(node)
    }

    /// Node ids with every child before its parent.
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.node_count());
        let mut stack = vec![self.root];
        while let Some(t) = stack.pop() {
            order.push(t);
            stack.extend(self.children[t].iter().copied());
        }
        order.reverse();
        order
    }

    /// Height of each node above its deepest leaf descendant.
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0; self.node_count()];
        for t in self.postorder() {
            height[t] = self.children[t]
                .iter()
                .map(|&c| height[c] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Checks the nice-form invariants, naming the first offending node.
    pub fn check_nice(&self) -> std::result::Result<(), String> {
        if !self.bag(self.root).is_empty() {
            return Err(format!("root {} has a nonempty bag", self.root));
        }
        if self.parent[self.root].is_some() {
            return Err("root has a parent".into());
        }
        for t in 0..self.node_count() {
            let bag = self.bag(t);
            let kids = &self.children[t];
            for &c in kids {
                if self.parent[c] != Some(t) {
                    return Err(format!("parent link of node {c} does not point to {t}"));
                }
            }
            let ok = match self.kinds[t] {
                NodeKind::Leaf => kids.is_empty() && bag.is_empty(),
                NodeKind::Introduce(v) => {
                    kids.len() == 1 && {
                        let child = self.bag(kids[0]);
                        !child.contains(v) && bag.contains(v) && {
                            let mut expect = child.clone();
                            expect.insert(v);
                            &expect == bag
                        }
                    }
                }
                NodeKind::Forget(v) => {
                    kids.len() == 1 && {
                        let child = self.bag(kids[0]);
                        child.contains(v) && {
                            let mut expect = child.clone();
                            expect.remove(v);
                            &expect == bag
                        }
                    }
                }
                NodeKind::Join => kids.len() == 2 && kids.iter().all(|&c| self.bag(c) == bag),
            };
            if !ok {
                return Err(format!("node {t} violates its {:?} shape", self.kinds[t]));
            }
        }
        Ok(())
    }
}

struct Pending {
    bag: VertexSet,
    refined: VertexSet,
    children: Vec<usize>,
    join: bool,
}

/// Converts a valid refined tree decomposition into a nice one.
///
/// Every output node `t'` has an input node `t` with `X_{t'} ⊆ X_t` and
/// `U_{t'} = U_t ∩ X_{t'}`, so the residual independence number cannot grow.
/// Steps: contract adjacent comparable bags; root at the lowest-id node of
/// degree at most one; split nodes with three or more children into a path of
/// join nodes; subdivide join edges whose bags differ; hang an empty leaf below
/// every leaf and an empty root above the root; expand each remaining edge into
/// forgets (ascending vertex id) followed by introduces (ascending vertex id).
pub fn make_nice(g: &Graph, td: &RefinedTreeDecomposition) -> Result<NiceRefinedTreeDecomposition> {
    validate(g, td).into_result()?;
    let universe = td.universe();
    let (bags, refined, adjacency, alive) = contract_comparable(td);

    let root = (0..bags.len())
        .find(|&t| alive[t] && adjacency[t].len() <= 1)
        .expect("a tree has a node of degree at most one");
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); bags.len()];
    let mut stack = vec![(root, usize::MAX)];
    while let Some((t, from)) = stack.pop() {
        for &c in &adjacency[t] {
            if c != from {
                children[t].push(c);
                stack.push((c, t));
            }
        }
    }

    let empty = VertexSet::new(universe);
    let mut pending: Vec<Pending> = Vec::new();
    let push = |pending: &mut Vec<Pending>, bag: &VertexSet, refined: &VertexSet| {
        pending.push(Pending {
            bag: bag.clone(),
            refined: refined.clone(),
            children: Vec::new(),
            join: false,
        });
        pending.len() - 1
    };
    let top = push(&mut pending, &empty, &empty);
    let mut work = vec![(root, top)];
    while let Some((t, attach)) = work.pop() {
        let id = push(&mut pending, &bags[t], &refined[t]);
        pending[attach].children.push(id);
        let kids = &children[t];
        match kids.len() {
            0 => {
                let leaf = push(&mut pending, &empty, &empty);
                pending[id].children.push(leaf);
            }
            1 => work.push((kids[0], id)),
            d => {
                let mut current = id;
                for (j, &c) in kids.iter().enumerate() {
                    if j + 1 == d {
                        work.push((c, current));
                        break;
                    }
                    pending[current].join = true;
                    let slot = if bags[c] != bags[t] {
                        let sub = push(&mut pending, &bags[t], &refined[t]);
                        pending[current].children.push(sub);
                        sub
                    } else {
                        current
                    };
                    work.push((c, slot));
                    let next = push(&mut pending, &bags[t], &refined[t]);
                    pending[current].children.push(next);
                    current = next;
                }
            }
        }
    }

    Ok(expand(universe, pending))
}

type Contracted = (
    Vec<VertexSet>,
    Vec<VertexSet>,
    Vec<BTreeSet<usize>>,
    Vec<bool>,
);

/// Repeatedly merges adjacent nodes with comparable bags into the larger one
/// (the lower id on ties), keeping the survivor's refined set.
fn contract_comparable(td: &RefinedTreeDecomposition) -> Contracted {
    let nodes = td.node_count();
    let bags = td.bags().to_vec();
    let refined = td.refined_sets().to_vec();
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes];
    for &(a, b) in td.tree_edges() {
        adjacency[a].insert(b);
        adjacency[b].insert(a);
    }
    let mut alive = vec![true; nodes];
    let mut work: Vec<usize> = (0..nodes).rev().collect();
    while let Some(a) = work.pop() {
        if !alive[a] {
            continue;
        }
        let partner = adjacency[a]
            .iter()
            .copied()
            .find(|&b| bags[a].is_subset(&bags[b]) || bags[b].is_subset(&bags[a]));
        let Some(b) = partner else { continue };
        let a_larger = bags[b].is_subset(&bags[a]) && (bags[a] != bags[b] || a < b);
        let (keep, gone) = if a_larger { (a, b) } else { (b, a) };
        let moved: Vec<usize> = adjacency[gone]
            .iter()
            .copied()
            .filter(|&x| x != keep)
            .collect();
        adjacency[gone].clear();
        adjacency[keep].remove(&gone);
        for x in moved {
            adjacency[x].remove(&gone);
            adjacency[x].insert(keep);
            adjacency[keep].insert(x);
        }
        alive[gone] = false;
        work.push(keep);
    }
    (bags, refined, adjacency, alive)
}

/// Expands single-child edges into forget/introduce chains. `pending` is in
/// creation order, so every child id exceeds its parent's.
fn expand(universe: usize, pending: Vec<Pending>) -> NiceRefinedTreeDecomposition {
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut refined: Vec<VertexSet> = Vec::new();
    let mut kinds: Vec<NodeKind> = Vec::new();
    let mut children: Vec<Vec<usize>> = Vec::new();
    let mut emit = |bag: VertexSet, u: VertexSet, kind: NodeKind, kids: Vec<usize>| {
        bags.push(bag);
        refined.push(u);
        kinds.push(kind);
        children.push(kids);
        kinds.len() - 1
    };
    let mut emitted = vec![usize::MAX; pending.len()];
    for i in (0..pending.len()).rev() {
        let node = &pending[i];
        emitted[i] = match node.children.as_slice() {
            [] => emit(
                VertexSet::new(universe),
                VertexSet::new(universe),
                NodeKind::Leaf,
                vec![],
            ),
            &[a, b] if node.join => emit(
                node.bag.clone(),
                node.refined.clone(),
                NodeKind::Join,
                vec![emitted[a], emitted[b]],
            ),
            &[c] => {
                let child = &pending[c];
                let forgets = child.bag.difference(&node.bag).to_vec();
                let introduces = node.bag.difference(&child.bag).to_vec();
                let steps = forgets.len() + introduces.len();
                let mut below = emitted[c];
                let mut bag = child.bag.clone();
                for (step, &v) in forgets.iter().enumerate() {
                    bag.remove(v);
                    let u = if step + 1 == steps {
                        node.refined.clone()
                    } else {
                        child.refined.intersection(&bag)
                    };
                    below = emit(bag.clone(), u, NodeKind::Forget(v), vec![below]);
                }
                for &v in &introduces {
                    bag.insert(v);
                    below = emit(
                        bag.clone(),
                        node.refined.intersection(&bag),
                        NodeKind::Introduce(v),
                        vec![below],
                    );
                }
                below
            }
            other => unreachable!("intermediate node with children {other:?}"),
        };
    }
    let root = emitted[0];
    let mut parent = vec![None; kinds.len()];
    let mut edges = Vec::with_capacity(kinds.len().saturating_sub(1));
    for (t, kids) in children.iter().enumerate() {
        for &c in kids {
            parent[c] = Some(t);
            edges.push((c.min(t), c.max(t)));
        }
    }
    edges.sort_unstable();
    NiceRefinedTreeDecomposition {
        decomposition: RefinedTreeDecomposition::new(universe, bags, edges).with_refined(refined),
        root,
        parent,
        children,
        kinds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::refined::{residual_independence_number, trivial_decomposition};
    use crate::graph::{clique_tree, generators};

    fn count(nice: &NiceRefinedTreeDecomposition, pred: impl Fn(NodeKind) -> bool) -> usize {
        (0..nice.node_count())
            .filter(|&t| pred(nice.kind(t)))
            .count()
    }

    #[test]
    fn trivial_path_becomes_a_single_chain() {
        let p3 = generators::path(3).unwrap();
        let nice = make_nice(&p3, &trivial_decomposition(&p3)).unwrap();
        nice.check_nice().unwrap();
        assert!(validate(&p3, nice.decomposition()).is_ok());
        assert_eq!(count(&nice, |k| matches!(k, NodeKind::Introduce(_))), 3);
        assert_eq!(count(&nice, |k| matches!(k, NodeKind::Forget(_))), 3);
        assert_eq!(count(&nice, |k| k == NodeKind::Join), 0);
        assert_eq!(count(&nice, |k| k == NodeKind::Leaf), 1);
        assert_eq!(nice.node_count(), 7);
    }

    #[test]
    fn star_clique_tree_needs_a_join() {
        // four bags {0, i}: the clique tree is a star, rooted at a leaf
        let star = generators::complete_bipartite(1, 4);
        let ct = clique_tree(&star).unwrap();
        assert_eq!(ct.node_count(), 4);
        let nice = make_nice(&star, &ct).unwrap();
        nice.check_nice().unwrap();
        assert!(validate(&star, nice.decomposition()).is_ok());
        assert!(count(&nice, |k| k == NodeKind::Join) >= 1);
    }

    #[test]
    fn nice_input_stays_nice_with_same_residual() {
        let g = generators::sharpness(3).unwrap();
        let first = make_nice(&g, &trivial_decomposition(&g)).unwrap();
        let again = make_nice(&g, first.decomposition()).unwrap();
        again.check_nice().unwrap();
        assert_eq!(
            residual_independence_number(&g, again.decomposition()).unwrap(),
            residual_independence_number(&g, first.decomposition()).unwrap()
        );
    }

    #[test]
    fn null_graph_collapses_to_one_leaf() {
        let g = Graph::edgeless(0);
        let nice = make_nice(&g, &trivial_decomposition(&g)).unwrap();
        nice.check_nice().unwrap();
        assert_eq!(nice.node_count(), 1);
        assert_eq!(nice.kind(nice.root()), NodeKind::Leaf);
    }

    #[test]
    fn high_degree_node_is_binarized() {
        // a centre bag {0,1} with five pendant bags {1, i}
        let edges: Vec<_> = (2..7).map(|i| (1, i)).chain([(0, 1)]).collect();
        let g = Graph::new(7, &edges).unwrap();
        let mut bags = vec![vec![0, 1]];
        let mut tree = Vec::new();
        for i in 2..7 {
            bags.push(vec![1, i]);
            tree.push((0, bags.len() - 1));
        }
        let td = RefinedTreeDecomposition::from_lists(7, &bags, tree).unwrap();
        let nice = make_nice(&g, &td).unwrap();
        nice.check_nice().unwrap();
        assert!(validate(&g, nice.decomposition()).is_ok());
        assert!(nice.node_count() <= NICE_NODE_FACTOR * 3 * td.node_count());
    }

    #[test]
    fn refined_sets_follow_their_bags() {
        let c4 = generators::cycle(4).unwrap();
        let td = trivial_decomposition(&c4)
            .with_refined(vec![VertexSet::from_vertices(4, [0, 1]).unwrap()]);
        let nice = make_nice(&c4, &td).unwrap();
        for t in 0..nice.node_count() {
            assert_eq!(nice.refined(t), &td.refined(0).intersection(nice.bag(t)));
        }
        assert_eq!(
            residual_independence_number(&c4, nice.decomposition()).unwrap(),
            1
        );
    }

    #[test]
    fn invalid_input_rejected() {
        let k2 = generators::complete(2);
        let td =
            RefinedTreeDecomposition::from_lists(2, &[vec![0], vec![1]], vec![(0, 1)]).unwrap();
        assert!(make_nice(&k2, &td).is_err());
    }
}
