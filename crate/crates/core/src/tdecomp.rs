//! Tree decompositions: the data type, the three validity axioms, width and
//! independence number, and the combinators decomposers assemble results with.
//!
//! Bags always index vertices of the full input graph. Decompositions of an
//! induced subgraph are mapped back with [`TreeDecomposition::relabel`] before
//! they are combined.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Budget, Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::vertex_set::VertexSet;

/// A tree `T` on nodes `0..bags.len()` and a bag for every node.
///
/// Empty bags are permitted; they never affect validity.
#[derive(Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    universe: usize,
    bags: Vec<VertexSet>,
    tree_edges: Vec<(usize, usize)>,
}

/// The first axiom a candidate decomposition breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    UniverseMismatch {
        decomposition: usize,
        graph: usize,
    },
    NoNodes,
    NotATree(String),
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    /// The nodes containing `vertex` do not induce a subtree; `split` are two
    /// such nodes in different pieces.
    DisconnectedTrace {
        vertex: usize,
        split: (usize, usize),
    },
}

impl Violation {
    /// Short name of the violated axiom.
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::UniverseMismatch { .. } => "universe",
            Violation::NoNodes | Violation::NotATree(_) => "tree",
            Violation::VertexUncovered(_) => "vertex-coverage",
            Violation::EdgeUncovered(..) => "edge-coverage",
            Violation::DisconnectedTrace { .. } => "connected-trace",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.axiom())?;
        match self {
            Violation::UniverseMismatch { decomposition, graph } => {
                write!(f, "decomposition is over {decomposition} vertices, graph has {graph}")
            }
            Violation::NoNodes => write!(f, "the tree has no nodes"),
            Violation::NotATree(why) => write!(f, "{why}"),
            Violation::VertexUncovered(v) => write!(f, "vertex {v} lies in no bag"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge {u}-{v} lies in no bag"),
            Violation::DisconnectedTrace { vertex, split: (a, b) } => {
                write!(
                    f,
                    "nodes containing vertex {vertex} are disconnected (nodes {a} and {b})"
                )
            }
        }
    }
}

impl TreeDecomposition {
    /// Builds a decomposition over vertices `0..universe`. Only references are
    /// checked here; the axioms are checked by [`TreeDecomposition::validate`].
    pub fn new(universe: usize, bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Result<Self> {
        let k = bags.len();
        let mut sets = Vec::with_capacity(k);
        for (t, bag) in bags.into_iter().enumerate() {
            if let Some(&v) = bag.iter().find(|&&v| v >= universe) {
                return Err(Error::param(format!("bag {t} names vertex {v}, graph has {universe}")));
            }
            sets.push(VertexSet::from_iter_in(universe, bag));
        }
        if let Some(&(a, b)) = tree_edges.iter().find(|&&(a, b)| a >= k || b >= k) {
            return Err(Error::param(format!("tree edge {a}-{b} names a node outside 0..{k}")));
        }
        Ok(TreeDecomposition {
            universe,
            bags: sets,
            tree_edges,
        })
    }

    pub fn from_sets(universe: usize, bags: Vec<VertexSet>, tree_edges: Vec<(usize, usize)>) -> Result<Self> {
        if bags.iter().any(|b| b.universe() != universe) {
            return Err(Error::param("bag universe differs from the decomposition universe"));
        }
        let k = bags.len();
        if let Some(&(a, b)) = tree_edges.iter().find(|&&(a, b)| a >= k || b >= k) {
            return Err(Error::param(format!("tree edge {a}-{b} names a node outside 0..{k}")));
        }
        Ok(TreeDecomposition {
            universe,
            bags,
            tree_edges,
        })
    }

    /// One node whose bag is all of `V(G)`.
    pub fn single_bag(g: &Graph) -> Self {
        TreeDecomposition {
            universe: g.n(),
            bags: vec![g.vertex_set()],
            tree_edges: Vec::new(),
        }
    }

    /// A path decomposition whose node `i` holds `bags[i]`.
    pub fn path_of(universe: usize, bags: Vec<VertexSet>) -> Result<Self> {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition::from_sets(universe, bags, edges)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Union of all bags.
    pub fn covered(&self) -> VertexSet {
        let mut s = VertexSet::new(self.universe);
        for b in &self.bags {
            s.union_with(b);
        }
        s
    }

    fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks the tree shape and the three axioms, reporting the first failure.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        if self.universe != g.n() {
            return Err(Violation::UniverseMismatch {
                decomposition: self.universe,
                graph: g.n(),
            });
        }
        let k = self.bags.len();
        if k == 0 {
            return Err(Violation::NoNodes);
        }
        if self.tree_edges.len() != k - 1 {
            return Err(Violation::NotATree(format!(
                "{k} nodes but {} tree edges",
                self.tree_edges.len()
            )));
        }
        if let Some(&(a, _)) = self.tree_edges.iter().find(|&&(a, b)| a == b) {
            return Err(Violation::NotATree(format!("loop at node {a}")));
        }
        let adj = self.tree_adjacency();
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for &u in &adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if let Some(t) = seen.iter().position(|&s| !s) {
            return Err(Violation::NotATree(format!("node {t} is not connected to node 0")));
        }

        let covered = self.covered();
        if let Some(v) = covered.complement().first() {
            return Err(Violation::VertexUncovered(v));
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(Violation::EdgeUncovered(u, v));
            }
        }
        // A vertex's trace is a subtree iff it is connected in T.
        for v in 0..self.universe {
            let holders: Vec<usize> = (0..k).filter(|&t| self.bags[t].contains(v)).collect();
            let start = holders[0];
            let mut reached = vec![false; k];
            reached[start] = true;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for &u in &adj[t] {
                    if !reached[u] && self.bags[u].contains(v) {
                        reached[u] = true;
                        stack.push(u);
                    }
                }
            }
            if let Some(&other) = holders.iter().find(|&&t| !reached[t]) {
                return Err(Violation::DisconnectedTrace {
                    vertex: v,
                    split: (start, other),
                });
            }
        }
        Ok(())
    }

    /// `max |bag| - 1`; `-1` when every bag is empty (the null graph).
    pub fn width(&self) -> isize {
        self.bags.iter().map(|b| b.len() as isize).max().unwrap_or(0) - 1
    }

    /// `α(T) = max over bags of α(G[bag])`, exactly. Rejects invalid input.
    pub fn independence_number(&self, g: &Graph, budget: Budget) -> Result<usize> {
        self.validate(g).map_err(Error::InvalidDecomposition)?;
        self.bags
            .par_iter()
            .map(|b| oracle::alpha_within(g, b, budget))
            .try_reduce(|| 0, |a, b| Ok(a.max(b)))
    }

    /// Index of a node whose bag attains the independence number.
    pub fn widest_alpha_bag(&self, g: &Graph, budget: Budget) -> Result<(usize, usize)> {
        let mut best = (0, 0);
        for (t, b) in self.bags.iter().enumerate() {
            let a = oracle::alpha_within(g, b, budget)?;
            if a > best.1 || t == 0 {
                best = (t, a.max(best.1));
            }
        }
        Ok(best)
    }

    /// `β(t) := β(t) ∪ S` for every node.
    pub fn add_to_all_bags(&self, s: &VertexSet) -> TreeDecomposition {
        let mut out = self.clone();
        for b in &mut out.bags {
            b.union_with(s);
        }
        out
    }

    /// Maps bag vertex `i` to `map[i]` in a universe of size `universe`; used
    /// to lift a decomposition of an induced subgraph back to its host.
    pub fn relabel(&self, map: &[usize], universe: usize) -> TreeDecomposition {
        let bags = self
            .bags
            .iter()
            .map(|b| VertexSet::from_iter_in(universe, b.iter().map(|v| map[v])))
            .collect();
        TreeDecomposition {
            universe,
            bags,
            tree_edges: self.tree_edges.clone(),
        }
    }

    /// A new node with bag `hub`, joined to node 0 of every part.
    ///
    /// The parts must cover pairwise disjoint vertex sets outside `hub`.
    pub fn merge_at_hub(universe: usize, parts: Vec<TreeDecomposition>, hub: &VertexSet) -> Result<Self> {
        if hub.universe() != universe {
            return Err(Error::param("hub universe differs from the target universe"));
        }
        let mut bags = vec![hub.clone()];
        let mut edges = Vec::new();
        let mut seen = VertexSet::new(universe);
        for (i, part) in parts.into_iter().enumerate() {
            if part.universe != universe {
                return Err(Error::param(format!("part {i} has universe {}", part.universe)));
            }
            let own = part.covered().difference(hub);
            if let Some(v) = own.intersection(&seen).first() {
                return Err(Error::param(format!("parts overlap at vertex {v} (part {i})")));
            }
            seen.union_with(&own);
            let offset = bags.len();
            edges.push((0, offset));
            edges.extend(part.tree_edges.iter().map(|&(a, b)| (a + offset, b + offset)));
            bags.extend(part.bags);
        }
        Ok(TreeDecomposition {
            universe,
            bags,
            tree_edges: edges,
        })
    }

    /// Hangs `child` (with `absorb` added to all its bags) below `node`.
    ///
    /// Requires that every edge leaving the child's own vertices ends in
    /// `absorb`, that those vertices do not occur in `self`, and that every
    /// vertex of `absorb` already in `self` lies in `bag(node)`.
    pub fn attach_subtree(
        &self,
        g: &Graph,
        node: usize,
        child: &TreeDecomposition,
        absorb: &VertexSet,
    ) -> Result<Self> {
        if node >= self.bags.len() {
            return Err(Error::param(format!("node {node} does not exist")));
        }
        let own = child.covered().difference(absorb);
        let parent_cover = self.covered();
        if let Some(v) = own.intersection(&parent_cover).first() {
            return Err(Error::pre(format!(
                "child vertex {v} already occurs in the parent decomposition"
            )));
        }
        for x in own.iter() {
            if let Some(y) = g.neighbors(x).difference(&own).difference(absorb).first() {
                return Err(Error::pre(format!(
                    "attachment condition fails on edge {x}-{y}: {y} is outside bag {node} and the absorbed set"
                )));
            }
        }
        if let Some(v) = absorb.intersection(&parent_cover).difference(&self.bags[node]).first() {
            return Err(Error::pre(format!(
                "absorbed vertex {v} occurs in the parent but not in bag {node}"
            )));
        }
        let mut out = self.clone();
        let offset = out.bags.len();
        out.tree_edges.push((node, offset));
        out.tree_edges
            .extend(child.tree_edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        out.bags.extend(child.bags.iter().map(|b| b.union(absorb)));
        Ok(out)
    }

    /// Contracts tree edges whose one bag contains the other, until none is left.
    pub fn compress(&self) -> TreeDecomposition {
        let mut bags: Vec<Option<VertexSet>> = self.bags.iter().cloned().map(Some).collect();
        let mut edges = self.tree_edges.clone();
        loop {
            let hit = edges.iter().position(|&(a, b)| {
                let (ba, bb) = (bags[a].as_ref().unwrap(), bags[b].as_ref().unwrap());
                ba.is_subset(bb) || bb.is_subset(ba)
            });
            let Some(i) = hit else { break };
            let (a, b) = edges.swap_remove(i);
            // Keep the larger bag at `keep`, drop `gone`.
            let (keep, gone) = if bags[a].as_ref().unwrap().is_subset(bags[b].as_ref().unwrap()) {
                (b, a)
            } else {
                (a, b)
            };
            bags[gone] = None;
            for e in &mut edges {
                if e.0 == gone {
                    e.0 = keep;
                }
                if e.1 == gone {
                    e.1 = keep;
                }
            }
        }
        let mut index = vec![usize::MAX; bags.len()];
        let mut kept = Vec::new();
        for (t, b) in bags.into_iter().enumerate() {
            if let Some(b) = b {
                index[t] = kept.len();
                kept.push(b);
            }
        }
        let edges = edges.into_iter().map(|(a, b)| (index[a], index[b])).collect();
        TreeDecomposition {
            universe: self.universe,
            bags: kept,
            tree_edges: edges,
        }
    }

    /// Node order along the path if the tree is a path, else `None`.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        let k = self.bags.len();
        if k == 0 || self.tree_edges.len() + 1 != k {
            return None;
        }
        let adj = self.tree_adjacency();
        if adj.iter().any(|a| a.len() > 2) {
            return None;
        }
        let start = (0..k).find(|&t| adj[t].len() <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = adj[cur].iter().find(|&&u| u != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == k).then_some(order)
    }
}

impl fmt::Debug for TreeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TreeDecomposition")
            .field("universe", &self.universe)
            .field("bags", &self.bags)
            .field("tree_edges", &self.tree_edges)
            .finish()
    }
}

/// A tree decomposition whose tree is a path, with its node order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    td: TreeDecomposition,
    order: Vec<usize>,
}

impl PathDecomposition {
    pub fn new(td: TreeDecomposition) -> Result<Self> {
        let order = td
            .path_order()
            .ok_or_else(|| Error::param("the decomposition tree is not a path"))?;
        Ok(PathDecomposition { td, order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn as_tree(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn into_tree(self) -> TreeDecomposition {
        self.td
    }
}

/// Eliminates `order` from `g` and returns the tree decomposition of the
/// resulting chordal completion: one bag `{v} ∪ later neighbours` per vertex,
/// parent = earliest eliminated member of the rest, compressed.
pub fn from_elimination_ordering(g: &Graph, order: &[usize]) -> Result<TreeDecomposition> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        g.check_vertex(v)?;
        if pos[v] != usize::MAX {
            return Err(Error::param(format!("vertex {v} repeats in the ordering")));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(Error::param(format!(
            "ordering has {} vertices, graph has {n}",
            order.len()
        )));
    }
    if n == 0 {
        return TreeDecomposition::new(0, vec![vec![]], vec![]);
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut remaining = g.vertex_set();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    for &v in order {
        remaining.remove(v);
        let later = adj[v].intersection(&remaining);
        for u in later.iter() {
            adj[u].union_with(&later);
            adj[u].remove(u);
        }
        if let Some(p) = later.iter().min_by_key(|&u| pos[u]) {
            parent[pos[v]] = pos[p];
        }
        let mut bag = later;
        bag.insert(v);
        bags.push(bag);
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut roots = Vec::new();
    for (i, &p) in parent.iter().enumerate() {
        if p == usize::MAX {
            roots.push(i);
        } else {
            edges.push((i, p));
        }
    }
    // Roots hold disjoint vertex sets (one per component); chain them.
    edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
    Ok(TreeDecomposition::from_sets(n, bags, edges)?.compress())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn validate_examples() {
        let g = p3();
        assert_eq!(TreeDecomposition::single_bag(&g).validate(&g), Ok(()));
        let ok = TreeDecomposition::new(3, vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]).unwrap();
        assert_eq!(ok.validate(&g), Ok(()));
        let bad = TreeDecomposition::new(3, vec![vec![0, 1], vec![2]], vec![(0, 1)]).unwrap();
        assert_eq!(bad.validate(&g), Err(Violation::EdgeUncovered(1, 2)));
        assert_eq!(bad.validate(&g).unwrap_err().axiom(), "edge-coverage");
    }

    #[test]
    fn validate_detects_trace_and_tree_failures() {
        let g = p3();
        let split = TreeDecomposition::new(3, vec![vec![0, 1], vec![2], vec![1, 2]], vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            split.validate(&g),
            Err(Violation::DisconnectedTrace { vertex: 1, .. })
        ));
        let forest = TreeDecomposition::new(3, vec![vec![0, 1], vec![1, 2]], vec![]).unwrap();
        assert!(matches!(forest.validate(&g), Err(Violation::NotATree(_))));
        let missing = TreeDecomposition::new(3, vec![vec![0, 1]], vec![]).unwrap();
        assert_eq!(missing.validate(&g), Err(Violation::VertexUncovered(2)));
        assert!(TreeDecomposition::new(3, vec![vec![3]], vec![]).is_err());
    }

    #[test]
    fn independence_number_examples() {
        let b = Budget::default();
        let k33 = Graph::complete_bipartite(3, 3);
        assert_eq!(
            TreeDecomposition::single_bag(&k33)
                .independence_number(&k33, b)
                .unwrap(),
            3
        );
        let tree = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let edge_bags = TreeDecomposition::new(
            5,
            tree.edges().map(|(u, v)| vec![u, v]).collect(),
            vec![(0, 1), (1, 2), (2, 3)],
        )
        .unwrap();
        assert_eq!(edge_bags.independence_number(&tree, b).unwrap(), 1);
        assert_eq!(edge_bags.width(), 1);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            TreeDecomposition::single_bag(&c4).independence_number(&c4, b).unwrap(),
            2
        );
    }

    #[test]
    fn width_examples() {
        assert_eq!(TreeDecomposition::single_bag(&Graph::complete(5)).width(), 4);
        let null = TreeDecomposition::new(0, vec![vec![]], vec![]).unwrap();
        assert_eq!(null.width(), -1);
        assert_eq!(null.validate(&Graph::empty(0)), Ok(()));
    }

    #[test]
    fn add_to_all_bags_on_k22() {
        // K_{2,2}: sides {0,1} and {2,3}; decompose G - {2,3} by one bag {0,1}.
        let g = Graph::complete_bipartite(2, 2);
        let side = TreeDecomposition::new(4, vec![vec![0, 1]], vec![]).unwrap();
        let other = g.set_of([2, 3]);
        let full = side.add_to_all_bags(&other);
        assert_eq!(full.validate(&g), Ok(()));
        assert_eq!(full.independence_number(&g, Budget::default()).unwrap(), 2);
        assert_eq!(side.add_to_all_bags(&g.empty_set()), side);
    }

    #[test]
    fn merge_components_at_empty_hub() {
        let g = Graph::complete(2).disjoint_union(&Graph::path(3));
        let parts = g
            .components()
            .into_iter()
            .map(|c| TreeDecomposition::from_sets(g.n(), vec![c], vec![]).unwrap())
            .collect();
        let td = TreeDecomposition::merge_at_hub(g.n(), parts, &g.empty_set()).unwrap();
        assert_eq!(td.node_count(), 3);
        assert_eq!(td.validate(&g), Ok(()));
        let overlap = vec![
            TreeDecomposition::new(5, vec![vec![0, 1]], vec![]).unwrap(),
            TreeDecomposition::new(5, vec![vec![1, 2]], vec![]).unwrap(),
        ];
        assert!(TreeDecomposition::merge_at_hub(5, overlap, &g.empty_set()).is_err());
    }

    #[test]
    fn attach_subtree_checks_condition() {
        // Path 0-1-2-3: parent covers {0,1}, child covers {2,3}; 2 touches 1.
        let g = Graph::path(4);
        let parent = TreeDecomposition::new(4, vec![vec![0, 1]], vec![]).unwrap();
        let child = TreeDecomposition::new(4, vec![vec![2, 3]], vec![]).unwrap();
        let td = parent.attach_subtree(&g, 0, &child, &g.set_of([1])).unwrap();
        assert_eq!(td.validate(&g), Ok(()));
        let err = parent.attach_subtree(&g, 0, &child, &g.empty_set()).unwrap_err();
        assert!(err.to_string().contains("2-1"), "{err}");
    }

    #[test]
    fn elimination_ordering_decomposition() {
        let c6 = Graph::cycle(6).unwrap();
        let td = from_elimination_ordering(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(td.validate(&c6), Ok(()));
        assert_eq!(td.width(), 2);
        let two = Graph::path(2).disjoint_union(&Graph::path(3));
        let td = from_elimination_ordering(&two, &[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(td.validate(&two), Ok(()));
        assert_eq!(td.width(), 1);
    }

    #[test]
    fn path_order_detection() {
        let td = TreeDecomposition::new(3, vec![vec![0], vec![1], vec![2]], vec![(2, 0), (0, 1)]).unwrap();
        assert_eq!(td.path_order(), Some(vec![1, 0, 2]));
        let star = TreeDecomposition::new(1, vec![vec![0]; 4], vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(PathDecomposition::new(star).is_err());
    }
}
