//! `P4`-free graphs: cotrees, the exact tree-independence number
//! `max{ibn, 1}`, and a decomposition attaining it.
//!
//! The cotree is built by splitting on components (UNION) and on
//! co-components (JOIN). A vertex set that is connected and co-connected
//! with at least two vertices contains an induced `P4`, which is returned
//! as the certificate. Nodes live in an arena with parents before
//! children, so every bottom-up pass is a reverse scan and no recursion
//! depth depends on the input.

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Budget, Error, Result};
use crate::graph::Graph;
use crate::patterns::{self, Certificate, PatternKind};
use crate::tdecomp::TreeDecomposition;
use crate::vertex_set::VertexSet;
use crate::Outcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CotreeOp {
    Leaf,
    Union,
    Join,
}

impl CotreeOp {
    fn name(self) -> &'static str {
        match self {
            CotreeOp::Leaf => "leaf",
            CotreeOp::Union => "union",
            CotreeOp::Join => "join",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotreeNode {
    pub op: CotreeOp,
    /// Set for leaves only.
    pub vertex: Option<usize>,
    pub children: Vec<usize>,
    pub alpha: usize,
    pub ibn: usize,
    pub size: usize,
}

/// A rooted cotree; node 0 is the root and children have larger indices
/// than their parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree {
    universe: usize,
    nodes: Vec<CotreeNode>,
}

impl Cotree {
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> &CotreeNode {
        &self.nodes[0]
    }

    /// `α` of the represented graph.
    pub fn alpha(&self) -> usize {
        self.root().alpha
    }

    /// Largest `n` with an induced `K_{n,n}`.
    pub fn ibn(&self) -> usize {
        self.root().ibn
    }

    /// Vertices below node `i`.
    pub fn leaves(&self, i: usize) -> VertexSet {
        let mut out = VertexSet::new(self.universe);
        let mut stack = vec![i];
        while let Some(t) = stack.pop() {
            let node = &self.nodes[t];
            if let Some(v) = node.vertex {
                out.insert(v);
            }
            stack.extend_from_slice(&node.children);
        }
        out
    }

    /// No internal node has a child with the same label.
    pub fn is_canonical(&self) -> bool {
        self.nodes.iter().all(|node| {
            node.op == CotreeOp::Leaf
                || (node.children.len() >= 2 && node.children.iter().all(|&c| self.nodes[c].op != node.op))
        })
    }

    /// Evaluates the cotree: UNION is disjoint union, JOIN adds all edges
    /// between different children.
    pub fn to_graph(&self) -> Graph {
        let mut adj = vec![VertexSet::new(self.universe); self.universe];
        for (i, node) in self.nodes.iter().enumerate() {
            if node.op != CotreeOp::Join {
                continue;
            }
            let all = self.leaves(i);
            for &c in &node.children {
                let part = self.leaves(c);
                let others = all.difference(&part);
                for v in part.iter() {
                    adj[v].union_with(&others);
                }
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    /// Nested JSON: `{"op": "join", "alpha": .., "ibn": .., "children": [..]}`,
    /// leaves as `{"op": "leaf", "vertex": v}` (0-based).
    pub fn to_json(&self) -> Value {
        self.node_json(0)
    }

    fn node_json(&self, i: usize) -> Value {
        let node = &self.nodes[i];
        match node.op {
            CotreeOp::Leaf => json!({"op": "leaf", "vertex": node.vertex}),
            op => json!({
                "op": op.name(),
                "alpha": node.alpha,
                "ibn": node.ibn,
                "children": node.children.iter().map(|&c| self.node_json(c)).collect::<Vec<_>>(),
            }),
        }
    }

    /// Reads [`Cotree::to_json`] output over `universe` vertices; cached
    /// values are recomputed, and every vertex must occur exactly once.
    pub fn from_json(value: &Value, universe: usize) -> Result<Cotree> {
        let mut nodes = Vec::new();
        let mut stack = vec![(value, None::<usize>)];
        let mut seen = VertexSet::new(universe);
        while let Some((v, parent)) = stack.pop() {
            let op = match v.get("op").and_then(Value::as_str) {
                Some("leaf") => CotreeOp::Leaf,
                Some("union") => CotreeOp::Union,
                Some("join") => CotreeOp::Join,
                other => return Err(Error::param(format!("unknown cotree op {other:?}"))),
            };
            let idx = nodes.len();
            let vertex = if op == CotreeOp::Leaf {
                let x = v
                    .get("vertex")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::param("leaf without a vertex"))? as usize;
                if x >= universe {
                    return Err(Error::VertexOutOfRange { vertex: x, n: universe });
                }
                if !seen.insert(x) {
                    return Err(Error::param(format!("vertex {x} occurs twice in the cotree")));
                }
                Some(x)
            } else {
                None
            };
            nodes.push(CotreeNode {
                op,
                vertex,
                children: Vec::new(),
                alpha: 0,
                ibn: 0,
                size: 0,
            });
            if let Some(p) = parent {
                nodes[p].children.push(idx);
            }
            if op != CotreeOp::Leaf {
                let children = v
                    .get("children")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::param("internal cotree node without children"))?;
                if children.len() < 2 {
                    return Err(Error::param("internal cotree nodes need at least two children"));
                }
                stack.extend(children.iter().rev().map(|c| (c, Some(idx))));
            }
        }
        if seen.len() != universe {
            return Err(Error::param(format!(
                "cotree covers {} of {universe} vertices",
                seen.len()
            )));
        }
        let mut tree = Cotree { universe, nodes };
        tree.evaluate();
        Ok(tree)
    }

    /// Fills `alpha`, `ibn` and `size` bottom-up:
    /// UNION sums `α` and maxes `ibn`; JOIN maxes `α`, and its `ibn` also
    /// considers the second largest child `α` (one independent side per child).
    fn evaluate(&mut self) {
        for i in (0..self.nodes.len()).rev() {
            let (alpha, ibn, size) = match self.nodes[i].op {
                CotreeOp::Leaf => (1, 0, 1),
                op => {
                    let kids: Vec<&CotreeNode> = self.nodes[i].children.iter().map(|&c| &self.nodes[c]).collect();
                    let size = kids.iter().map(|k| k.size).sum();
                    let inner = kids.iter().map(|k| k.ibn).max().unwrap_or(0);
                    if op == CotreeOp::Union {
                        (kids.iter().map(|k| k.alpha).sum(), inner, size)
                    } else {
                        let mut alphas: Vec<usize> = kids.iter().map(|k| k.alpha).collect();
                        alphas.sort_unstable_by(|a, b| b.cmp(a));
                        (alphas[0], inner.max(alphas[1]), size)
                    }
                }
            };
            let node = &mut self.nodes[i];
            node.alpha = alpha;
            node.ibn = ibn;
            node.size = size;
        }
    }
}

/// Co-components of `G[s]`: components of the complement restricted to `s`.
fn co_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let mut unvisited = s.clone();
    let mut out = Vec::new();
    while let Some(start) = unvisited.first() {
        unvisited.remove(start);
        let mut part = g.set_of([start]);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            let next = unvisited.difference(g.neighbors(u));
            unvisited.difference_with(&next);
            part.union_with(&next);
            queue.extend(next.iter());
        }
        out.push(part);
    }
    out
}

/// The canonical cotree of `g`, or an induced `P4`. The null graph has no cotree.
pub fn build_cotree(g: &Graph, budget: Budget) -> Result<Outcome<Cotree>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::pre("the null graph has no cotree"));
    }
    let blank = CotreeNode {
        op: CotreeOp::Leaf,
        vertex: None,
        children: Vec::new(),
        alpha: 0,
        ibn: 0,
        size: 0,
    };
    let mut nodes = vec![blank.clone()];
    let mut stack = vec![(g.vertex_set(), 0)];
    while let Some((s, idx)) = stack.pop() {
        if s.len() == 1 {
            nodes[idx].vertex = s.first();
            continue;
        }
        let comps = g.components_within(&s);
        let (op, parts) = if comps.len() > 1 {
            (CotreeOp::Union, comps)
        } else {
            let co = co_components(g, &s);
            if co.len() == 1 {
                return Ok(Outcome::Certificate(p4_within(g, &s, budget)?));
            }
            (CotreeOp::Join, co)
        };
        nodes[idx].op = op;
        for part in parts {
            let c = nodes.len();
            nodes.push(blank.clone());
            nodes[idx].children.push(c);
            stack.push((part, c));
        }
    }
    let mut tree = Cotree { universe: n, nodes };
    tree.evaluate();
    Ok(Outcome::Done(tree))
}

fn p4_within(g: &Graph, s: &VertexSet, budget: Budget) -> Result<Certificate> {
    let (sub, map) = g.induced_subgraph(s);
    let emb = patterns::find_induced_embedding(&sub, &Graph::path(4), budget)?
        .ok_or_else(|| Error::internal("connected, co-connected vertex set without an induced P4"))?;
    Certificate::new(g, PatternKind::Path { s: 4 }, emb.into_iter().map(|v| map[v]).collect())
}

/// `max{ibn(G), 1}` for a `P4`-free graph (0 for the null graph).
pub fn tin_cograph(g: &Graph, budget: Budget) -> Result<Outcome<usize>> {
    if g.n() == 0 {
        return Ok(Outcome::Done(0));
    }
    Ok(build_cotree(g, budget)?.map(|t| t.ibn().max(1)))
}

/// A decomposition with independence number exactly `max{ibn(G), 1}`.
pub fn decompose_cograph(g: &Graph, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    if g.n() == 0 {
        return Ok(Outcome::Done(TreeDecomposition::single_bag(g)));
    }
    Ok(build_cotree(g, budget)?.map(|t| decompose_cotree(&t)))
}

/// Top-down: UNION hangs each child below a hub bag, JOIN descends into the
/// child of largest `α` (ties: more vertices, then earlier child) and adds
/// the other children to every bag below.
pub fn decompose_cotree(tree: &Cotree) -> TreeDecomposition {
    let n = tree.universe;
    let mut bags = Vec::new();
    let mut edges = Vec::new();
    let mut stack = vec![(0usize, VertexSet::new(n), None::<usize>)];
    while let Some((i, extra, parent)) = stack.pop() {
        let node = &tree.nodes[i];
        let mut attach = |bag: VertexSet| {
            let t = bags.len();
            bags.push(bag);
            if let Some(p) = parent {
                edges.push((p, t));
            }
            t
        };
        match node.op {
            CotreeOp::Leaf => {
                let mut bag = extra;
                bag.insert(node.vertex.expect("leaves carry a vertex"));
                attach(bag);
            }
            CotreeOp::Union => {
                let hub = attach(extra.clone());
                for &c in node.children.iter().rev() {
                    stack.push((c, extra.clone(), Some(hub)));
                }
            }
            CotreeOp::Join => {
                let (pos, &keep) = node
                    .children
                    .iter()
                    .enumerate()
                    .max_by_key(|&(pos, &c)| (tree.nodes[c].alpha, tree.nodes[c].size, std::cmp::Reverse(pos)))
                    .expect("join nodes have children");
                let mut next = extra;
                for (other, &c) in node.children.iter().enumerate() {
                    if other != pos {
                        next.union_with(&tree.leaves(c));
                    }
                }
                stack.push((keep, next, parent));
            }
        }
    }
    TreeDecomposition::from_sets(n, bags, edges).expect("cotree decompositions are trees")
}

/// A random cograph on `n` vertices: random splits into 2 or 3 parts with
/// alternating UNION/JOIN (random at the root) over shuffled labels.
pub fn random_cograph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut adj = vec![VertexSet::new(n); n];
    let mut stack = vec![(labels, rng.gen_bool(0.5))];
    while let Some((vs, join)) = stack.pop() {
        let k = vs.len();
        if k < 2 {
            continue;
        }
        let t = rng.gen_range(2..=k.min(3));
        let mut cuts: Vec<usize> = rand::seq::index::sample(rng, k - 1, t - 1)
            .into_iter()
            .map(|c| c + 1)
            .collect();
        cuts.sort_unstable();
        cuts.insert(0, 0);
        cuts.push(k);
        let parts: Vec<Vec<usize>> = cuts.windows(2).map(|w| vs[w[0]..w[1]].to_vec()).collect();
        if join {
            let all = VertexSet::from_iter_in(n, vs.iter().copied());
            for part in &parts {
                let own = VertexSet::from_iter_in(n, part.iter().copied());
                let others = all.difference(&own);
                for &v in part {
                    adj[v].union_with(&others);
                }
            }
        }
        stack.extend(parts.into_iter().map(|p| (p, !join)));
    }
    Graph::from_adjacency_unchecked(adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn b() -> Budget {
        Budget::default()
    }

    fn tree_of(g: &Graph) -> Cotree {
        build_cotree(g, b()).unwrap().done().expect("cograph")
    }

    #[test]
    fn single_vertex() {
        let t = tree_of(&Graph::empty(1));
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(t.root().op, CotreeOp::Leaf);
        assert_eq!((t.alpha(), t.ibn()), (1, 0));
        assert!(build_cotree(&Graph::empty(0), b()).is_err());
        assert_eq!(tin_cograph(&Graph::empty(0), b()).unwrap().done(), Some(0));
    }

    #[test]
    fn four_cycle() {
        let c4 = Graph::cycle(4).unwrap();
        let t = tree_of(&c4);
        assert_eq!(t.root().op, CotreeOp::Join);
        assert_eq!(t.root().children.len(), 2);
        for &c in &t.root().children {
            let child = &t.nodes()[c];
            assert_eq!(child.op, CotreeOp::Union);
            assert!(child.children.iter().all(|&l| t.nodes()[l].op == CotreeOp::Leaf));
        }
        assert_eq!((t.alpha(), t.ibn()), (2, 2));
        assert_eq!(tin_cograph(&c4, b()).unwrap().done(), Some(2));
        assert!(t.is_canonical());
    }

    #[test]
    fn p4_certificate() {
        let c = build_cotree(&Graph::path(4), b()).unwrap().certificate().unwrap();
        assert_eq!(c.kind, PatternKind::Path { s: 4 });
        assert_eq!(c.embedding, vec![0, 1, 2, 3]);
        let c5 = Graph::cycle(5).unwrap();
        let c = tin_cograph(&c5, b()).unwrap().certificate().unwrap();
        assert!(c.revalidate(&c5).unwrap());
    }

    #[test]
    fn recurrence_examples() {
        let k32 = Graph::empty(3).join(&Graph::empty(2));
        let t = tree_of(&k32);
        assert_eq!(t.ibn(), 2);
        assert_eq!(oracle::ibn_exact(&k32, b()).unwrap(), 2);
        for n in 1..6 {
            assert_eq!(tin_cograph(&Graph::complete(n), b()).unwrap().done(), Some(1));
        }
        let g = Graph::complete_bipartite(3, 3).join(&Graph::empty(1));
        assert_eq!(tin_cograph(&g, b()).unwrap().done(), Some(3));
        assert_eq!(oracle::tin_exact(&g, b()).unwrap(), 3);
    }

    #[test]
    fn decomposition_examples() {
        let k5 = Graph::complete(5);
        let td = decompose_cograph(&k5, b()).unwrap().done().unwrap();
        assert_eq!(td.independence_number(&k5, b()).unwrap(), 1);
        let c4 = Graph::cycle(4).unwrap();
        let td = decompose_cograph(&c4, b()).unwrap().done().unwrap();
        assert_eq!(td.independence_number(&c4, b()).unwrap(), 2);
        let e = Graph::empty(4);
        let td = decompose_cograph(&e, b()).unwrap().done().unwrap();
        assert_eq!(td.independence_number(&e, b()).unwrap(), 1);
    }

    #[test]
    fn json_round_trip() {
        let g = random_cograph(12, &mut crate::random::rng(5));
        let t = tree_of(&g);
        let back = Cotree::from_json(&t.to_json(), g.n()).unwrap();
        assert_eq!(back.to_graph(), g);
        assert_eq!((back.alpha(), back.ibn()), (t.alpha(), t.ibn()));
        assert!(Cotree::from_json(&json!({"op": "leaf", "vertex": 3}), 2).is_err());
        assert!(Cotree::from_json(&json!({"op": "join", "children": [{"op": "leaf", "vertex": 0}]}), 1).is_err());
    }

    #[test]
    fn large_random_cograph() {
        let g = random_cograph(2000, &mut crate::random::rng(1));
        let t = tree_of(&g);
        assert!(t.is_canonical());
        assert_eq!(t.root().size, 2000);
        assert_eq!(t.to_graph(), g);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]

            #[test]
            fn matches_oracle(n in 1usize..9, seed in any::<u64>()) {
                let g = random_cograph(n, &mut crate::random::rng(seed));
                let t = tree_of(&g);
                prop_assert!(t.is_canonical());
                prop_assert_eq!(t.to_graph(), g.clone());
                prop_assert_eq!(t.alpha(), oracle::alpha_exact(&g, b()).unwrap());
                prop_assert_eq!(t.ibn(), oracle::ibn_exact(&g, b()).unwrap());
                let tin = oracle::tin_exact(&g, b()).unwrap();
                prop_assert_eq!(t.ibn().max(1), tin);
                let td = decompose_cotree(&t);
                prop_assert_eq!(td.validate(&g), Ok(()));
                prop_assert_eq!(td.independence_number(&g, b()).unwrap(), tin);
            }

            #[test]
            fn non_cographs_are_certified(n in 4usize..12, p in 0.2f64..0.8, seed in any::<u64>()) {
                let g = crate::random::gnp(n, p, seed);
                match build_cotree(&g, b()).unwrap() {
                    Outcome::Done(t) => prop_assert_eq!(t.to_graph(), g),
                    Outcome::Certificate(c) => prop_assert!(c.revalidate(&g).unwrap()),
                }
            }
        }
    }
}
