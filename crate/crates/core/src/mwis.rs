//! Maximum weight independent set by dynamic programming over a tree
//! decomposition, with exact rational weights.
//!
//! The decomposition is rewritten into a binary normal form (leaf,
//! introduce, forget, join) stored in an arena whose children always
//! precede their parent, so the tables are filled by one forward scan.
//! A table maps each independent subset `S` of the node's bag to the best
//! weight of an independent set in the subtree meeting the bag in `S`.
//! The number of states is bounded by the sum over bags of the number of
//! independent sets inside them, which is polynomial once `α` of the bags
//! is bounded.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Budget, Error, Result};
use crate::graph::Graph;
use crate::tdecomp::TreeDecomposition;
use crate::vertex_set::VertexSet;
use crate::{backbone, cograph, lift, starpath, Outcome};

/// A graph with a non-negative rational weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedInstance {
    graph: Graph,
    weights: Vec<BigRational>,
}

impl WeightedInstance {
    pub fn new(graph: Graph, weights: Vec<BigRational>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::param(format!(
                "{} weights for {} vertices",
                weights.len(),
                graph.n()
            )));
        }
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::param(format!("weight of vertex {v} is negative")));
        }
        Ok(WeightedInstance { graph, weights })
    }

    /// All weights one.
    pub fn unit(graph: Graph) -> Self {
        let weights = vec![BigRational::from_integer(1.into()); graph.n()];
        WeightedInstance { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn weight_of(&self, s: &VertexSet) -> BigRational {
        s.iter().fold(BigRational::zero(), |acc, v| acc + &self.weights[v])
    }
}

#[derive(Clone, Debug)]
enum Nice {
    Leaf,
    Introduce { v: usize, child: usize },
    Forget { v: usize, child: usize },
    Join { left: usize, right: usize },
}

/// Arena of normal-form nodes; the last node is the root and has an empty bag.
struct NiceForm {
    nodes: Vec<Nice>,
}

impl NiceForm {
    fn push(&mut self, node: Nice) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    /// Extends `top` (with bag `from`) into a chain ending in bag `to`.
    fn morph(&mut self, mut top: usize, from: &VertexSet, to: &VertexSet) -> usize {
        for v in from.difference(to).iter() {
            top = self.push(Nice::Forget { v, child: top });
        }
        for v in to.difference(from).iter() {
            top = self.push(Nice::Introduce { v, child: top });
        }
        top
    }

    fn build(td: &TreeDecomposition) -> NiceForm {
        let k = td.node_count();
        let n = td.universe();
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in td.tree_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        // Iterative post-order from node 0.
        let mut order = Vec::with_capacity(k);
        let mut parent = vec![usize::MAX; k];
        let mut stack = vec![0usize];
        let mut seen = vec![false; k];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            order.push(t);
            for &c in &adj[t] {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = t;
                    stack.push(c);
                }
            }
        }
        let mut form = NiceForm { nodes: Vec::new() };
        let mut top = vec![usize::MAX; k];
        let empty = VertexSet::new(n);
        for &t in order.iter().rev() {
            let bag = td.bag(t);
            let mut acc: Option<usize> = None;
            for &c in &adj[t] {
                if parent[c] != t {
                    continue;
                }
                let branch = form.morph(top[c], td.bag(c), bag);
                acc = Some(match acc {
                    None => branch,
                    Some(left) => form.push(Nice::Join { left, right: branch }),
                });
            }
            top[t] = match acc {
                Some(x) => x,
                None => {
                    let leaf = form.push(Nice::Leaf);
                    form.morph(leaf, &empty, bag)
                }
            };
        }
        form.morph(top[0], td.bag(0), &empty);
        form
    }
}

type Table = HashMap<VertexSet, BigRational>;

/// Exact optimum over a valid decomposition of `inst.graph()`. The returned
/// set is re-checked for independence and weight before returning.
pub fn solve(inst: &WeightedInstance, td: &TreeDecomposition, budget: Budget) -> Result<(BigRational, VertexSet)> {
    let g = &inst.graph;
    let n = g.n();
    td.validate(g).map_err(Error::InvalidDecomposition)?;
    let form = NiceForm::build(td);
    let counter = budget.counter("independent-set states of the dynamic program");
    let w = &inst.weights;
    let mut tables: Vec<Table> = Vec::with_capacity(form.nodes.len());
    for node in &form.nodes {
        let mut table = Table::new();
        match *node {
            Nice::Leaf => {
                counter.tick()?;
                table.insert(VertexSet::new(n), BigRational::zero());
            }
            Nice::Introduce { v, child } => {
                for (s, val) in &tables[child] {
                    counter.tick()?;
                    table.insert(s.clone(), val.clone());
                    if s.is_disjoint(g.neighbors(v)) {
                        counter.tick()?;
                        let mut t = s.clone();
                        t.insert(v);
                        table.insert(t, val + &w[v]);
                    }
                }
            }
            Nice::Forget { v, child } => {
                for (s, val) in &tables[child] {
                    let mut key = s.clone();
                    key.remove(v);
                    match table.get_mut(&key) {
                        Some(best) if *best >= *val => {}
                        Some(best) => *best = val.clone(),
                        None => {
                            counter.tick()?;
                            table.insert(key, val.clone());
                        }
                    }
                }
            }
            Nice::Join { left, right } => {
                let (small, large) = if tables[left].len() <= tables[right].len() {
                    (left, right)
                } else {
                    (right, left)
                };
                for (s, a) in &tables[small] {
                    if let Some(b) = tables[large].get(s) {
                        counter.tick()?;
                        table.insert(s.clone(), a + b - inst.weight_of(s));
                    }
                }
            }
        }
        tables.push(table);
    }
    let root = form.nodes.len() - 1;
    let best = tables[root][&VertexSet::new(n)].clone();

    // Walk down from the root, choosing the state that attains each value.
    let mut chosen = VertexSet::new(n);
    let mut stack = vec![(root, VertexSet::new(n))];
    while let Some((t, s)) = stack.pop() {
        chosen.union_with(&s);
        match form.nodes[t] {
            Nice::Leaf => {}
            Nice::Introduce { v, child } => {
                let mut c = s;
                c.remove(v);
                stack.push((child, c));
            }
            Nice::Forget { v, child } => {
                let target = &tables[t][&s];
                let mut with_v = s.clone();
                with_v.insert(v);
                let next = match tables[child].get(&with_v) {
                    Some(val) if val == target => with_v,
                    _ => s,
                };
                stack.push((child, next));
            }
            Nice::Join { left, right } => {
                stack.push((left, s.clone()));
                stack.push((right, s));
            }
        }
    }
    if !g.is_independent(&chosen) || inst.weight_of(&chosen) != best {
        return Err(Error::internal("reconstructed set does not attain the optimum"));
    }
    Ok((best, chosen))
}

/// Which decomposer produced the decomposition used by [`solve_auto`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Cograph,
    StarPath,
    Backbone,
    Heuristic,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Cograph => "cograph",
            Strategy::StarPath => "star-path",
            Strategy::Backbone => "backbone",
            Strategy::Heuristic => "heuristic",
        }
    }
}

/// Class parameters under which a specialised decomposer applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassHint {
    StarPath { d: usize, s: usize },
    Backbone { d: usize, p: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub weight: BigRational,
    pub set: VertexSet,
    pub strategy: Strategy,
    /// `α` of the decomposition the dynamic program ran on.
    pub alpha: usize,
}

/// Picks a decomposer and solves: the cotree route on `P4`-free graphs,
/// the hinted class decomposer otherwise, and the heuristic decomposition
/// when no hint is given or the hinted decomposer returns a certificate.
pub fn solve_auto(inst: &WeightedInstance, hint: Option<ClassHint>, budget: Budget) -> Result<Solution> {
    let g = &inst.graph;
    let (td, strategy) = choose_decomposition(g, hint, budget)?;
    let alpha = td.independence_number(g, budget)?;
    let (weight, set) = solve(inst, &td, budget)?;
    Ok(Solution {
        weight,
        set,
        strategy,
        alpha,
    })
}

fn choose_decomposition(g: &Graph, hint: Option<ClassHint>, budget: Budget) -> Result<(TreeDecomposition, Strategy)> {
    if let Outcome::Done(td) = cograph::decompose_cograph(g, budget)? {
        return Ok((td, Strategy::Cograph));
    }
    let hinted = match hint {
        Some(ClassHint::StarPath { d, s }) => Some((starpath::decompose(g, d, s, budget)?, Strategy::StarPath)),
        Some(ClassHint::Backbone { d, p }) => Some((backbone::decompose(g, d, p, budget)?, Strategy::Backbone)),
        None => None,
    };
    if let Some((Outcome::Done(td), strategy)) = hinted {
        return Ok((td, strategy));
    }
    Ok((lift::heuristic_td(g, budget)?, Strategy::Heuristic))
}

/// Reads a JSON array with one weight per vertex: a non-negative integer, or
/// `{"num": a, "den": b}` where `a`, `b` are integers or decimal strings.
pub fn parse_weights(text: &str, n: usize) -> Result<Vec<BigRational>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let items = value
        .as_array()
        .ok_or_else(|| Error::param("weights must be a JSON array"))?;
    if items.len() != n {
        return Err(Error::param(format!("{} weights for {n} vertices", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(v, item)| {
            let w = match item {
                Value::Object(obj) => {
                    let num = json_int(obj.get("num"), v, "num")?;
                    let den = json_int(obj.get("den"), v, "den")?;
                    if den.is_zero() {
                        return Err(Error::param(format!("weight of vertex {v} has denominator 0")));
                    }
                    BigRational::new(num, den)
                }
                other => BigRational::from_integer(json_int(Some(other), v, "weight")?),
            };
            if w.is_negative() {
                return Err(Error::param(format!("weight of vertex {v} is negative")));
            }
            Ok(w)
        })
        .collect()
}

fn json_int(value: Option<&Value>, v: usize, field: &str) -> Result<BigInt> {
    let bad = || Error::param(format!("weight of vertex {v}: {field} must be an integer"));
    match value {
        Some(Value::Number(x)) => {
            if let Some(i) = x.as_i64() {
                Ok(i.into())
            } else if let Some(u) = x.as_u64() {
                Ok(u.into())
            } else {
                Err(bad())
            }
        }
        Some(Value::String(s)) => s.trim().parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

/// `{"num": .., "den": ..}` in lowest terms; components outside `i64` are
/// written as decimal strings.
pub fn weight_json(w: &BigRational) -> Value {
    fn part(x: &BigInt) -> Value {
        match i64::try_from(x) {
            Ok(i) => json!(i),
            Err(_) => json!(x.to_string()),
        }
    }
    json!({"num": part(w.numer()), "den": part(w.denom())})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn b() -> Budget {
        Budget::default()
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn frac(a: i64, c: i64) -> BigRational {
        BigRational::new(a.into(), c.into())
    }

    #[test]
    fn clique_single_bag() {
        let g = Graph::complete(4);
        let inst = WeightedInstance::new(g.clone(), vec![int(3), frac(7, 2), int(1), int(2)]).unwrap();
        let (w, s) = solve(&inst, &TreeDecomposition::single_bag(&g), b()).unwrap();
        assert_eq!(w, frac(7, 2));
        assert_eq!(s.to_vec(), vec![1]);
    }

    #[test]
    fn claw_with_star_decomposition() {
        let g = Graph::star(3);
        let td = TreeDecomposition::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]], vec![(0, 1), (0, 2)]).unwrap();
        let (w, s) = solve(&WeightedInstance::unit(g), &td, b()).unwrap();
        assert_eq!(w, int(3));
        assert_eq!(s.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn null_and_edgeless() {
        let g = Graph::empty(0);
        let (w, s) = solve(
            &WeightedInstance::unit(g.clone()),
            &TreeDecomposition::single_bag(&g),
            b(),
        )
        .unwrap();
        assert!(w.is_zero() && s.is_empty());
        let g = Graph::empty(3);
        let inst = WeightedInstance::new(g.clone(), vec![int(0), int(2), frac(1, 3)]).unwrap();
        let sol = solve_auto(&inst, None, b()).unwrap();
        assert_eq!(sol.weight, frac(7, 3));
        assert_eq!(sol.strategy, Strategy::Cograph);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(WeightedInstance::new(Graph::path(2), vec![int(1)]).is_err());
        assert!(WeightedInstance::new(Graph::path(2), vec![int(1), int(-1)]).is_err());
        let g = Graph::path(3);
        let td = TreeDecomposition::new(3, vec![vec![0, 1], vec![2]], vec![(0, 1)]).unwrap();
        assert!(matches!(
            solve(&WeightedInstance::unit(g), &td, b()),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn state_budget() {
        let g = Graph::empty(12);
        let err = solve(
            &WeightedInstance::unit(g.clone()),
            &TreeDecomposition::single_bag(&g),
            Budget::new(100),
        )
        .unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn dispatch() {
        let c5 = Graph::cycle(5).unwrap();
        let sol = solve_auto(&WeightedInstance::unit(c5.clone()), None, b()).unwrap();
        assert_eq!((sol.strategy, sol.weight.clone()), (Strategy::Heuristic, int(2)));
        let hint = ClassHint::StarPath { d: 3, s: 6 };
        let sol = solve_auto(&WeightedInstance::unit(c5.clone()), Some(hint), b()).unwrap();
        assert_eq!(sol.strategy, Strategy::StarPath);
        assert!(sol.alpha <= starpath::bound(3, 6));
        // L(K4) is the octahedron, a cograph; C7 is claw-free and not.
        let lk4 = Graph::complete(4).line_graph().graph;
        let sol = solve_auto(
            &WeightedInstance::unit(lk4),
            Some(ClassHint::Backbone { d: 3, p: 2 }),
            b(),
        )
        .unwrap();
        assert_eq!((sol.strategy, sol.weight), (Strategy::Cograph, int(2)));
        let c7 = Graph::cycle(7).unwrap();
        let sol = solve_auto(
            &WeightedInstance::unit(c7),
            Some(ClassHint::Backbone { d: 3, p: 2 }),
            b(),
        )
        .unwrap();
        assert_eq!((sol.strategy, sol.weight), (Strategy::Backbone, int(3)));
        // A hinted decomposer that certifies falls back to the heuristic.
        let sol = solve_auto(
            &WeightedInstance::unit(Graph::path(8)),
            Some(ClassHint::StarPath { d: 3, s: 5 }),
            b(),
        )
        .unwrap();
        assert_eq!((sol.strategy, sol.weight), (Strategy::Heuristic, int(4)));
        let sol = solve_auto(&WeightedInstance::unit(Graph::path(3)), None, b()).unwrap();
        assert_eq!(sol.strategy, Strategy::Cograph);
    }

    #[test]
    fn weights_json() {
        let w = parse_weights(r#"[3, {"num": 1, "den": 2}, {"num": "4", "den": "6"}, 0]"#, 4).unwrap();
        assert_eq!(w, vec![int(3), frac(1, 2), frac(2, 3), int(0)]);
        assert_eq!(weight_json(&frac(4, 6)), json!({"num": 2, "den": 3}));
        let big = BigRational::from_integer(BigInt::from(10).pow(30));
        assert_eq!(weight_json(&big)["num"], json!("1000000000000000000000000000000"));
        assert!(parse_weights("[1, 2]", 3).is_err());
        assert!(parse_weights("[-1]", 1).is_err());
        assert!(parse_weights(r#"[{"num": 1, "den": 0}]"#, 1).is_err());
        assert!(parse_weights("[1.5]", 1).is_err());
        assert!(matches!(
            parse_weights("[1,\n2,,]", 2),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn weights(n: usize, seed: u64) -> Vec<BigRational> {
            use rand::Rng;
            let mut rng = crate::random::rng(seed);
            (0..n)
                .map(|_| frac(rng.gen_range(0..20), rng.gen_range(1..5)))
                .collect()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(150))]

            #[test]
            fn equals_oracle(n in 0usize..13, p in 0.1f64..0.9, seed in any::<u64>()) {
                let g = crate::random::gnp(n, p, seed);
                let inst = WeightedInstance::new(g.clone(), weights(n, seed ^ 1)).unwrap();
                let (expected, _) = oracle::mwis_exact(&g, inst.weights(), b()).unwrap();
                let sol = solve_auto(&inst, None, b()).unwrap();
                prop_assert_eq!(&sol.weight, &expected);
                let (w, s) = solve(&inst, &TreeDecomposition::single_bag(&g), b()).unwrap();
                prop_assert_eq!(&w, &expected);
                prop_assert!(g.is_independent(&s));
            }

            #[test]
            fn decomposition_independent(n in 1usize..11, p in 0.1f64..0.7, seed in any::<u64>()) {
                let g = crate::random::gnp(n, p, seed);
                let inst = WeightedInstance::new(g.clone(), weights(n, seed)).unwrap();
                let order: Vec<usize> = (0..n).rev().collect();
                let a = solve(&inst, &crate::tdecomp::from_elimination_ordering(&g, &order).unwrap(), b()).unwrap().0;
                let c = solve(&inst, &lift::heuristic_td(&g, b()).unwrap(), b()).unwrap().0;
                prop_assert_eq!(a, c);
            }

            #[test]
            fn isolated_vertex_adds_its_weight(n in 1usize..10, p in 0.1f64..0.9, seed in any::<u64>(), extra in 0i64..50) {
                let g = crate::random::gnp(n, p, seed);
                let w = weights(n, seed);
                let base = solve_auto(&WeightedInstance::new(g.clone(), w.clone()).unwrap(), None, b()).unwrap().weight;
                let bigger = g.disjoint_union(&Graph::empty(1));
                let mut w2 = w;
                w2.push(int(extra));
                let grown = solve_auto(&WeightedInstance::new(bigger, w2).unwrap(), None, b()).unwrap().weight;
                prop_assert_eq!(grown, base + int(extra));
            }
        }
    }
}
