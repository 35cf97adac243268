//! Exact reference computations: independence number, treewidth,
//! tree-independence number, induced biclique number and maximum weight
//! independent set. Every routine is exponential and guarded by a [`Budget`].
//!
//! Treewidth and tree-independence number are minimised over elimination
//! orderings. Any tree decomposition induces a chordal completion whose
//! maximal cliques lie inside its bags, and eliminating a chordal completion
//! along a perfect elimination ordering produces bags `{v} ∪ later neighbours`
//! that are cliques of it; so the minimum over orderings of the largest
//! (or most independent) elimination bag is exact. Both use the same fill-in
//! kernel: the bag of `v` eliminated after the set `S` is `v` plus every
//! vertex outside `S` reachable from `v` through `S`, which depends on `S`
//! only. Minimising over orderings is therefore a dynamic program over subsets.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Budget, Counter, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest graph the ordering dynamic program accepts.
pub const MAX_ORDERING_VERTICES: usize = 20;

/// Largest graph [`mwis_exact`] accepts.
pub const MAX_MWIS_VERTICES: usize = 64;

pub fn alpha_exact(g: &Graph, budget: Budget) -> Result<usize> {
    alpha_within(g, &g.vertex_set(), budget)
}

/// `α(G[S])`.
pub fn alpha_within(g: &Graph, s: &VertexSet, budget: Budget) -> Result<usize> {
    Ok(max_independent_set_within(g, s, budget)?.len())
}

/// A maximum independent set of `G[S]`.
pub fn max_independent_set_within(g: &Graph, s: &VertexSet, budget: Budget) -> Result<VertexSet> {
    g.check_set(s)?;
    let counter = budget.counter("independence number");
    let mut search = MisSearch { g, counter: &counter };
    search.solve(s.clone(), 0).map(|r| r.unwrap_or_else(|| g.empty_set()))
}

struct MisSearch<'a> {
    g: &'a Graph,
    counter: &'a Counter,
}

impl MisSearch<'_> {
    /// Greedy clique partition size of `cand`; an upper bound on `α`.
    fn clique_cover_bound(&self, cand: &VertexSet) -> usize {
        let mut left = cand.clone();
        let mut cliques = 0;
        while let Some(v) = left.first() {
            left.remove(v);
            let mut common = self.g.neighbors(v).intersection(&left);
            while let Some(u) = common.first() {
                left.remove(u);
                common.remove(u);
                common.intersect_with(self.g.neighbors(u));
            }
            cliques += 1;
        }
        cliques
    }

    /// A maximum independent set of `G[cand]` if `α(G[cand]) >= lower`, else `None`.
    fn solve(&mut self, mut cand: VertexSet, lower: usize) -> Result<Option<VertexSet>> {
        self.counter.tick()?;
        let mut taken = VertexSet::new(self.g.n());
        // Vertices of degree at most one are in some maximum independent set.
        loop {
            let low = cand
                .iter()
                .find(|&v| self.g.neighbors(v).intersection_count(&cand) <= 1);
            let Some(v) = low else { break };
            taken.insert(v);
            cand.difference_with(self.g.neighbors(v));
            cand.remove(v);
        }
        let base = taken.len();
        if cand.is_empty() {
            return Ok((base >= lower).then_some(taken));
        }
        if base + self.clique_cover_bound(&cand) < lower {
            return Ok(None);
        }
        let comps = self.g.components_within(&cand);
        if comps.len() > 1 {
            for c in comps {
                let best = self.solve(c, 0)?.expect("a search without lower bound always answers");
                taken.union_with(&best);
            }
            return Ok((taken.len() >= lower).then_some(taken));
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v).intersection_count(&cand), std::cmp::Reverse(v)))
            .expect("candidate set is non-empty");
        let mut need = lower.saturating_sub(base);
        let mut best = None;
        let mut with_v = cand.difference(self.g.neighbors(v));
        with_v.remove(v);
        if let Some(mut s) = self.solve(with_v, need.saturating_sub(1))? {
            s.insert(v);
            need = s.len() + 1;
            best = Some(s);
        }
        let mut without_v = cand;
        without_v.remove(v);
        if let Some(s) = self.solve(without_v, need)? {
            best = Some(s);
        }
        Ok(best.map(|mut s| {
            s.union_with(&taken);
            s
        }))
    }
}

/// Fill-in kernel over graphs with at most [`MAX_ORDERING_VERTICES`] vertices.
struct MaskGraph {
    n: usize,
    adj: Vec<u32>,
}

impl MaskGraph {
    fn new(g: &Graph) -> Result<Self> {
        if g.n() > MAX_ORDERING_VERTICES {
            return Err(Error::TooLarge {
                n: g.n(),
                max: MAX_ORDERING_VERTICES,
            });
        }
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | (1 << w)))
            .collect();
        Ok(MaskGraph { n: g.n(), adj })
    }

    fn neighbors_of(&self, mask: u32) -> u32 {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.adj[v];
        }
        out
    }

    /// Bag of `v` eliminated after exactly `eliminated`: `v` plus every other
    /// uneliminated vertex reachable from `v` through `eliminated`.
    fn elimination_bag(&self, eliminated: u32, v: usize) -> u32 {
        let mut reach = 1u32 << v;
        loop {
            let grown = reach | (self.neighbors_of(reach & (eliminated | (1 << v))) & eliminated);
            if grown == reach {
                break;
            }
            reach = grown;
        }
        (self.neighbors_of(reach) & !eliminated) | (1 << v)
    }

    fn alpha(&self, mask: u32, memo: &mut HashMap<u32, u8>) -> u8 {
        if mask == 0 {
            return 0;
        }
        if let Some(&a) = memo.get(&mask) {
            return a;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let a = if self.adj[v] & rest == 0 {
            1 + self.alpha(rest, memo)
        } else {
            (1 + self.alpha(rest & !self.adj[v], memo)).max(self.alpha(rest, memo))
        };
        memo.insert(mask, a);
        a
    }
}

/// Which quantity the ordering dynamic program minimises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BagCost {
    Size,
    Alpha,
}

/// Result of an exact ordering search: the optimum and an ordering attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingOptimum {
    pub value: usize,
    pub ordering: Vec<usize>,
}

fn ordering_dp(g: &Graph, cost: BagCost, budget: Budget) -> Result<OrderingOptimum> {
    let mg = MaskGraph::new(g)?;
    let n = mg.n;
    if n == 0 {
        return Ok(OrderingOptimum {
            value: 0,
            ordering: Vec::new(),
        });
    }
    let counter = budget.counter("elimination-ordering search");
    let mut memo = HashMap::new();
    let full = ((1u64 << n) - 1) as u32;
    let mut best = vec![u8::MAX; 1usize << n];
    best[0] = 0;
    for s in 1..=full {
        let mut m = s;
        let mut value = u8::MAX;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let before = s & !(1 << v);
            let prev = best[before as usize];
            if prev >= value {
                continue;
            }
            counter.tick()?;
            let bag = mg.elimination_bag(before, v);
            let c = match cost {
                BagCost::Size => bag.count_ones() as u8,
                BagCost::Alpha => mg.alpha(bag, &mut memo),
            };
            value = value.min(prev.max(c));
        }
        best[s as usize] = value;
    }
    // Walk back from the full set, eliminating last-first.
    let mut ordering = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = best[s as usize];
        let mut m = s;
        let v = loop {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let before = s & !(1 << v);
            let bag = mg.elimination_bag(before, v);
            let c = match cost {
                BagCost::Size => bag.count_ones() as u8,
                BagCost::Alpha => mg.alpha(bag, &mut memo),
            };
            if best[before as usize].max(c) == target {
                break v;
            }
        };
        ordering.push(v);
        s &= !(1 << v);
    }
    ordering.reverse();
    Ok(OrderingOptimum {
        value: best[full as usize] as usize,
        ordering,
    })
}

/// Tree-independence number with an optimal elimination ordering.
pub fn tin_exact_with_ordering(g: &Graph, budget: Budget) -> Result<OrderingOptimum> {
    ordering_dp(g, BagCost::Alpha, budget)
}

/// Exact tree-independence number; `0` for the null graph.
pub fn tin_exact(g: &Graph, budget: Budget) -> Result<usize> {
    Ok(tin_exact_with_ordering(g, budget)?.value)
}

/// Treewidth with an optimal elimination ordering.
pub fn tw_exact_with_ordering(g: &Graph, budget: Budget) -> Result<OrderingOptimum> {
    let mut opt = ordering_dp(g, BagCost::Size, budget)?;
    opt.value = opt.value.saturating_sub(1);
    Ok(opt)
}

/// Exact treewidth; `0` for the null graph by convention of this routine.
pub fn tw_exact(g: &Graph, budget: Budget) -> Result<usize> {
    Ok(tw_exact_with_ordering(g, budget)?.value)
}

/// Evaluates one ordering: `(max bag size - 1, max bag α)` of its elimination bags.
pub fn ordering_cost(g: &Graph, ordering: &[usize]) -> Result<(usize, usize)> {
    let mg = MaskGraph::new(g)?;
    let mut memo = HashMap::new();
    let mut eliminated = 0u32;
    let (mut size, mut alpha) = (0usize, 0usize);
    for &v in ordering {
        g.check_vertex(v)?;
        let bag = mg.elimination_bag(eliminated, v);
        size = size.max(bag.count_ones() as usize);
        alpha = alpha.max(mg.alpha(bag, &mut memo) as usize);
        eliminated |= 1 << v;
    }
    Ok((size.saturating_sub(1), alpha))
}

/// An induced `K_{k,k}` with `k = ibn(G)`, as its two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Biclique {
    pub fn size(&self) -> usize {
        self.left.len()
    }
}

/// Largest induced balanced complete bipartite subgraph.
///
/// `ibn = max` over independent sets `A` of `min(|A|, α(G[CN(A)]))`, where
/// `CN(A)` are the common neighbours of `A`. Growing `A` only shrinks `CN(A)`,
/// which bounds the search.
pub fn max_induced_biclique(g: &Graph, budget: Budget) -> Result<Biclique> {
    let counter = budget.counter("induced biclique search");
    let mut best = Biclique {
        left: Vec::new(),
        right: Vec::new(),
    };
    let mut chosen = Vec::new();
    biclique_search(
        g,
        &counter,
        budget,
        &mut chosen,
        g.vertex_set(),
        &g.vertex_set(),
        &mut best,
    )?;
    Ok(best)
}

fn biclique_search(
    g: &Graph,
    counter: &Counter,
    budget: Budget,
    chosen: &mut Vec<usize>,
    common: VertexSet,
    allowed: &VertexSet,
    best: &mut Biclique,
) -> Result<()> {
    counter.tick()?;
    if !chosen.is_empty() && common.len() > best.size() && chosen.len() > best.size() {
        let right = max_independent_set_within(g, &common, budget)?;
        let k = chosen.len().min(right.len());
        if k > best.size() {
            *best = Biclique {
                left: chosen[..k].to_vec(),
                right: right.iter().take(k).collect(),
            };
        }
    }
    for v in allowed.iter() {
        let next_common = if chosen.is_empty() {
            g.neighbors(v).clone()
        } else {
            common.intersection(g.neighbors(v))
        };
        if next_common.len() <= best.size() {
            continue;
        }
        // Later candidates only: larger index, non-adjacent to v, not common neighbours.
        let mut next_allowed = allowed.difference(g.neighbors(v));
        for u in 0..=v {
            next_allowed.remove(u);
        }
        next_allowed.difference_with(&next_common);
        chosen.push(v);
        biclique_search(g, counter, budget, chosen, next_common, &next_allowed, best)?;
        chosen.pop();
    }
    Ok(())
}

pub fn ibn_exact(g: &Graph, budget: Budget) -> Result<usize> {
    Ok(max_induced_biclique(g, budget)?.size())
}

/// Maximum weight independent set with exact rational weights.
pub fn mwis_exact(g: &Graph, weights: &[BigRational], budget: Budget) -> Result<(BigRational, VertexSet)> {
    if weights.len() != g.n() {
        return Err(Error::param(format!(
            "{} weights for {} vertices",
            weights.len(),
            g.n()
        )));
    }
    if let Some(v) = weights.iter().position(|w| *w < BigRational::zero()) {
        return Err(Error::param(format!("weight of vertex {v} is negative")));
    }
    if g.n() > MAX_MWIS_VERTICES {
        return Err(Error::TooLarge {
            n: g.n(),
            max: MAX_MWIS_VERTICES,
        });
    }
    let counter = budget.counter("maximum weight independent set");
    let mut search = WeightedSearch {
        g,
        w: weights,
        counter: &counter,
    };
    search.solve(g.vertex_set())
}

struct WeightedSearch<'a> {
    g: &'a Graph,
    w: &'a [BigRational],
    counter: &'a Counter,
}

impl WeightedSearch<'_> {
    fn total(&self, s: &VertexSet) -> BigRational {
        s.iter().fold(BigRational::zero(), |acc, v| acc + &self.w[v])
    }

    fn solve(&mut self, mut cand: VertexSet) -> Result<(BigRational, VertexSet)> {
        self.counter.tick()?;
        let mut taken = VertexSet::new(self.g.n());
        // A vertex outweighing its remaining neighbourhood is in some optimum.
        loop {
            let dominant = cand.iter().find(|&v| {
                let nb = self.g.neighbors(v).intersection(&cand);
                self.w[v] >= self.total(&nb)
            });
            let Some(v) = dominant else { break };
            taken.insert(v);
            cand.difference_with(self.g.neighbors(v));
            cand.remove(v);
        }
        if cand.is_empty() {
            let w = self.total(&taken);
            return Ok((w, taken));
        }
        let comps = self.g.components_within(&cand);
        if comps.len() > 1 {
            for c in comps {
                let (_, s) = self.solve(c)?;
                taken.union_with(&s);
            }
            return Ok((self.total(&taken), taken));
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v).intersection_count(&cand), std::cmp::Reverse(v)))
            .expect("candidate set is non-empty");
        let mut with_v = cand.difference(self.g.neighbors(v));
        with_v.remove(v);
        let (mut wa, mut sa) = self.solve(with_v)?;
        wa += &self.w[v];
        sa.insert(v);
        let mut without_v = cand;
        without_v.remove(v);
        let (wb, sb) = self.solve(without_v)?;
        let (mut w, mut s) = if wb > wa { (wb, sb) } else { (wa, sa) };
        w += self.total(&taken);
        s.union_with(&taken);
        Ok((w, s))
    }
}

/// All independent subsets of `G[bag]`, each as a sorted vertex list, in
/// lexicographic order. Fails once more than `limit` sets exist.
pub fn independent_subsets(g: &Graph, bag: &VertexSet, limit: usize) -> Result<Vec<Vec<usize>>> {
    let verts = bag.to_vec();
    let mut out = vec![Vec::new()];
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        g: &Graph,
        verts: &[usize],
        from: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> Result<()> {
        for i in from..verts.len() {
            let v = verts[i];
            if stack.iter().any(|&u| g.has_edge(u, v)) {
                continue;
            }
            stack.push(v);
            if out.len() >= limit {
                return Err(Error::BudgetExhausted {
                    limit: limit as u64,
                    context: "independent subsets of a bag",
                });
            }
            out.push(stack.clone());
            rec(g, verts, i + 1, stack, out, limit)?;
            stack.pop();
        }
        Ok(())
    }
    rec(g, &verts, 0, &mut stack, &mut out, limit)?;
    Ok(out)
}
