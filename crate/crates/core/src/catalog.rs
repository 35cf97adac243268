//! Canonical forms for graphs on at most 8 vertices and the catalog of all
//! graphs up to isomorphism on at most 7 vertices.
//!
//! The canonical code is the smallest adjacency code over relabellings that
//! respect an isomorphism-invariant ordered partition (degree, refined by
//! neighbour counts per cell until stable). Any isomorphism maps the
//! partition of one graph onto the other's, so equal codes mean isomorphic
//! graphs and vice versa.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const MAX_CANONICAL_VERTICES: usize = 8;
pub const MAX_CATALOG_VERTICES: usize = 7;

/// Bit index of the pair `i < j`; pairs are ordered by `j`, then `i`, with
/// earlier pairs more significant.
fn bit(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Equitable ordered partition as a cell index per vertex; cells are
/// numbered by sorted invariant keys.
fn refined_cells(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut cell: Vec<usize> = vec![0; n];
    let mut count = 1;
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut per = vec![0usize; count];
                for u in g.neighbors(v).iter() {
                    per[cell[u]] += 1;
                }
                (cell[v], per)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = keys.iter().collect();
        let distinct: Vec<_> = distinct.into_iter().collect();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(&k).expect("key present"))
            .collect();
        if distinct.len() == count {
            return next;
        }
        count = distinct.len();
        cell = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: u32,
    /// Cell required at each position.
    slots: Vec<usize>,
    cell: Vec<usize>,
    placed: Vec<usize>,
    best: Option<u64>,
}

impl Search<'_> {
    /// Code bits of the pairs ending at position `j`, placed at their final offsets.
    fn column(&self, j: usize, v: usize) -> u64 {
        let mut bits = 0u64;
        for (i, &u) in self.placed.iter().enumerate() {
            if self.g.has_edge(u, v) {
                bits |= 1u64 << (self.total - 1 - bit(i, j));
            }
        }
        bits
    }

    fn run(&mut self, prefix: u64, used: &mut VertexSet) {
        let j = self.placed.len();
        if j == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        // Bits fixed after position j: all pairs with second index <= j.
        let fixed = pair_count(j + 1);
        let mask = if fixed == 0 { 0 } else { !0u64 << (self.total - fixed) };
        for v in 0..self.n {
            if used.contains(v) || self.cell[v] != self.slots[j] {
                continue;
            }
            let code = prefix | self.column(j, v);
            if let Some(b) = self.best {
                if code & mask > b & mask {
                    continue;
                }
            }
            used.insert(v);
            self.placed.push(v);
            self.run(code, used);
            self.placed.pop();
            used.remove(v);
        }
    }
}

/// Canonical adjacency code of `g`; two graphs on the same number of
/// vertices are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_CANONICAL_VERTICES,
        });
    }
    let cell = refined_cells(g);
    let mut slots = cell.clone();
    slots.sort_unstable();
    let mut search = Search {
        g,
        n,
        total: pair_count(n),
        slots,
        cell,
        placed: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, &mut VertexSet::new(n));
    Ok(search.best.expect("some relabelling exists"))
}

/// The graph on `n` vertices with adjacency code `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_count(n);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - bit(i, j)) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("codes describe simple graphs")
}

/// One canonical representative of every isomorphism class on `n`
/// vertices, ordered by canonical code. Built by adding a vertex with every
/// neighbourhood to each graph on `n - 1` vertices.
pub fn graphs_on(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CATALOG_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_CATALOG_VERTICES,
        });
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_from_code(k - 1, code);
            let base_edges: Vec<(usize, usize)> = base.edges().collect();
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base_edges.clone();
                edges.extend((0..k - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, k - 1)));
                let g = Graph::new(k, &edges)?;
                next.insert(canonical_code(&g)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|code| graph_from_code(n, code)).collect())
}

/// Every graph on `0..=max_n` vertices up to isomorphism.
pub fn all_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.extend(graphs_on(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(g.n(), &edges).unwrap()
    }

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (0..=7).map(|n| graphs_on(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        assert!(graphs_on(8).is_err());
    }

    #[test]
    fn distinguishes_small_graphs() {
        let p4 = canonical_code(&Graph::path(4)).unwrap();
        let star = canonical_code(&Graph::star(3)).unwrap();
        assert_ne!(p4, star);
        let c6 = canonical_code(&Graph::cycle(6).unwrap()).unwrap();
        let two_triangles = canonical_code(&Graph::complete(3).disjoint_union(&Graph::complete(3))).unwrap();
        assert_ne!(c6, two_triangles);
        let k33 = canonical_code(&Graph::complete_bipartite(3, 3)).unwrap();
        let prism = Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let prism = canonical_code(&prism).unwrap();
        assert_ne!(k33, prism);
        assert!(canonical_code(&Graph::empty(9)).is_err());
    }

    #[test]
    fn operations_are_associative() {
        let small = graphs_on(3).unwrap();
        let pairs = graphs_on(2).unwrap();
        for a in &small {
            for b in &small {
                for c in &pairs {
                    let l = a.join(b).join(c);
                    let r = a.join(&b.join(c));
                    assert_eq!(canonical_code(&l).unwrap(), canonical_code(&r).unwrap());
                    let l = a.disjoint_union(b).disjoint_union(c);
                    let r = a.disjoint_union(&b.disjoint_union(c));
                    assert_eq!(canonical_code(&l).unwrap(), canonical_code(&r).unwrap());
                    assert_eq!(canonical_code(&a.join(b)).unwrap(), canonical_code(&b.join(a)).unwrap());
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(300))]

            #[test]
            fn invariant_under_relabelling(n in 0usize..9, p in 0.0f64..1.0, seed in any::<u64>()) {
                let g = crate::random::gnp(n, p, seed);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut crate::random::rng(seed ^ 7));
                let code = canonical_code(&g).unwrap();
                prop_assert_eq!(code, canonical_code(&relabel(&g, &perm)).unwrap());
                let back = graph_from_code(n, code);
                prop_assert_eq!(canonical_code(&back).unwrap(), code);
                prop_assert_eq!(back.m(), g.m());
            }
        }
    }
}
