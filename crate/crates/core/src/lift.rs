//! Decompositions of intersection graphs of connected subgraphs, lifted from
//! a decomposition of the host. A lifted bag is covered by one clique per
//! host vertex in the host bag, so its independence number is at most the
//! host width plus one.

use rayon::prelude::*;

use crate::error::{Budget, Error, Result};
use crate::graph::{Graph, LineGraph};
use crate::oracle;
use crate::tdecomp::{self, TreeDecomposition};
use crate::vertex_set::VertexSet;

/// Connected subgraphs `H_j` of a host `H`, given by their vertex sets.
#[derive(Clone, Debug)]
pub struct SubgraphFamily {
    host: Graph,
    members: Vec<VertexSet>,
}

impl SubgraphFamily {
    /// Rejects empty or disconnected members, reporting the first index.
    pub fn new(host: Graph, members: Vec<VertexSet>) -> Result<Self> {
        for (j, m) in members.iter().enumerate() {
            host.check_set(m)?;
            if m.is_empty() {
                return Err(Error::param(format!("member {j} is empty")));
            }
            if !host.is_connected_within(m) {
                return Err(Error::param(format!("member {j} does not induce a connected subgraph")));
            }
        }
        Ok(SubgraphFamily { host, members })
    }

    /// The edges of `g` as two-vertex members; the intersection graph is `L(g)`.
    pub fn edges_of(g: &Graph) -> Self {
        let members = g.edges().map(|(u, v)| g.set_of([u, v])).collect();
        SubgraphFamily {
            host: g.clone(),
            members,
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Members are adjacent iff they share a host vertex.
pub fn intersection_graph(fam: &SubgraphFamily) -> Graph {
    let k = fam.members.len();
    let n = fam.host.n();
    // holders[x] = members containing host vertex x
    let mut holders = vec![VertexSet::new(k); n];
    for (j, m) in fam.members.iter().enumerate() {
        for x in m.iter() {
            holders[x].insert(j);
        }
    }
    let adj = fam
        .members
        .iter()
        .enumerate()
        .map(|(j, m)| {
            let mut row = VertexSet::new(k);
            for x in m.iter() {
                row.union_with(&holders[x]);
            }
            row.remove(j);
            row
        })
        .collect();
    Graph::from_adjacency_unchecked(adj)
}

/// Same tree; bag `t` holds every member meeting the host bag `β_H(t)`.
/// Validity and the `width + 1` bound are asserted before returning.
pub fn lift_decomposition(
    fam: &SubgraphFamily,
    host_td: &TreeDecomposition,
    budget: Budget,
) -> Result<TreeDecomposition> {
    host_td.validate(&fam.host).map_err(Error::InvalidDecomposition)?;
    let k = fam.members.len();
    let bags: Vec<VertexSet> = host_td
        .bags()
        .par_iter()
        .map(|hb| VertexSet::from_iter_in(k, (0..k).filter(|&j| !fam.members[j].is_disjoint(hb))))
        .collect();
    let lifted = TreeDecomposition::from_sets(k, bags, host_td.tree_edges().to_vec())?;
    let g = intersection_graph(fam);
    lifted
        .validate(&g)
        .map_err(|v| Error::internal(format!("lifted decomposition is invalid: {v}")))?;
    let limit = (host_td.width() + 1).max(0) as usize;
    let alpha = lifted.independence_number(&g, budget)?;
    if alpha > limit {
        return Err(Error::internal(format!(
            "lifted decomposition has independence number {alpha} above host width + 1 = {limit}"
        )));
    }
    Ok(lifted)
}

/// A decomposition of `L(G)` with its edge map.
#[derive(Clone, Debug)]
pub struct LineDecomposition {
    pub line: LineGraph,
    pub decomposition: TreeDecomposition,
    /// Width of the host decomposition used.
    pub host_width: isize,
}

/// Lifts `host_td` (or a heuristic decomposition of `g`) to `L(g)`.
pub fn line_decomposition(g: &Graph, host_td: Option<&TreeDecomposition>, budget: Budget) -> Result<LineDecomposition> {
    let owned;
    let host_td = match host_td {
        Some(td) => td,
        None => {
            owned = heuristic_td(g, budget)?;
            &owned
        }
    };
    let fam = SubgraphFamily::edges_of(g);
    let decomposition = lift_decomposition(&fam, host_td, budget)?;
    Ok(LineDecomposition {
        line: g.line_graph(),
        decomposition,
        host_width: host_td.width(),
    })
}

/// Graphs at most this large get an exact-treewidth ordering.
pub const EXACT_HEURISTIC_LIMIT: usize = 10;

/// Min-fill elimination (ties: fewer neighbours, then lower index); exact
/// treewidth ordering for graphs on at most [`EXACT_HEURISTIC_LIMIT`] vertices.
pub fn heuristic_td(g: &Graph, budget: Budget) -> Result<TreeDecomposition> {
    let order = if g.n() <= EXACT_HEURISTIC_LIMIT {
        oracle::tw_exact_with_ordering(g, budget)?.ordering
    } else {
        min_fill_ordering(g)
    };
    tdecomp::from_elimination_ordering(g, &order)
}

pub fn min_fill_ordering(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut alive = g.vertex_set();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = alive.iter().min_by_key(|&v| (fill_in(&adj, v), adj[v].len(), v)) {
        let nb = adj[v].clone();
        for u in nb.iter() {
            adj[u].union_with(&nb);
            adj[u].remove(u);
            adj[u].remove(v);
        }
        alive.remove(v);
        order.push(v);
    }
    order
}

/// Missing edges among the current neighbours of `v`.
fn fill_in(adj: &[VertexSet], v: usize) -> usize {
    let nb = &adj[v];
    let k = nb.len();
    let present: usize = nb.iter().map(|u| adj[u].intersection_count(nb)).sum::<usize>() / 2;
    k * k.saturating_sub(1) / 2 - present
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn intersection_graph_examples() {
        let g = crate::random::gnp(8, 0.5, 4);
        let lg = intersection_graph(&SubgraphFamily::edges_of(&g));
        assert_eq!(lg, g.line_graph().graph);
        let host = Graph::path(6);
        let disjoint = SubgraphFamily::new(
            host.clone(),
            vec![host.set_of([0, 1]), host.set_of([3]), host.set_of([4, 5])],
        )
        .unwrap();
        assert_eq!(intersection_graph(&disjoint).m(), 0);
        let shared = SubgraphFamily::new(
            host.clone(),
            vec![host.set_of([1, 2]), host.set_of([2]), host.set_of([2, 3, 4])],
        )
        .unwrap();
        assert_eq!(intersection_graph(&shared), Graph::complete(3));
    }

    #[test]
    fn disconnected_member_is_rejected() {
        let host = Graph::path(4);
        let err = SubgraphFamily::new(host.clone(), vec![host.set_of([0]), host.set_of([0, 2])]).unwrap_err();
        assert!(err.to_string().contains("member 1"));
    }

    #[test]
    fn complete_host_single_bag() {
        for n in 3..=6 {
            let kn = Graph::complete(n);
            let ld = line_decomposition(&kn, Some(&TreeDecomposition::single_bag(&kn)), b()).unwrap();
            assert_eq!(ld.decomposition.node_count(), 1);
            assert_eq!(
                ld.decomposition.independence_number(&ld.line.graph, b()).unwrap(),
                n / 2
            );
        }
    }

    #[test]
    fn tree_hosts() {
        // Any bag holding both ends of an edge lifts to three consecutive
        // edges, so the lifted bags reach width + 1 = 2 although tin(L(P5)) = 1.
        let p5 = Graph::path(5);
        let ld = line_decomposition(&p5, None, b()).unwrap();
        assert_eq!(ld.host_width, 1);
        assert_eq!(ld.decomposition.independence_number(&ld.line.graph, b()).unwrap(), 2);
        assert_eq!(oracle::tin_exact(&ld.line.graph, b()).unwrap(), 1);
        // A star: all edges meet at the centre, so L is a clique.
        let star = Graph::star(5);
        let ld = line_decomposition(&star, Some(&TreeDecomposition::single_bag(&star)), b()).unwrap();
        assert_eq!(ld.decomposition.independence_number(&ld.line.graph, b()).unwrap(), 1);
        let p4 = Graph::path(4);
        let ld = line_decomposition(&p4, None, b()).unwrap();
        assert_eq!(ld.line.graph, Graph::path(3));
        assert_eq!(ld.decomposition.independence_number(&ld.line.graph, b()).unwrap(), 2);
    }

    #[test]
    fn disjoint_members_reach_width_plus_one() {
        // Host K_{1,4} in one bag (width 4); members are the 4 leaves: α = 4 < 5.
        let star = Graph::star(4);
        let fam = SubgraphFamily::new(star.clone(), (1..5).map(|v| star.set_of([v])).collect()).unwrap();
        let td = lift_decomposition(&fam, &TreeDecomposition::single_bag(&star), b()).unwrap();
        assert_eq!(td.independence_number(&intersection_graph(&fam), b()).unwrap(), 4);
        // Members are all five singletons: α = 5 = width + 1.
        let fam = SubgraphFamily::new(star.clone(), (0..5).map(|v| star.set_of([v])).collect()).unwrap();
        let td = lift_decomposition(&fam, &TreeDecomposition::single_bag(&star), b()).unwrap();
        assert_eq!(td.independence_number(&intersection_graph(&fam), b()).unwrap(), 5);
    }

    #[test]
    fn witness_and_bipartite_lines() {
        let w = generators::gn_witness(3).unwrap();
        let ld = line_decomposition(&w.graph, Some(&w.chordal_decomposition()), b()).unwrap();
        assert_eq!(ld.host_width, 2);
        assert!(ld.decomposition.independence_number(&ld.line.graph, b()).unwrap() <= 3);
        let k33 = Graph::complete_bipartite(3, 3);
        let ld = line_decomposition(&k33, None, b()).unwrap();
        assert_eq!(ld.host_width, 3);
        assert!(ld.decomposition.independence_number(&ld.line.graph, b()).unwrap() <= 4);
    }

    #[test]
    fn heuristic_widths() {
        let t = crate::random::random_tree(30, &mut crate::random::rng(2));
        assert_eq!(heuristic_td(&t, b()).unwrap().width(), 1);
        assert_eq!(heuristic_td(&Graph::complete(12), b()).unwrap().width(), 11);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(heuristic_td(&c6, b()).unwrap().width(), 2);
        let order = min_fill_ordering(&c6);
        assert_eq!(tdecomp::from_elimination_ordering(&c6, &order).unwrap().width(), 2);
        let c20 = Graph::cycle(20).unwrap();
        assert_eq!(heuristic_td(&c20, b()).unwrap().width(), 2);
        assert_eq!(
            heuristic_td(&Graph::empty(0), b()).unwrap().validate(&Graph::empty(0)),
            Ok(())
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn lift_is_valid_and_bounded(n in 1usize..12, p in 0.1f64..0.9, seed in any::<u64>()) {
                let g = crate::random::gnp(n, p, seed);
                let ld = line_decomposition(&g, None, b()).unwrap();
                prop_assert_eq!(ld.decomposition.validate(&ld.line.graph), Ok(()));
                let alpha = ld.decomposition.independence_number(&ld.line.graph, b()).unwrap() as isize;
                prop_assert!(alpha <= ld.host_width + 1);
            }

            #[test]
            fn heuristic_is_valid(n in 0usize..25, p in 0.0f64..1.0, seed in any::<u64>()) {
                let g = crate::random::gnp(n, p, seed);
                prop_assert_eq!(heuristic_td(&g, b()).unwrap().validate(&g), Ok(()));
            }
        }
    }
}
