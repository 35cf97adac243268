//! Named graph families: subdivided claws and their line graphs, elementary
//! walls, and the subdivided complete graphs whose line graphs contain large
//! induced bicliques as induced minors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MinorModel};
use crate::tdecomp::TreeDecomposition;
use crate::vertex_set::VertexSet;

/// `S_{p,q,r}`: a claw whose legs have `p`, `q` and `r` edges.
///
/// Vertex 0 is the centre; leg one is `1..=p` walking outwards, then leg two
/// `p+1..=p+q`, then leg three.
pub fn spqr(p: usize, q: usize, r: usize) -> Result<Graph> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::param(format!(
            "leg lengths must be positive, got ({p}, {q}, {r})"
        )));
    }
    let mut edges = Vec::with_capacity(p + q + r);
    let mut next = 1;
    for len in [p, q, r] {
        edges.push((0, next));
        for i in 1..len {
            edges.push((next + i - 1, next + i));
        }
        next += len;
    }
    Graph::new(next, &edges)
}

/// `T_{p,q,r}`, the line graph of `S_{p,q,r}`; vertex `i` is the `i`-th edge
/// of `S_{p,q,r}` in lexicographic order, so `0, 1, 2` form the central triangle.
pub fn tpqr(p: usize, q: usize, r: usize) -> Result<Graph> {
    Ok(spqr(p, q, r)?.line_graph().graph)
}

/// Balanced `S_p = S_{p,p,p}`.
pub fn sp(p: usize) -> Result<Graph> {
    spqr(p, p, p)
}

/// Balanced `T_p = T_{p,p,p}`.
pub fn tp(p: usize) -> Result<Graph> {
    tpqr(p, p, p)
}

/// An elementary wall with its grid coordinates.
#[derive(Clone, Debug)]
pub struct Wall {
    pub graph: Graph,
    /// `(row, column)` of each vertex, both 1-based as in the grid.
    pub coords: Vec<(usize, usize)>,
}

/// The elementary `k`-wall: take the `k × 2k` grid, delete the odd vertical
/// edges of odd columns and the even vertical edges of even columns, then
/// delete the vertices left with degree one. Vertices are numbered row-major.
pub fn wall(k: usize) -> Result<Wall> {
    if k < 3 {
        return Err(Error::param(format!("walls need k >= 3, got {k}")));
    }
    let cols = 2 * k;
    let id = |i: usize, j: usize| (i - 1) * cols + (j - 1);
    let mut edges = Vec::new();
    for i in 1..=k {
        for j in 1..cols {
            edges.push((id(i, j), id(i, j + 1)));
        }
    }
    // Vertical edge number `i` of column `j` joins rows `i` and `i + 1`.
    for j in 1..=cols {
        for i in 1..k {
            if i % 2 != j % 2 {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let grid = Graph::new(k * cols, &edges)?;
    let keep: VertexSet = grid.set_of((0..grid.n()).filter(|&v| grid.degree(v) != 1));
    let (graph, map) = grid.induced_subgraph(&keep);
    let coords = map.iter().map(|&v| (v / cols + 1, v % cols + 1)).collect();
    Ok(Wall { graph, coords })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
}

/// `K_n` with every edge replaced by two internally disjoint paths of length
/// two, and a red/blue edge colouring making each resulting 4-cycle alternate.
#[derive(Clone, Debug)]
pub struct GnWitness {
    pub n: usize,
    pub graph: Graph,
    /// Colour of each edge, in the order of `graph.edges()`.
    pub colors: Vec<((usize, usize), EdgeColor)>,
    /// The original vertices, `0..n`.
    pub core: VertexSet,
}

/// For `u < v` the two subdivision vertices `a, b` carry edges `ua` red,
/// `av` blue, `ub` blue, `bv` red. Subdivision vertices follow `0..n` in
/// lexicographic order of the pairs.
pub fn gn_witness(n: usize) -> Result<GnWitness> {
    if n < 3 {
        return Err(Error::param(format!("the witness family starts at n = 3, got {n}")));
    }
    let mut edges = Vec::new();
    let mut colored = Vec::new();
    let mut next = n;
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (next, next + 1);
            next += 2;
            for (x, y, c) in [
                (u, a, EdgeColor::Red),
                (a, v, EdgeColor::Blue),
                (u, b, EdgeColor::Blue),
                (b, v, EdgeColor::Red),
            ] {
                edges.push((x, y));
                colored.push(((x.min(y), x.max(y)), c));
            }
        }
    }
    let graph = Graph::new(next, &edges)?;
    colored.sort_unstable();
    let core = graph.set_of(0..n);
    Ok(GnWitness {
        n,
        graph,
        colors: colored,
        core,
    })
}

impl GnWitness {
    pub fn color(&self, u: usize, v: usize) -> Option<EdgeColor> {
        let key = (u.min(v), u.max(v));
        self.colors
            .binary_search_by_key(&key, |&(e, _)| e)
            .ok()
            .map(|i| self.colors[i].1)
    }

    /// The chordal completion's decomposition: a central bag holding the
    /// original vertices, and a bag `{x, u, v}` for each subdivision vertex
    /// `x` with neighbours `u, v`, attached to the centre. Width `n - 1`.
    pub fn chordal_decomposition(&self) -> TreeDecomposition {
        let total = self.graph.n();
        let mut bags = vec![self.core.clone()];
        let mut edges = Vec::new();
        for x in self.n..total {
            let mut bag = self.graph.neighbors(x).clone();
            bag.insert(x);
            edges.push((0, bags.len()));
            bags.push(bag);
        }
        TreeDecomposition::from_sets(total, bags, edges).expect("bags are over the witness graph")
    }

    /// The graph with the original vertices turned into a clique.
    pub fn completed(&self) -> Graph {
        let mut edges: Vec<(usize, usize)> = self.graph.edges().collect();
        for u in 0..self.n {
            for v in u + 1..self.n {
                edges.push((u, v));
            }
        }
        Graph::new(self.graph.n(), &edges).expect("completion edges are valid")
    }

    /// Model of `K_{n,n}` (left side `0..n`, right side `n..2n`) as an induced
    /// minor of the line graph: left `i` is the clique of red edges at `i`,
    /// right `j` the clique of blue edges at `j`. `edges` is the line graph's
    /// vertex-to-edge map.
    pub fn biclique_model(&self, edges: &[(usize, usize)]) -> MinorModel {
        let mut branch_sets = vec![Vec::new(); 2 * self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            let c = self.color(u, v).expect("line graph edges come from the witness graph");
            let end = if u < self.n { u } else { v };
            let slot = match c {
                EdgeColor::Red => end,
                EdgeColor::Blue => self.n + end,
            };
            branch_sets[slot].push(i);
        }
        MinorModel { branch_sets }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_induced_minor_model;

    #[test]
    fn subdivided_claws() {
        assert_eq!(spqr(1, 1, 1).unwrap(), Graph::star(3));
        assert_eq!(spqr(2, 2, 2).unwrap().n(), 7);
        assert_eq!(tpqr(1, 1, 1).unwrap(), Graph::complete(3));
        let t = tpqr(2, 3, 4).unwrap();
        assert_eq!((t.n(), t.m()), (9, 3 + 6));
        assert!(spqr(0, 1, 1).is_err());
        assert!(tpqr(1, 0, 1).is_err());
    }

    #[test]
    fn elementary_walls() {
        // Hand construction of the 4-wall as drawn: rows 1 and 4 hold columns
        // 1..=7, rows 2 and 3 hold columns 1..=8; vertical rungs sit at odd
        // columns between rows 1-2 and 3-4, at even columns between rows 2-3.
        let mut id = std::collections::HashMap::new();
        for (row, width) in [(1, 7), (2, 8), (3, 8), (4, 7)] {
            for col in 1..=width {
                let next = id.len();
                id.insert((row, col), next);
            }
        }
        let mut edges = Vec::new();
        for (row, width) in [(1, 7), (2, 8), (3, 8), (4, 7)] {
            for col in 1..width {
                edges.push((id[&(row, col)], id[&(row, col + 1)]));
            }
        }
        for col in (1..=7).step_by(2) {
            edges.push((id[&(1, col)], id[&(2, col)]));
            edges.push((id[&(3, col)], id[&(4, col)]));
        }
        for col in (2..=8).step_by(2) {
            edges.push((id[&(2, col)], id[&(3, col)]));
        }
        let hand = Graph::new(id.len(), &edges).unwrap();
        let w4 = wall(4).unwrap().graph;
        assert_eq!((w4.n(), w4.m()), (30, 38));
        assert_eq!((hand.n(), hand.m()), (30, 38));
        let degrees = |g: &Graph| {
            let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
            d.sort_unstable();
            d
        };
        assert_eq!(degrees(&w4), degrees(&hand));
        assert!(w4.is_connected() && w4.is_bipartite());
        for k in 3..=6 {
            let w = wall(k).unwrap().graph;
            assert_eq!(w.max_degree(), 3);
            assert!((0..w.n()).all(|v| w.degree(v) >= 2));
            assert_eq!(w.n(), 2 * k * k - 2);
        }
        assert!(wall(2).is_err());
    }

    #[test]
    fn small_wall_is_planar_and_bipartite() {
        let w = wall(3).unwrap().graph;
        assert!(w.is_bipartite());
        // Bipartite planar graphs satisfy m <= 2n - 4; a wall also has an
        // explicit embedding: its grid coordinates with straight rungs.
        assert!(w.m() <= 2 * w.n() - 4);
        let coords = wall(3).unwrap().coords;
        for (u, v) in w.edges() {
            let ((r1, c1), (r2, c2)) = (coords[u], coords[v]);
            assert!((r1 == r2 && c1.abs_diff(c2) == 1) || (c1 == c2 && r1.abs_diff(r2) == 1));
        }
    }

    #[test]
    fn witness_family_shape() {
        let g3 = gn_witness(3).unwrap();
        assert_eq!((g3.graph.n(), g3.graph.m()), (9, 12));
        for n in 3..=5 {
            let w = gn_witness(n).unwrap();
            assert_eq!(w.graph.n(), n + n * (n - 1));
            for x in n..w.graph.n() {
                assert_eq!(w.graph.degree(x), 2);
            }
            for v in 0..n {
                let red = w
                    .graph
                    .neighbors(v)
                    .iter()
                    .filter(|&x| w.color(v, x) == Some(EdgeColor::Red))
                    .count();
                let blue = w
                    .graph
                    .neighbors(v)
                    .iter()
                    .filter(|&x| w.color(v, x) == Some(EdgeColor::Blue))
                    .count();
                assert_eq!((red, blue), (n - 1, n - 1));
            }
            // Each 4-cycle u a v b alternates colours.
            for x in (n..w.graph.n()).step_by(2) {
                let nb = w.graph.neighbors(x).to_vec();
                let (u, v) = (nb[0], nb[1]);
                let y = x + 1;
                assert_ne!(w.color(u, x), w.color(x, v));
                assert_ne!(w.color(u, x), w.color(u, y));
                assert_ne!(w.color(u, y), w.color(y, v));
            }
            assert_eq!(w.chordal_decomposition().validate(&w.graph), Ok(()));
            let completed = w.completed();
            assert!(completed.is_chordal());
            assert!(!w.graph.is_chordal());
        }
        assert!(gn_witness(2).is_err());
    }

    #[test]
    fn witness_line_graph_contains_biclique_model() {
        for n in 3..=4 {
            let w = gn_witness(n).unwrap();
            let lg = w.graph.line_graph();
            let model = w.biclique_model(&lg.edges);
            assert_eq!(
                verify_induced_minor_model(&lg.graph, &Graph::complete_bipartite(n, n), &model),
                Ok(())
            );
        }
    }
}
