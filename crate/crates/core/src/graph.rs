//! Simple undirected graphs over dense vertex indices `0..n`, with bitset
//! adjacency, and the elementary operations the decomposers are built from.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected with the offending pair.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Builds a graph from per-vertex neighbourhoods, checking symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        for (u, nb) in adj.iter().enumerate() {
            if nb.universe() != n {
                return Err(Error::param(format!(
                    "neighbourhood of {u} has universe {} instead of {n}",
                    nb.universe()
                )));
            }
            if nb.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = nb.iter().find(|&v| !adj[v].contains(u)) {
                return Err(Error::param(format!("adjacency not symmetric at ({u}, {v})")));
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Graph {
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph {
            adj,
            edge_count,
            labels: None,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency_unchecked(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::param(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::with_capacity(a * b);
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::new(a + b, &edges).expect("biclique edges are valid")
    }

    /// The star `K_{1,d}`: centre 0, leaves `1..=d`.
    pub fn star(d: usize) -> Graph {
        Graph::complete_bipartite(1, d)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::param(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn set_of(&self, vertices: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_iter_in(self.n(), vertices)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            return Err(Error::param(format!(
                "vertex set over universe {} used with a graph on {} vertices",
                s.universe(),
                self.n()
            )));
        }
        Ok(())
    }

    /// `G1 + G2`; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// `G1 * G2`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, join: bool) -> Graph {
        let (a, b) = (self.n(), other.n());
        let n = a + b;
        let mut adj = Vec::with_capacity(n);
        for v in 0..a {
            let mut s = VertexSet::from_iter_in(n, self.adj[v].iter());
            if join {
                for w in a..n {
                    s.insert(w);
                }
            }
            adj.push(s);
        }
        for v in 0..b {
            let mut s = VertexSet::from_iter_in(n, other.adj[v].iter().map(|w| w + a));
            if join {
                for w in 0..a {
                    s.insert(w);
                }
            }
            adj.push(s);
        }
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n())
            .map(|v| {
                let mut s = self.adj[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// The line graph together with the edge of `self` each of its vertices
    /// stands for (vertex `i` of the line graph is `edges[i]`).
    pub fn line_graph(&self) -> LineGraph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let m = edges.len();
        let mut adj = vec![VertexSet::new(m); m];
        for inc in &incident {
            for (k, &e) in inc.iter().enumerate() {
                for &f in &inc[k + 1..] {
                    adj[e].insert(f);
                    adj[f].insert(e);
                }
            }
        }
        LineGraph {
            graph: Graph::from_adjacency_unchecked(adj),
            edges,
        }
    }

    /// `G[S]` and the map from new indices to old ones (ascending).
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let k = map.len();
        let adj = map
            .iter()
            .map(|&v| VertexSet::from_iter_in(k, self.adj[v].iter().filter(|&w| s.contains(w)).map(|w| index[w])))
            .collect();
        (Graph::from_adjacency_unchecked(adj), map)
    }

    /// `G - S`, with the index map of the surviving vertices.
    pub fn remove_vertices(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(&s.complement())
    }

    /// `N[S]`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// `N(S) = N[S] \ S`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.closed_neighborhood(s);
        out.difference_with(s);
        out
    }

    /// Connected components, each as a vertex set, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Components of `G[S]`, ordered by smallest vertex.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut unvisited = s.clone();
        let mut out = Vec::new();
        while let Some(start) = unvisited.first() {
            let comp = self.reach_within(start, &unvisited);
            unvisited.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices of `allowed` reachable from `start` inside `G[allowed]`.
    pub fn reach_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = self.empty_set();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let mut next = self.adj[u].intersection(allowed);
            next.difference_with(&seen);
            for w in next.iter() {
                seen.insert(w);
                stack.push(w);
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reach_within(0, &self.vertex_set()).len() == self.n()
    }

    pub fn is_connected_within(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach_within(v, s).len() == s.len(),
        }
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter().all(|v| self.adj[v].intersection_count(s) + 1 == k)
    }

    /// A BFS-shortest `(X, Y)`-path: one endpoint in `X`, the other in `Y`, no
    /// internal vertex in `X ∪ Y`. `None` when no such path exists.
    pub fn shortest_xy_path(&self, x: &VertexSet, y: &VertexSet) -> Option<Path> {
        self.shortest_xy_path_within(x, y, &self.vertex_set())
    }

    /// As [`Graph::shortest_xy_path`], restricted to `G[allowed]`.
    pub fn shortest_xy_path_within(&self, x: &VertexSet, y: &VertexSet, allowed: &VertexSet) -> Option<Path> {
        let x = x.intersection(allowed);
        let y = y.intersection(allowed);
        if let Some(v) = x.intersection(&y).first() {
            return Some(Path::trusted(self, vec![v]));
        }
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = x.clone();
        let mut queue: VecDeque<usize> = x.iter().collect();
        let blocked = x.union(&y);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if seen.contains(w) || !allowed.contains(w) {
                    continue;
                }
                seen.insert(w);
                parent[w] = u;
                if y.contains(w) {
                    let mut vs = vec![w];
                    let mut cur = u;
                    while parent[cur] != usize::MAX {
                        vs.push(cur);
                        cur = parent[cur];
                    }
                    vs.push(cur);
                    vs.reverse();
                    return Some(Path::trusted(self, vs));
                }
                if !blocked.contains(w) {
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Chordality via maximum cardinality search and a perfect elimination
    /// ordering check.
    pub fn is_chordal(&self) -> bool {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = vec![false; n];
        // order[i] = i-th vertex picked by MCS; the reverse is a PEO iff chordal.
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered[v])
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("unnumbered vertex remains");
            numbered[v] = true;
            order.push(v);
            for w in self.adj[v].iter() {
                if !numbered[w] {
                    weight[w] += 1;
                }
            }
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // For each v, its earlier neighbours must form a clique; it suffices to
        // check that they are all adjacent to the latest of them.
        for &v in &order {
            let earlier: Vec<usize> = self.adj[v].iter().filter(|&w| pos[w] < pos[v]).collect();
            if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
                if earlier.iter().any(|&w| w != parent && !self.has_edge(w, parent)) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// A line graph and the edge of the root graph behind each vertex.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    pub edges: Vec<(usize, usize)>,
}

impl LineGraph {
    /// True when the root graph was edgeless, so the line graph is the null graph.
    pub fn is_null(&self) -> bool {
        self.edges.is_empty()
    }
}

/// An ordered sequence of distinct vertices, consecutive ones adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<usize>,
    induced: bool,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path> {
        if vertices.is_empty() {
            return Err(Error::param("a path needs at least one vertex"));
        }
        let mut seen = g.empty_set();
        for &v in &vertices {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::param(format!("vertex {v} repeats on the path")));
            }
        }
        if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::param(format!(
                "path vertices {} and {} are not adjacent",
                w[0], w[1]
            )));
        }
        Ok(Path::trusted(g, vertices))
    }

    /// Builds a path already known to be valid, computing the induced flag.
    pub(crate) fn trusted(g: &Graph, vertices: Vec<usize>) -> Path {
        let induced = is_induced_path(g, &vertices);
        Path { vertices, induced }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn is_induced(&self) -> bool {
        self.induced
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of edges, `len() - 1`.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().expect("paths are non-empty"))
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_in(n, self.vertices.iter().copied())
    }
}

/// True iff `vs` are distinct, consecutive ones adjacent, and no other pair adjacent.
pub fn is_induced_path(g: &Graph, vs: &[usize]) -> bool {
    let set = VertexSet::from_iter_in(g.n(), vs.iter().copied());
    if set.len() != vs.len() {
        return false;
    }
    vs.iter().enumerate().all(|(i, &v)| {
        let expected = usize::from(i > 0) + usize::from(i + 1 < vs.len());
        g.neighbors(v).intersection_count(&set) == expected && (i == 0 || g.has_edge(vs[i - 1], v))
    })
}

/// True iff `vs` (length ≥ 3) is an induced cycle in cyclic order.
pub fn is_induced_cycle(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    if k < 3 {
        return false;
    }
    let set = VertexSet::from_iter_in(g.n(), vs.iter().copied());
    set.len() == k
        && vs
            .iter()
            .enumerate()
            .all(|(i, &v)| g.neighbors(v).intersection_count(&set) == 2 && g.has_edge(v, vs[(i + 1) % k]))
}

/// A map from the vertices of a pattern graph `H` to branch sets in a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

/// First reason a [`MinorModel`] fails to certify an induced minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorViolation {
    WrongArity { expected: usize, found: usize },
    EmptyBranchSet(usize),
    VertexOutOfRange { branch: usize, vertex: usize },
    Disjointness { vertex: usize, first: usize, second: usize },
    Disconnected(usize),
    MissingEdge(usize, usize),
    ExtraEdge(usize, usize),
}

impl fmt::Display for MinorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorViolation::WrongArity { expected, found } => {
                write!(f, "model has {found} branch sets, pattern has {expected} vertices")
            }
            MinorViolation::EmptyBranchSet(i) => write!(f, "branch set {i} is empty"),
            MinorViolation::VertexOutOfRange { branch, vertex } => {
                write!(f, "branch set {branch} names vertex {vertex} outside the host")
            }
            MinorViolation::Disjointness { vertex, first, second } => {
                write!(
                    f,
                    "disjointness: vertex {vertex} lies in branch sets {first} and {second}"
                )
            }
            MinorViolation::Disconnected(i) => write!(f, "branch set {i} does not induce a connected subgraph"),
            MinorViolation::MissingEdge(a, b) => {
                write!(f, "pattern edge {a}-{b} has no host edge between its branch sets")
            }
            MinorViolation::ExtraEdge(a, b) => {
                write!(
                    f,
                    "branch sets {a} and {b} are joined by a host edge but {a}{b} is not a pattern edge"
                )
            }
        }
    }
}

/// Checks that `model` witnesses `h` as an induced minor of `g`.
pub fn verify_induced_minor_model(g: &Graph, h: &Graph, model: &MinorModel) -> std::result::Result<(), MinorViolation> {
    let sets = &model.branch_sets;
    if sets.len() != h.n() {
        return Err(MinorViolation::WrongArity {
            expected: h.n(),
            found: sets.len(),
        });
    }
    let mut owner = vec![usize::MAX; g.n()];
    let mut bitsets = Vec::with_capacity(sets.len());
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return Err(MinorViolation::EmptyBranchSet(i));
        }
        for &v in set {
            if v >= g.n() {
                return Err(MinorViolation::VertexOutOfRange { branch: i, vertex: v });
            }
            if owner[v] != usize::MAX && owner[v] != i {
                return Err(MinorViolation::Disjointness {
                    vertex: v,
                    first: owner[v],
                    second: i,
                });
            }
            owner[v] = i;
        }
        bitsets.push(g.set_of(set.iter().copied()));
    }
    for (i, s) in bitsets.iter().enumerate() {
        if !g.is_connected_within(s) {
            return Err(MinorViolation::Disconnected(i));
        }
    }
    let neighborhoods: Vec<VertexSet> = bitsets.iter().map(|s| g.open_neighborhood(s)).collect();
    for (a, around) in neighborhoods.iter().enumerate() {
        for (b, other) in bitsets.iter().enumerate().skip(a + 1) {
            let touching = !around.is_disjoint(other);
            match (h.has_edge(a, b), touching) {
                (true, false) => return Err(MinorViolation::MissingEdge(a, b)),
                (false, true) => return Err(MinorViolation::ExtraEdge(a, b)),
                _ => {}
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_graph_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, Graph::cycle(4).unwrap());
        assert!(c4.is_bipartite());
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
    }

    #[test]
    fn make_graph_dedups_and_rejects() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn union_and_join() {
        let k1 = Graph::empty(1);
        let two_k1 = k1.disjoint_union(&k1);
        assert_eq!((two_k1.n(), two_k1.m()), (2, 0));
        let p3 = k1.join(&two_k1);
        assert_eq!(p3.m(), 2);
        assert_eq!(p3.degree(0), 2);
        let c4 = two_k1.join(&two_k1);
        assert_eq!(c4.m(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert!(!c4.has_edge(0, 1) && !c4.has_edge(2, 3));
    }

    #[test]
    fn line_graph_examples() {
        let lp4 = Graph::path(4).line_graph();
        assert_eq!(lp4.graph, Graph::path(3));
        let lk3 = Graph::complete(3).line_graph();
        assert_eq!(lk3.graph, Graph::complete(3));
        let lclaw = Graph::star(3).line_graph();
        assert_eq!(lclaw.graph, Graph::complete(3));
        assert_eq!(lclaw.edges, vec![(0, 1), (0, 2), (0, 3)]);
        assert!(Graph::empty(3).line_graph().is_null());
    }

    #[test]
    fn neighborhood_components_paths() {
        let p3 = Graph::path(3);
        assert_eq!(p3.closed_neighborhood(&p3.set_of([1])).len(), 3);
        let comps = Graph::empty(2).components();
        assert_eq!(
            comps.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        let p5 = Graph::path(5);
        let path = p5.shortest_xy_path(&p5.set_of([0]), &p5.set_of([4])).unwrap();
        assert_eq!(path.vertices(), &[0, 1, 2, 3, 4]);
        assert_eq!(path.length(), 4);
        assert!(path.is_induced());
        let two = Graph::empty(2);
        assert!(two.shortest_xy_path(&two.set_of([0]), &two.set_of([1])).is_none());
    }

    #[test]
    fn xy_path_has_no_internal_vertex_in_x_or_y() {
        // 0-1-2-3 with X = {0, 1}: the path must start at 1.
        let g = Graph::path(4);
        let p = g.shortest_xy_path(&g.set_of([0, 1]), &g.set_of([3])).unwrap();
        assert_eq!(p.vertices(), &[1, 2, 3]);
    }

    #[test]
    fn path_validation() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(Path::new(&c4, vec![0, 1, 2]).unwrap().is_induced());
        assert!(!Path::new(&c4, vec![0, 1, 2, 3]).unwrap().is_induced());
        assert!(Path::new(&c4, vec![0, 2]).is_err());
        assert!(Path::new(&c4, vec![0, 1, 0]).is_err());
    }

    #[test]
    fn chordality() {
        assert!(Graph::complete(5).is_chordal());
        assert!(Graph::path(6).is_chordal());
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        assert!(!Graph::cycle(7).unwrap().is_chordal());
        // Two triangles sharing an edge.
        assert!(Graph::new(4, &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)])
            .unwrap()
            .is_chordal());
    }

    #[test]
    fn minor_model_checks() {
        let g = Graph::cycle(5).unwrap();
        let identity = MinorModel {
            branch_sets: (0..5).map(|v| vec![v]).collect(),
        };
        assert_eq!(verify_induced_minor_model(&g, &g, &identity), Ok(()));
        // Contract 0-1 and 2-3 in C5: a triangle.
        let tri = MinorModel {
            branch_sets: vec![vec![0, 1], vec![2, 3], vec![4]],
        };
        assert_eq!(verify_induced_minor_model(&g, &Graph::complete(3), &tri), Ok(()));
        let overlapping = MinorModel {
            branch_sets: vec![vec![0, 1], vec![1, 2], vec![4]],
        };
        assert!(matches!(
            verify_induced_minor_model(&g, &Graph::complete(3), &overlapping),
            Err(MinorViolation::Disjointness { vertex: 1, .. })
        ));
        let disconnected = MinorModel {
            branch_sets: vec![vec![0, 2], vec![1], vec![3]],
        };
        assert_eq!(
            verify_induced_minor_model(&g, &Graph::complete(3), &disconnected),
            Err(MinorViolation::Disconnected(0))
        );
        // 0 and 2 are non-adjacent in C5 but K2 demands an edge.
        let missing = MinorModel {
            branch_sets: vec![vec![0], vec![2]],
        };
        assert_eq!(
            verify_induced_minor_model(&g, &Graph::complete(2), &missing),
            Err(MinorViolation::MissingEdge(0, 1))
        );
    }
}
