//! Forbidden induced structures and their certificates, exact pattern search,
//! and the combinatorics of a vertex's neighbours along an induced path.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Budget, Counter, Error, Result};
use crate::generators;
use crate::graph::{is_induced_cycle, Graph, Path};
use crate::vertex_set::VertexSet;
use crate::Outcome;

/// The graph a certificate exhibits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params")]
pub enum PatternKind {
    /// `K_{1,d}`; pattern vertex 0 is the centre.
    #[serde(rename = "star")]
    Star { d: usize },
    /// `P_s` on `s` vertices, in path order.
    #[serde(rename = "path")]
    Path { s: usize },
    /// Induced cycle on `len` vertices, in cyclic order.
    #[serde(rename = "cycle")]
    Cycle { len: usize },
    /// `S_{p,p,p}` in the vertex order of [`generators::sp`].
    #[serde(rename = "S_p")]
    S { p: usize },
    /// `T_{p,p,p}` in the vertex order of [`generators::tp`].
    #[serde(rename = "T_p")]
    T { p: usize },
    /// `k` disjoint copies of `S_p`.
    #[serde(rename = "kS_p")]
    KS { k: usize, p: usize },
    /// `k` disjoint copies of `T_p`.
    #[serde(rename = "kT_p")]
    KT { k: usize, p: usize },
}

impl PatternKind {
    pub fn pattern(&self) -> Result<Graph> {
        Ok(match *self {
            PatternKind::Star { d } => Graph::star(d),
            PatternKind::Path { s } => Graph::path(s),
            PatternKind::Cycle { len } => Graph::cycle(len)?,
            PatternKind::S { p } => generators::sp(p)?,
            PatternKind::T { p } => generators::tp(p)?,
            PatternKind::KS { k, p } => copies(&generators::sp(p)?, k)?,
            PatternKind::KT { k, p } => copies(&generators::tp(p)?, k)?,
        })
    }

    /// Size order used to prefer smaller certificates.
    pub fn rank(&self) -> (u8, usize) {
        match *self {
            PatternKind::Star { d } => (0, d),
            PatternKind::Path { s } => (1, s),
            PatternKind::Cycle { len } => (1, len),
            PatternKind::S { p } | PatternKind::T { p } => (2, p),
            PatternKind::KS { k, p } | PatternKind::KT { k, p } => (3, k * p),
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Star { d } => write!(f, "K_(1,{d})"),
            PatternKind::Path { s } => write!(f, "P_{s}"),
            PatternKind::Cycle { len } => write!(f, "C_{len}"),
            PatternKind::S { p } => write!(f, "S_{p}"),
            PatternKind::T { p } => write!(f, "T_{p}"),
            PatternKind::KS { k, p } => write!(f, "{k}S_{p}"),
            PatternKind::KT { k, p } => write!(f, "{k}T_{p}"),
        }
    }
}

fn copies(h: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::param("at least one copy is needed"));
    }
    Ok((1..k).fold(h.clone(), |acc, _| acc.disjoint_union(h)))
}

/// An induced copy of a forbidden graph: pattern vertex `i` sits at
/// `embedding[i]` in the host. Only constructed after validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub kind: PatternKind,
    pub embedding: Vec<usize>,
    pub validated: bool,
}

impl Certificate {
    /// Validates `embedding` against `g` and wraps it; an embedding that does
    /// not reproduce the pattern is an internal error of the caller.
    pub fn new(g: &Graph, kind: PatternKind, embedding: Vec<usize>) -> Result<Certificate> {
        let cert = Certificate {
            kind,
            embedding,
            validated: true,
        };
        if !cert.revalidate(g)? {
            return Err(Error::internal(format!(
                "constructed {kind} certificate {:?} is not an induced embedding",
                cert.embedding
            )));
        }
        Ok(cert)
    }

    pub fn pattern(&self) -> Result<Graph> {
        self.kind.pattern()
    }

    /// Re-checks every pattern vertex pair under the embedding.
    pub fn revalidate(&self, g: &Graph) -> Result<bool> {
        let h = self.kind.pattern()?;
        Ok(is_induced_embedding(g, &h, &self.embedding))
    }

    /// The same certificate with host vertices renamed by `map`.
    pub fn relabel(&self, map: &[usize]) -> Certificate {
        Certificate {
            kind: self.kind,
            embedding: self.embedding.iter().map(|&v| map[v]).collect(),
            validated: self.validated,
        }
    }
}

/// True iff `emb` is injective into `g` and `uv ∈ E(h) ⇔ emb(u)emb(v) ∈ E(g)`.
pub fn is_induced_embedding(g: &Graph, h: &Graph, emb: &[usize]) -> bool {
    if emb.len() != h.n() || emb.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let image = g.set_of(emb.iter().copied());
    if image.len() != emb.len() {
        return false;
    }
    (0..h.n()).all(|a| (a + 1..h.n()).all(|b| h.has_edge(a, b) == g.has_edge(emb[a], emb[b])))
}

/// Exhaustive search for an induced copy of `h` in `g`.
pub fn find_induced_embedding(g: &Graph, h: &Graph, budget: Budget) -> Result<Option<Vec<usize>>> {
    if h.n() > g.n() {
        return Ok(None);
    }
    if h.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    // Map pattern vertices in an order where each one (after the first of its
    // component) has an earlier neighbour, so candidate sets stay small.
    let mut order = Vec::with_capacity(h.n());
    let mut placed = h.empty_set();
    while order.len() < h.n() {
        let root = (0..h.n())
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed.insert(root);
        order.push(root);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            for w in h.neighbors(u).iter() {
                if placed.insert(w) {
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let counter = budget.counter("induced subgraph search");
    let mut image = vec![usize::MAX; h.n()];
    let mut used = g.empty_set();
    if embed_rec(g, h, &order, 0, &mut image, &mut used, &counter)? {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

fn embed_rec(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    k: usize,
    image: &mut [usize],
    used: &mut VertexSet,
    counter: &Counter,
) -> Result<bool> {
    if k == order.len() {
        return Ok(true);
    }
    counter.tick()?;
    let a = order[k];
    let mut cand = g.vertex_set().difference(used);
    for &b in &order[..k] {
        if h.has_edge(a, b) {
            cand.intersect_with(g.neighbors(image[b]));
        } else {
            cand.difference_with(g.neighbors(image[b]));
        }
    }
    let need = h.degree(a);
    for x in cand.iter() {
        if g.degree(x) < need {
            continue;
        }
        image[a] = x;
        used.insert(x);
        if embed_rec(g, h, order, k + 1, image, used, counter)? {
            return Ok(true);
        }
        used.remove(x);
    }
    image[a] = usize::MAX;
    Ok(false)
}

/// Finds a pattern of `kind` by generic embedding search.
pub fn find_pattern(g: &Graph, kind: PatternKind, budget: Budget) -> Result<Option<Certificate>> {
    let h = kind.pattern()?;
    match find_induced_embedding(g, &h, budget)? {
        Some(emb) => Ok(Some(Certificate::new(g, kind, emb)?)),
        None => Ok(None),
    }
}

/// An independent set of exactly `k` vertices inside `s`, if one exists.
pub fn independent_set_of_size(g: &Graph, s: &VertexSet, k: usize, budget: Budget) -> Result<Option<Vec<usize>>> {
    let counter = budget.counter("independent set search");
    let mut chosen = Vec::with_capacity(k);
    fn rec(g: &Graph, cand: VertexSet, k: usize, chosen: &mut Vec<usize>, counter: &Counter) -> Result<bool> {
        if chosen.len() == k {
            return Ok(true);
        }
        counter.tick()?;
        if cand.len() + chosen.len() < k {
            return Ok(false);
        }
        let mut rest = cand;
        // Branch on vertices in increasing degree; a vertex left out of every
        // branch is excluded afterwards.
        while rest.len() + chosen.len() >= k {
            let Some(v) = rest
                .iter()
                .min_by_key(|&v| (g.neighbors(v).intersection_count(&rest), v))
            else {
                break;
            };
            rest.remove(v);
            let next = rest.difference(g.neighbors(v));
            chosen.push(v);
            if rec(g, next, k, chosen, counter)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    g.check_set(s)?;
    if rec(g, s.clone(), k, &mut chosen, &counter)? {
        chosen.sort_unstable();
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

/// An induced `K_{1,d}`: the first vertex (by index) whose neighbourhood has
/// an independent set of size `d`, with `d` such neighbours.
pub fn find_induced_star(g: &Graph, d: usize, budget: Budget) -> Result<Option<Certificate>> {
    if d == 0 {
        return Err(Error::param("stars need d >= 1"));
    }
    for v in 0..g.n() {
        if g.degree(v) < d {
            continue;
        }
        if let Some(leaves) = independent_set_of_size(g, g.neighbors(v), d, budget)? {
            return Ok(Some(star_certificate(g, v, &leaves)?));
        }
    }
    Ok(None)
}

pub(crate) fn star_certificate(g: &Graph, centre: usize, leaves: &[usize]) -> Result<Certificate> {
    let mut emb = vec![centre];
    emb.extend_from_slice(leaves);
    Certificate::new(g, PatternKind::Star { d: leaves.len() }, emb)
}

pub(crate) fn path_certificate(g: &Graph, vertices: Vec<usize>) -> Result<Certificate> {
    Certificate::new(g, PatternKind::Path { s: vertices.len() }, vertices)
}

pub(crate) fn cycle_certificate(g: &Graph, vertices: Vec<usize>) -> Result<Certificate> {
    Certificate::new(g, PatternKind::Cycle { len: vertices.len() }, vertices)
}

/// An induced path on exactly `len` vertices, if `g` has one on at least `len`.
pub fn find_induced_path_geq(g: &Graph, len: usize, budget: Budget) -> Result<Option<Path>> {
    find_induced_path_geq_within(g, &g.vertex_set(), len, budget)
}

/// As [`find_induced_path_geq`], inside `G[allowed]`.
pub fn find_induced_path_geq_within(
    g: &Graph,
    allowed: &VertexSet,
    len: usize,
    budget: Budget,
) -> Result<Option<Path>> {
    if len == 0 {
        return Err(Error::param("path length must be at least 1"));
    }
    g.check_set(allowed)?;
    if allowed.len() < len {
        return Ok(None);
    }
    let counter = budget.counter("induced path search");
    // Large components first; a path lives inside one component.
    let mut comps = g.components_within(allowed);
    comps.retain(|c| c.len() >= len);
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    for comp in comps {
        let mut starts: Vec<usize> = comp.iter().collect();
        starts.sort_by_key(|&v| (g.neighbors(v).intersection_count(&comp), v));
        for s in starts {
            let mut path = vec![s];
            let blocked = g.empty_set();
            if extend_path(g, &comp, &mut path, blocked, len, &counter)? {
                return Ok(Some(Path::trusted(g, path)));
            }
        }
    }
    Ok(None)
}

/// `blocked` is `N[v_1..v_{k-1}]`; the next vertex must avoid it.
fn extend_path(
    g: &Graph,
    allowed: &VertexSet,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    len: usize,
    counter: &Counter,
) -> Result<bool> {
    if path.len() == len {
        return Ok(true);
    }
    counter.tick()?;
    let last = *path.last().expect("paths are non-empty");
    let mut free = allowed.difference(&blocked);
    free.remove(last);
    for &v in path.iter() {
        free.remove(v);
    }
    let cand = g.neighbors(last).intersection(&free);
    if cand.is_empty() {
        return Ok(false);
    }
    // Everything the path can still reach must fit the missing vertices.
    let mut region = free.clone();
    region.difference_with(g.neighbors(last));
    region.union_with(&cand);
    let mut reach_from = region.clone();
    reach_from.insert(last);
    if g.reach_within(last, &reach_from).len() - 1 < len - path.len() {
        return Ok(false);
    }
    let mut next_blocked = blocked;
    next_blocked.union_with(g.neighbors(last));
    next_blocked.insert(last);
    let mut order: Vec<usize> = cand.iter().collect();
    order.sort_by_key(|&v| (g.neighbors(v).intersection_count(&free), v));
    for v in order {
        path.push(v);
        if extend_path(g, allowed, path, next_blocked.clone(), len, counter)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// An induced cycle on at least `min_len` vertices, in cyclic order.
pub fn find_long_induced_cycle(g: &Graph, min_len: usize, budget: Budget) -> Result<Option<Vec<usize>>> {
    find_long_induced_cycle_within(g, &g.vertex_set(), min_len, budget)
}

pub fn find_long_induced_cycle_within(
    g: &Graph,
    allowed: &VertexSet,
    min_len: usize,
    budget: Budget,
) -> Result<Option<Vec<usize>>> {
    if min_len < 3 {
        return Err(Error::param(format!(
            "cycles have at least 3 vertices, asked for {min_len}"
        )));
    }
    g.check_set(allowed)?;
    let counter = budget.counter("induced cycle search");
    // The cycle's smallest vertex is `s`; only larger vertices follow it.
    for s in allowed.iter() {
        let mut region = allowed.clone();
        for u in 0..=s {
            region.remove(u);
        }
        region.insert(s);
        let comp = g.reach_within(s, &region);
        if comp.len() < min_len {
            continue;
        }
        for v2 in g.neighbors(s).intersection(&comp).iter().filter(|&v| v > s) {
            let mut path = vec![s, v2];
            if let Some(c) = close_cycle(g, &comp, &mut path, min_len, &counter)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

fn close_cycle(
    g: &Graph,
    region: &VertexSet,
    path: &mut Vec<usize>,
    min_len: usize,
    counter: &Counter,
) -> Result<Option<Vec<usize>>> {
    counter.tick()?;
    let s = path[0];
    let last = *path.last().expect("path is non-empty");
    // New vertex: adjacent to `last`, not adjacent to v_2..v_{k-1}, not on the path.
    let mut blocked = g.empty_set();
    for &v in &path[1..path.len() - 1] {
        blocked.union_with(g.neighbors(v));
    }
    for &v in path.iter() {
        blocked.insert(v);
    }
    let cand = g.neighbors(last).intersection(region).difference(&blocked);
    let mut extend = Vec::new();
    for w in cand.iter() {
        if g.has_edge(w, s) {
            if path.len() + 1 >= min_len {
                path.push(w);
                let cycle = path.clone();
                path.pop();
                return Ok(Some(cycle));
            }
        } else {
            extend.push(w);
        }
    }
    // The remaining region must still be able to hold the missing vertices.
    let mut free = region.difference(&blocked);
    free.insert(last);
    if g.reach_within(last, &free).len() + path.len() - 1 < min_len {
        return Ok(None);
    }
    for w in extend {
        path.push(w);
        if let Some(c) = close_cycle(g, region, path, min_len, counter)? {
            return Ok(Some(c));
        }
        path.pop();
    }
    Ok(None)
}

/// `N(v) ∩ V(P)`.
pub fn neighbors_on_path(g: &Graph, path: &[usize], v: usize) -> VertexSet {
    let on_path = g.set_of(path.iter().copied());
    g.neighbors(v).intersection(&on_path)
}

fn neighbor_positions(g: &Graph, path: &[usize], v: usize) -> Vec<usize> {
    path.iter()
        .enumerate()
        .filter(|&(_, &x)| g.has_edge(v, x))
        .map(|(i, _)| i)
        .collect()
}

/// Maximal subpaths of `path` whose interiors avoid `N(v)`; for a path the
/// stretches before the first and after the last neighbour count as
/// segments. With `cyclic`, `path` is an induced cycle in cyclic order.
pub fn segments_of_path(g: &Graph, path: &[usize], v: usize, cyclic: bool) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(v)?;
    if path.contains(&v) {
        return Err(Error::pre(format!("vertex {v} lies on the path")));
    }
    let pos = neighbor_positions(g, path, v);
    let need = if cyclic { 2 } else { 1 };
    if pos.len() < need {
        return Err(Error::pre(format!(
            "no segments defined: vertex {v} has {} neighbours on the {}",
            pos.len(),
            if cyclic { "cycle" } else { "path" }
        )));
    }
    if cyclic {
        let len = path.len();
        let segs = (0..pos.len())
            .map(|i| {
                let (a, b) = (pos[i], pos[(i + 1) % pos.len()]);
                let steps = (b + len - a) % len;
                (0..=steps).map(|k| path[(a + k) % len]).collect()
            })
            .collect();
        return Ok(segs);
    }
    if path.len() == 1 {
        return Ok(vec![path.to_vec()]);
    }
    let mut cuts = vec![0];
    cuts.extend(pos.iter().copied().filter(|&p| p != 0 && p != path.len() - 1));
    cuts.push(path.len() - 1);
    Ok(cuts.windows(2).map(|w| path[w[0]..=w[1]].to_vec()).collect())
}

/// A segment of `path` with at least `p - 1` vertices non-adjacent to `v`,
/// or a `K_{1,d}` with centre `v` when `v` touches each of the `d` blocks
/// `Q_i` (positions `(i-1)p .. ip-2`). Requires `|P| >= dp`.
pub fn long_segment(g: &Graph, path: &[usize], v: usize, d: usize, p: usize) -> Result<Outcome<Vec<usize>>> {
    if d == 0 || p == 0 {
        return Err(Error::param("d and p must be positive"));
    }
    if path.len() < d * p {
        return Err(Error::pre(format!(
            "path has {} vertices, needs at least d*p = {}",
            path.len(),
            d * p
        )));
    }
    let block_hit = |i: usize| -> Option<usize> {
        let lo = (i - 1) * p;
        let hi = i * p - 1; // exclusive
        (lo..hi).map(|k| path[k]).find(|&x| g.has_edge(v, x))
    };
    let hits: Vec<Option<usize>> = (1..=d).map(block_hit).collect();
    if let Some(leaves) = hits.iter().copied().collect::<Option<Vec<usize>>>() {
        return Ok(Outcome::Certificate(star_certificate(g, v, &leaves)?));
    }
    let j = hits.iter().position(Option::is_none).expect("some block is free") + 1;
    if neighbor_positions(g, path, v).is_empty() {
        return Ok(Outcome::Done(path.to_vec()));
    }
    let anchor = (j - 1) * p;
    let segments = segments_of_path(g, path, v, false)?;
    // The free block lies inside the interior (or an end stretch) of one segment.
    let mut offset = 0;
    for seg in segments {
        let end = offset + seg.len() - 1;
        let inside = if p == 1 {
            anchor >= offset && anchor <= end
        } else {
            anchor >= offset && anchor + p - 2 <= end
        };
        if inside {
            return Ok(Outcome::Done(seg));
        }
        offset = end;
    }
    Err(Error::internal("free block not inside any segment"))
}

/// The shortest subpath `P_v` of `path` holding all of `N(v) ∩ V(P)`, as
/// positions `(first, last)`. When `P_v` has more than `2(d-1)(q-2)` vertices
/// the answer is an induced cycle on at least `q` vertices through `v` and a
/// neighbour-free stretch of the path, or (if `v` has too many neighbours) a
/// `K_{1,d}` centred at `v`.
pub fn path_interval(g: &Graph, path: &[usize], v: usize, q: usize, d: usize) -> Result<Outcome<(usize, usize)>> {
    if d < 2 {
        return Err(Error::param(format!("path intervals need d >= 2, got {d}")));
    }
    if q < 3 {
        return Err(Error::param(format!("path intervals need q >= 3, got {q}")));
    }
    let pos = neighbor_positions(g, path, v);
    let (Some(&first), Some(&last)) = (pos.first(), pos.last()) else {
        return Err(Error::pre(format!("vertex {v} has no neighbour on the path")));
    };
    let limit = 2 * (d - 1) * (q - 2);
    if last - first < limit {
        return Ok(Outcome::Done((first, last)));
    }
    // A neighbour-free gap of >= q-1 vertices (ends included) closes a long cycle.
    for w in pos.windows(2) {
        if w[1] - w[0] + 1 >= q - 1 {
            let mut cycle = vec![v];
            cycle.extend_from_slice(&path[w[0]..=w[1]]);
            return Ok(Outcome::Certificate(cycle_certificate(g, cycle)?));
        }
    }
    // Otherwise v has at least 2d-1 neighbours; d of them share a parity.
    star_from_many_neighbors(g, path, v, &pos, d).map(Outcome::Certificate)
}

fn star_from_many_neighbors(g: &Graph, path: &[usize], v: usize, pos: &[usize], d: usize) -> Result<Certificate> {
    for parity in 0..2 {
        // Same-parity positions on an induced path are pairwise non-adjacent.
        let same: Vec<usize> = pos.iter().filter(|&&i| i % 2 == parity).map(|&i| path[i]).collect();
        if same.len() >= d {
            return star_certificate(g, v, &same[..d]);
        }
    }
    Err(Error::internal(format!(
        "vertex {v} has {} neighbours on the path, too few for a star of size {d}",
        pos.len()
    )))
}

/// `P_H` for a component `H` of `G - N[V(P)]` and `v ∈ N(V(H)) ∩ N(V(P))`:
/// `P_v` extended by up to `q + 1`-vertex flanks on both sides, returned as
/// positions `(first, last)`. If some `u ∈ N(V(H))` has no neighbour on
/// `P_H`, the result is an induced cycle through `v`, `H`, `u` and the flank.
pub fn component_attachment_interval(
    g: &Graph,
    path: &[usize],
    component: &VertexSet,
    v: usize,
    q: usize,
    d: usize,
) -> Result<Outcome<(usize, usize)>> {
    g.check_set(component)?;
    g.check_vertex(v)?;
    let boundary = g.open_neighborhood(component);
    if !boundary.contains(v) {
        return Err(Error::pre(format!("vertex {v} has no neighbour in the component")));
    }
    let (p1, p2) = match path_interval(g, path, v, q, d)? {
        Outcome::Done(iv) => iv,
        Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
    };
    let lo = p1.saturating_sub(q);
    let hi = if path.len() - p2 <= q { path.len() - 1 } else { p2 + q };
    let span = g.set_of(path[lo..=hi].iter().copied());
    for u in boundary.iter() {
        if !g.neighbors(u).is_disjoint(&span) {
            continue;
        }
        let pos = neighbor_positions(g, path, u);
        let left = pos.iter().copied().filter(|&i| i < lo).max();
        let right = pos.iter().copied().filter(|&i| i > hi).min();
        let stretch: Vec<usize> = match (left, right) {
            (Some(w), _) => path[w..=p1].to_vec(),
            (None, Some(w)) => path[p2..=w].iter().rev().copied().collect(),
            (None, None) => {
                return Err(Error::pre(format!("vertex {u} touches the component but not the path")));
            }
        };
        // R: a shortest u-v path through the component.
        let mut inner = component.clone();
        inner.insert(u);
        inner.insert(v);
        let r = g
            .shortest_xy_path_within(&g.set_of([v]), &g.set_of([u]), &inner)
            .ok_or_else(|| Error::internal("u and v are not linked through the component"))?;
        // Cycle v R u w .. p1 (back to v).
        let mut cycle = r.into_vertices();
        cycle.extend(stretch);
        if !is_induced_cycle(g, &cycle) {
            return Err(Error::internal(format!("attachment cycle {cycle:?} is not induced")));
        }
        return Ok(Outcome::Certificate(cycle_certificate(g, cycle)?));
    }
    Ok(Outcome::Done((lo, hi)))
}
