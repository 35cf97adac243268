//! Certifying decomposer for graphs with no induced `K_{1,d}`, `S_p` or `T_p`.
//!
//! Outline. A path `P⁰` on `dp` vertices is fixed and `X₀ = N[P⁰]` joins
//! every bag. Each component of `G - X₀` either has no induced `P_{6dq}`
//! (then the star/path peel applies) or gets a spine: an induced path grown
//! until no component of `G - N[spine]` holds an induced path on
//! `d(r+p-1)` vertices. The spine's consecutive `h`-vertex windows give a
//! path decomposition of `N[spine]` (the backbone), and every remaining
//! component hangs below the first window containing its neighbourhood.
//!
//! Long induced cycles far from `P⁰` are never left unexplained: whenever a
//! step fails because of one, the cycle and `P⁰` are turned into an `S_p`,
//! `T_p` or `K_{1,d}` certificate.

use rayon::prelude::*;

use crate::error::{Budget, Error, Result};
use crate::graph::{is_induced_cycle, is_induced_path, Graph};
use crate::patterns::{self, Certificate, PatternKind};
use crate::starpath;
use crate::tdecomp::{PathDecomposition, TreeDecomposition, Violation};
use crate::vertex_set::VertexSet;
use crate::Outcome;

/// `d`, `p` and the constants derived from them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassParams {
    pub d: usize,
    pub p: usize,
    /// `2d(p+1)`: cycles this long are certified.
    pub q: usize,
    /// `2(d-1)(q-2)`: span bound for a vertex's neighbours on the spine.
    pub r: usize,
    /// `2dq`: backbone window.
    pub h: usize,
    /// `dp`: length of `P⁰`.
    pub first_path: usize,
    /// `6dq`: components without an induced path this long are peeled.
    pub spine_path: usize,
    /// `d(r+p-1)`: hanging components are free of induced paths this long.
    pub component_path: usize,
    /// `20(d-1)^4(p+1)`.
    pub bound: usize,
}

fn product(factors: &[usize]) -> Option<usize> {
    factors.iter().try_fold(1usize, |acc, &x| acc.checked_mul(x))
}

impl ClassParams {
    pub fn new(d: usize, p: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::param(format!("star size d must be at least 2, got {d}")));
        }
        if p < 1 {
            return Err(Error::param(format!("claw leg length p must be at least 1, got {p}")));
        }
        let overflow = || Error::param(format!("derived constants for d = {d}, p = {p} overflow"));
        let q = product(&[2, d, p + 1]).ok_or_else(overflow)?;
        let r = product(&[2, d - 1, q - 2]).ok_or_else(overflow)?;
        let h = product(&[2, d, q]).ok_or_else(overflow)?;
        let first_path = product(&[d, p]).ok_or_else(overflow)?;
        let spine_path = product(&[6, d, q]).ok_or_else(overflow)?;
        let component_path = r
            .checked_add(p - 1)
            .and_then(|x| x.checked_mul(d))
            .ok_or_else(overflow)?;
        let bound = product(&[20, d - 1, d - 1, d - 1, d - 1, p + 1]).ok_or_else(overflow)?;
        Ok(ClassParams {
            d,
            p,
            q,
            r,
            h,
            first_path,
            spine_path,
            component_path,
            bound,
        })
    }

    /// `6(d-1)(k-1)(p+1) + 20(d-1)^4(p+1)`, the bound for `kS_p`/`kT_p`-free inputs.
    pub fn bound_k(&self, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(Error::param("k must be at least 1"));
        }
        product(&[6, self.d - 1, k - 1, self.p + 1])
            .and_then(|x| x.checked_add(self.bound))
            .ok_or_else(|| Error::param(format!("bound for k = {k} overflows")))
    }
}

/// The first induced `K_{1,d}`, `S_p` or `T_p`, in that order of preference.
fn find_forbidden(g: &Graph, params: &ClassParams, budget: Budget) -> Result<Option<Certificate>> {
    if let Some(c) = patterns::find_induced_star(g, params.d, budget)? {
        return Ok(Some(c));
    }
    for kind in [PatternKind::S { p: params.p }, PatternKind::T { p: params.p }] {
        if let Some(c) = patterns::find_pattern(g, kind, budget)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Checks class membership exactly, then runs [`construct`].
pub fn decompose(g: &Graph, d: usize, p: usize, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    let params = ClassParams::new(d, p)?;
    if let Some(c) = find_forbidden(g, &params, budget)? {
        return Ok(Outcome::Certificate(c));
    }
    construct(g, d, p, budget)
}

/// The construction without the upfront membership check; certificates are
/// produced only where the construction itself runs into one. A result over
/// the bound (possible only outside the class) falls back to exact search.
pub fn construct(g: &Graph, d: usize, p: usize, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    let params = ClassParams::new(d, p)?;
    let out = if d == 2 {
        construct_p3_free(g, budget)?
    } else {
        construct_components(g, &params, budget)?
    };
    let td = match out {
        Outcome::Done(td) => td,
        cert => return Ok(cert),
    };
    let alpha = td.independence_number(g, budget)?;
    if alpha > params.bound {
        return match find_forbidden(g, &params, budget)? {
            Some(c) => Ok(Outcome::Certificate(c)),
            None => Err(Error::internal(format!(
                "decomposition has independence number {alpha} above {} on a class member",
                params.bound
            ))),
        };
    }
    Ok(Outcome::Done(td))
}

/// `K_{1,2}`-free means `P₃`-free: every component is a clique.
fn construct_p3_free(g: &Graph, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    Ok(match starpath::peel(g, 2, 3, budget)? {
        Outcome::Certificate(c) if c.kind == (PatternKind::Path { s: 3 }) => {
            let e = &c.embedding;
            Outcome::Certificate(Certificate::new(g, PatternKind::Star { d: 2 }, vec![e[1], e[0], e[2]])?)
        }
        other => other,
    })
}

fn construct_components(g: &Graph, params: &ClassParams, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    let n = g.n();
    let mut parts = Vec::new();
    for comp in g.components() {
        let (gc, map) = g.induced_subgraph(&comp);
        match construct_connected(&gc, params, budget)? {
            Outcome::Done(td) => parts.push(td.relabel(&map, n)),
            Outcome::Certificate(c) => return Ok(Outcome::Certificate(c.relabel(&map))),
        }
    }
    Ok(Outcome::Done(match parts.len() {
        0 => TreeDecomposition::single_bag(g),
        1 => parts.pop().expect("one part"),
        _ => TreeDecomposition::merge_at_hub(n, parts, &VertexSet::new(n))?,
    }))
}

fn construct_connected(g0: &Graph, params: &ClassParams, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    let Some(p0) = patterns::find_induced_path_geq(g0, params.first_path, budget)? else {
        return starpath::peel(g0, params.d, params.first_path, budget);
    };
    let p0 = p0.into_vertices();
    let n = g0.n();
    let x0 = g0.closed_neighborhood(&g0.set_of(p0.iter().copied()));
    let results: Vec<Result<Outcome<TreeDecomposition>>> = g0
        .components_within(&x0.complement())
        .into_par_iter()
        .map(|dset| {
            let (gd, map) = g0.induced_subgraph(&dset);
            Ok(match decompose_spine_component(&gd, params, budget)? {
                Outcome::Done(td) => Outcome::Done(td.relabel(&map, n)),
                Outcome::Certificate(c) => Outcome::Certificate(c.relabel(&map)),
            })
        })
        .collect();
    let mut parts = Vec::with_capacity(results.len());
    for r in results {
        match r? {
            Outcome::Done(td) => parts.push(td),
            Outcome::Certificate(c) => return class_certificate(g0, &p0, c, params).map(Outcome::Certificate),
        }
    }
    let td = TreeDecomposition::merge_at_hub(n, parts, &x0)?.add_to_all_bags(&x0);
    Ok(Outcome::Done(td))
}

/// Stars, `S_p` and `T_p` pass through; a long cycle avoiding `N[P⁰]` is
/// converted. Anything else means a step broke its own guarantee.
fn class_certificate(g0: &Graph, p0: &[usize], c: Certificate, params: &ClassParams) -> Result<Certificate> {
    match c.kind {
        PatternKind::Star { .. } | PatternKind::S { .. } | PatternKind::T { .. } => Ok(c),
        PatternKind::Cycle { len } if len >= params.q => {
            certify_from_long_cycle(g0, p0, &c.embedding, params.d, params.p)
        }
        other => Err(Error::internal(format!(
            "construction produced an unexpected {other} certificate"
        ))),
    }
}

/// One component `D` of `G - X₀`; certificates are in `D`'s indices and may
/// be long cycles.
fn decompose_spine_component(gd: &Graph, params: &ClassParams, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    let Some(start) = patterns::find_induced_path_geq(gd, params.spine_path, budget)? else {
        return starpath::peel(gd, params.d, params.spine_path, budget);
    };
    let mut spine = greedy_extend(gd, start.into_vertices());
    'improve: loop {
        for h in hanging_components(gd, &spine) {
            let Some(f) = patterns::find_induced_path_geq_within(gd, &h, params.component_path, budget)? else {
                continue;
            };
            match improve_or_certify(gd, &spine, &h, f.vertices(), params)? {
                Outcome::Done(longer) => {
                    let longer = greedy_extend(gd, longer);
                    if longer.len() <= spine.len() {
                        return Err(Error::internal("spine improvement did not lengthen the spine"));
                    }
                    spine = longer;
                    continue 'improve;
                }
                Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
            }
        }
        break;
    }
    let bb = match build_backbone(gd, &spine, params.h)? {
        Outcome::Done(bb) => bb,
        Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
    };
    let mut td = bb.decomposition.as_tree().clone();
    for h in hanging_components(gd, &spine) {
        let node = match attach_index(gd, &bb, &h, params)? {
            Outcome::Done(i) => i,
            Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
        };
        let (gh, map) = gd.induced_subgraph(&h);
        let sub = match starpath::peel(&gh, params.d, params.component_path, budget)? {
            Outcome::Done(t) => t.relabel(&map, gd.n()),
            Outcome::Certificate(c) => return Ok(Outcome::Certificate(c.relabel(&map))),
        };
        let absorb = td.bag(node).clone();
        td = td.attach_subtree(gd, node, &sub, &absorb)?;
    }
    Ok(Outcome::Done(td))
}

/// Components of `G - N[V(spine)]`.
fn hanging_components(g: &Graph, spine: &[usize]) -> Vec<VertexSet> {
    let covered = g.closed_neighborhood(&g.set_of(spine.iter().copied()));
    g.components_within(&covered.complement())
}

/// Extends an induced path at both ends, lowest-index candidate first,
/// until neither end can grow.
pub fn greedy_extend(g: &Graph, mut path: Vec<usize>) -> Vec<usize> {
    if path.is_empty() {
        return path;
    }
    let mut on_path = g.set_of(path.iter().copied());
    for _ in 0..2 {
        loop {
            let last = *path.last().expect("non-empty");
            let next = g
                .neighbors(last)
                .iter()
                .find(|&w| !on_path.contains(w) && g.neighbors(w).intersection_count(&on_path) == 1);
            match next {
                Some(w) => {
                    path.push(w);
                    on_path.insert(w);
                }
                None => break,
            }
        }
        path.reverse();
    }
    path
}

/// The spine, its window and the path decomposition of `G[N[V(spine)]]`
/// with bags `N[v_i .. v_{i+h-1}]`.
#[derive(Clone, Debug)]
pub struct Backbone {
    pub spine: Vec<usize>,
    pub window: usize,
    pub decomposition: PathDecomposition,
}

impl Backbone {
    pub fn bags(&self) -> &[VertexSet] {
        self.decomposition.as_tree().bags()
    }
}

/// Builds the `h`-backbone of `spine` and validates it against
/// `G[N[V(spine)]]`. A failed axiom exposes an induced cycle through the
/// spine longer than any window, which is returned as a certificate.
pub fn build_backbone(g: &Graph, spine: &[usize], h: usize) -> Result<Outcome<Backbone>> {
    if h == 0 {
        return Err(Error::param("window must be positive"));
    }
    if spine.len() < h {
        return Err(Error::pre(format!(
            "spine has {} vertices, fewer than the window {h}",
            spine.len()
        )));
    }
    if !is_induced_path(g, spine) {
        return Err(Error::pre("spine is not an induced path"));
    }
    let m = spine.len();
    let bags: Vec<VertexSet> = (0..=m - h)
        .map(|i| g.closed_neighborhood(&g.set_of(spine[i..i + h].iter().copied())))
        .collect();
    let td = TreeDecomposition::path_of(g.n(), bags)?;
    let region = g.closed_neighborhood(&g.set_of(spine.iter().copied()));
    let (sub, map) = g.induced_subgraph(&region);
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        index[v] = i;
    }
    match td.relabel(&index, sub.n()).validate(&sub) {
        Ok(()) => Ok(Outcome::Done(Backbone {
            spine: spine.to_vec(),
            window: h,
            decomposition: PathDecomposition::new(td)?,
        })),
        Err(v) => {
            let cycle = cycle_from_violation(g, spine, &v, &map)?;
            Ok(Outcome::Certificate(patterns::cycle_certificate(g, cycle)?))
        }
    }
}

fn positions_of_neighbors(g: &Graph, path: &[usize], v: usize) -> Vec<usize> {
    (0..path.len()).filter(|&i| g.has_edge(v, path[i])).collect()
}

/// The induced cycle behind a backbone violation (`map` translates the
/// violation's vertices back to `g`).
fn cycle_from_violation(g: &Graph, spine: &[usize], v: &Violation, map: &[usize]) -> Result<Vec<usize>> {
    let cycle = match *v {
        // u's windows are not consecutive: a neighbour-free gap lies between two neighbours.
        Violation::DisconnectedTrace { vertex, .. } => {
            let u = map[vertex];
            let pos = positions_of_neighbors(g, spine, u);
            let (a, b) = pos
                .windows(2)
                .map(|w| (w[0], w[1]))
                .max_by_key(|&(a, b)| b - a)
                .ok_or_else(|| Error::internal("disconnected trace without two spine neighbours"))?;
            let mut cycle = vec![u];
            cycle.extend_from_slice(&spine[a..=b]);
            cycle
        }
        // No window sees both ends: the closest neighbour pair bounds a long stretch.
        Violation::EdgeUncovered(x, y) => {
            let (u, w) = (map[x], map[y]);
            let pu = positions_of_neighbors(g, spine, u);
            let pw = positions_of_neighbors(g, spine, w);
            let (a, b) = pu
                .iter()
                .flat_map(|&a| pw.iter().map(move |&b| (a, b)))
                .min_by_key(|&(a, b)| a.abs_diff(b))
                .ok_or_else(|| Error::internal("uncovered edge with an end off the spine neighbourhood"))?;
            if a <= b {
                let mut cycle = vec![u];
                cycle.extend_from_slice(&spine[a..=b]);
                cycle.push(w);
                cycle
            } else {
                let mut cycle = vec![w];
                cycle.extend_from_slice(&spine[b..=a]);
                cycle.push(u);
                cycle
            }
        }
        ref other => return Err(Error::internal(format!("backbone violates {}: {other}", other.axiom()))),
    };
    if !is_induced_cycle(g, &cycle) {
        return Err(Error::internal(format!(
            "extracted backbone cycle {cycle:?} is not induced"
        )));
    }
    Ok(cycle)
}

/// The smallest `i` with `N(V(H)) ⊆ β(b_i)`, for a component `H` of
/// `G - N[V(spine)]`. When no window fits, the attachment interval yields
/// a long induced cycle or a star instead.
pub fn attach_index(g: &Graph, bb: &Backbone, component: &VertexSet, params: &ClassParams) -> Result<Outcome<usize>> {
    g.check_set(component)?;
    let boundary = g.open_neighborhood(component);
    if let Some(i) = bb.bags().iter().position(|bag| boundary.is_subset(bag)) {
        return Ok(Outcome::Done(i));
    }
    let v = boundary
        .first()
        .ok_or_else(|| Error::pre("component has no neighbours; it is not attached to the spine"))?;
    match patterns::component_attachment_interval(g, &bb.spine, component, v, params.q, params.d)? {
        Outcome::Certificate(c) => Ok(Outcome::Certificate(c)),
        Outcome::Done((lo, hi)) => Err(Error::internal(format!(
            "attachment positions {lo}..={hi} fit no window of size {}",
            bb.window
        ))),
    }
}

/// `v`'s neighbouring endpoint of `seg`, then the segment away from it up
/// to (excluding) the next neighbour of `v`.
fn walk_from_neighbor(g: &Graph, v: usize, seg: &[usize]) -> Result<Vec<usize>> {
    let (&first, &last) = (
        seg.first().expect("segments are non-empty"),
        seg.last().expect("non-empty"),
    );
    let oriented: Vec<usize> = if g.has_edge(v, first) {
        seg.to_vec()
    } else if g.has_edge(v, last) {
        seg.iter().rev().copied().collect()
    } else {
        return Err(Error::internal(format!(
            "vertex {v} touches neither end of its segment"
        )));
    };
    let mut out = vec![oriented[0]];
    out.extend(oriented[1..].iter().copied().take_while(|&x| !g.has_edge(v, x)));
    Ok(out)
}

fn take_leg(leg: &[usize], p: usize) -> Result<&[usize]> {
    leg.get(..p)
        .ok_or_else(|| Error::internal(format!("leg {leg:?} is shorter than {p}")))
}

/// `S_p` with the given centre; legs run outward from the centre.
fn spider_s(g: &Graph, centre: usize, legs: [&[usize]; 3], p: usize) -> Result<Certificate> {
    let mut emb = vec![centre];
    for leg in legs {
        emb.extend_from_slice(take_leg(leg, p)?);
    }
    Certificate::new(g, PatternKind::S { p }, emb)
}

/// `T_p` whose triangle is the first vertex of each leg.
fn spider_t(g: &Graph, legs: [&[usize]; 3], p: usize) -> Result<Certificate> {
    let legs = [take_leg(legs[0], p)?, take_leg(legs[1], p)?, take_leg(legs[2], p)?];
    let mut emb: Vec<usize> = legs.iter().map(|l| l[0]).collect();
    for leg in legs {
        emb.extend_from_slice(&leg[1..]);
    }
    Certificate::new(g, PatternKind::T { p }, emb)
}

/// One improvement round. `long_path` is an induced path on at least
/// `d(r+p-1)` vertices inside `component`, a component of
/// `G - N[V(spine)]`. Returns a strictly longer induced path, or `S_p`,
/// `T_p`, `K_{1,d}` or a long induced cycle.
pub fn improve_or_certify(
    g: &Graph,
    spine: &[usize],
    component: &VertexSet,
    long_path: &[usize],
    params: &ClassParams,
) -> Result<Outcome<Vec<usize>>> {
    let ClassParams { d, p, q, r, .. } = *params;
    let m = spine.len();
    if m < 2 * (r + p) + 1 {
        return Err(Error::pre(format!(
            "spine has {m} vertices, needs at least {}",
            2 * (r + p) + 1
        )));
    }
    if !is_induced_path(g, spine) || !is_induced_path(g, long_path) {
        return Err(Error::pre("spine and long path must be induced paths"));
    }
    if long_path.len() < params.component_path {
        return Err(Error::pre(format!(
            "long path has {} vertices, needs {}",
            long_path.len(),
            params.component_path
        )));
    }
    let spine_set = g.set_of(spine.iter().copied());
    let f_set = g.set_of(long_path.iter().copied());
    if !f_set.is_subset(component) || !component.is_disjoint(&g.closed_neighborhood(&spine_set)) {
        return Err(Error::pre("long path must lie in a component away from the spine"));
    }
    // Q = w_0 .. w_l, shortest from the spine to F; w_1 sees the spine.
    let qpath = g
        .shortest_xy_path(&spine_set, &f_set)
        .ok_or_else(|| Error::pre("component is not connected to the spine"))?
        .into_vertices();
    let l = qpath.len() - 1;
    if l < 2 {
        return Err(Error::internal("component is adjacent to the spine"));
    }
    let w1 = qpath[1];
    let last_link = qpath[l - 1];
    // J: w_1 .. w_{l-1}, then into F along a segment free of w_{l-1}'s neighbours.
    let seg = match patterns::long_segment(g, long_path, last_link, d, r + p - 1)? {
        Outcome::Done(s) => s,
        Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
    };
    let mut j: Vec<usize> = qpath[1..l].to_vec();
    j.extend(walk_from_neighbor(g, last_link, &seg)?);
    if j.len() < r + p {
        return Err(Error::internal(format!(
            "path J has {} vertices, expected {}",
            j.len(),
            r + p
        )));
    }
    j.truncate(r + p);
    let (first, last) = match patterns::path_interval(g, spine, w1, q, d)? {
        Outcome::Done(iv) => iv,
        Outcome::Certificate(c) => return Ok(Outcome::Certificate(c)),
    };
    let (mid_lo, mid_hi) = (r + p, m - r - p - 1);
    let central = positions_of_neighbors(g, spine, w1)
        .into_iter()
        .any(|i| (mid_lo..=mid_hi).contains(&i));
    if central {
        // L ends at u, R starts at z, each on p + 1 vertices.
        let (u, z) = (first, last);
        if u < p || z + p >= m {
            return Err(Error::internal("neighbour interval of w_1 too close to a spine end"));
        }
        let left: Vec<usize> = (0..=p).map(|t| spine[u - t]).collect();
        let right: Vec<usize> = (0..=p).map(|t| spine[z + t]).collect();
        let cert = if u == z {
            spider_s(g, spine[u], [&left[1..], &right[1..], &j], p)?
        } else if z == u + 1 {
            spider_t(g, [&left, &right, &j], p)?
        } else {
            spider_s(g, w1, [&left, &right, &j[1..]], p)?
        };
        return Ok(Outcome::Certificate(cert));
    }
    // All of w_1's spine neighbours sit near one end; orient it first.
    let (oriented, z): (Vec<usize>, usize) = if last < mid_lo {
        (spine.to_vec(), last)
    } else if first > mid_hi {
        (spine.iter().rev().copied().collect(), m - 1 - first)
    } else {
        return Err(Error::internal("neighbours of w_1 near both spine ends"));
    };
    let mut longer: Vec<usize> = j.iter().rev().copied().collect();
    longer.extend_from_slice(&oriented[z..]);
    if !is_induced_path(g, &longer) {
        return Err(Error::internal("rerouted spine is not induced"));
    }
    Ok(Outcome::Done(longer))
}

/// Turns an induced cycle on at least `d(2p+2)` vertices that avoids
/// `N[V(path)]` into an `S_p`, `T_p` or `K_{1,d}`, using a shortest path
/// `z_0 .. z_k` from `path` to the cycle. `path` needs `dp` vertices.
pub fn certify_from_long_cycle(g: &Graph, path: &[usize], cycle: &[usize], d: usize, p: usize) -> Result<Certificate> {
    if d < 2 || p < 1 {
        return Err(Error::param(format!("need d >= 2 and p >= 1, got d = {d}, p = {p}")));
    }
    if path.len() < d * p {
        return Err(Error::pre(format!("path has {} vertices, needs {}", path.len(), d * p)));
    }
    let block = 2 * p + 2;
    if cycle.len() < d * block {
        return Err(Error::pre(format!(
            "cycle has {} vertices, needs {}",
            cycle.len(),
            d * block
        )));
    }
    if !is_induced_path(g, path) || !is_induced_cycle(g, cycle) {
        return Err(Error::pre("path and cycle must be induced"));
    }
    let path_set = g.set_of(path.iter().copied());
    let cycle_set = g.set_of(cycle.iter().copied());
    if !cycle_set.is_disjoint(&g.closed_neighborhood(&path_set)) {
        return Err(Error::pre("cycle meets the closed neighbourhood of the path"));
    }
    let zs = g
        .shortest_xy_path(&path_set, &cycle_set)
        .ok_or_else(|| Error::pre("path and cycle lie in different components"))?
        .into_vertices();
    let k = zs.len() - 1;
    let seg = match patterns::long_segment(g, path, zs[1], d, p)? {
        Outcome::Done(s) => s,
        Outcome::Certificate(c) => return Ok(c),
    };
    let tail = walk_from_neighbor(g, zs[1], &seg)?;
    // z_i, z_{i-1}, .., z_1, then into the segment.
    let leg_from = |i: usize| -> Vec<usize> {
        let mut leg: Vec<usize> = (1..=i).rev().map(|t| zs[t]).collect();
        leg.extend_from_slice(&tail);
        leg
    };
    let len = cycle.len();
    let at = |i: usize, back: bool, t: usize| {
        if back {
            cycle[(i + len - t) % len]
        } else {
            cycle[(i + t) % len]
        }
    };
    let hub = zs[k - 1];
    let on_cycle = positions_of_neighbors(g, cycle, hub);
    if let [j] = on_cycle[..] {
        let fwd: Vec<usize> = (1..=p).map(|t| at(j, false, t)).collect();
        let back: Vec<usize> = (1..=p).map(|t| at(j, true, t)).collect();
        return spider_s(g, cycle[j], [&fwd, &back, &leg_from(k - 1)], p);
    }
    // Blocks D_i = positions (i-1)(2p+2)+1 ..= i(2p+2)-1.
    let hits: Vec<Option<usize>> = (1..=d)
        .map(|i| {
            ((i - 1) * block + 1..i * block)
                .map(|t| cycle[t])
                .find(|&x| g.has_edge(hub, x))
        })
        .collect();
    if let Some(leaves) = hits.iter().copied().collect::<Option<Vec<usize>>>() {
        return patterns::star_certificate(g, hub, &leaves);
    }
    let free = hits.iter().position(Option::is_none).expect("some block is free");
    let inside = cycle[free * block + 1];
    let seg = patterns::segments_of_path(g, cycle, hub, true)?
        .into_iter()
        .find(|s| s.len() > 2 && s[1..s.len() - 1].contains(&inside))
        .ok_or_else(|| Error::internal("free block lies in no segment"))?;
    let from_a: Vec<usize> = seg.clone();
    let from_b: Vec<usize> = seg.iter().rev().copied().collect();
    if g.has_edge(seg[0], seg[seg.len() - 1]) {
        spider_t(g, [&from_a, &from_b, &leg_from(k - 1)], p)
    } else {
        spider_s(g, hub, [&from_a, &from_b, &leg_from(k - 2)], p)
    }
}

/// The decomposer for graphs with no induced `K_{1,d}`, `kS_p` or `kT_p`:
/// peels the closed neighbourhoods of one `S_p` and one `T_p` occurrence,
/// recurses with `k - 1`, and adds the peeled set to every bag.
pub fn decompose_k(g: &Graph, d: usize, p: usize, k: usize, budget: Budget) -> Result<Outcome<TreeDecomposition>> {
    let params = ClassParams::new(d, p)?;
    let bound = params.bound_k(k)?;
    if k == 1 {
        return decompose(g, d, p, budget);
    }
    if let Some(c) = patterns::find_induced_star(g, d, budget)? {
        return Ok(Outcome::Certificate(c));
    }
    let s_hit = patterns::find_pattern(g, PatternKind::S { p }, budget)?;
    let t_hit = patterns::find_pattern(g, PatternKind::T { p }, budget)?;
    if s_hit.is_none() && t_hit.is_none() {
        return decompose(g, d, p, budget);
    }
    let n = g.n();
    let mut peeled = VertexSet::new(n);
    for c in s_hit.iter().chain(t_hit.iter()) {
        peeled.union_with(&g.closed_neighborhood(&g.set_of(c.embedding.iter().copied())));
    }
    let peeled_alpha = crate::oracle::alpha_within(g, &peeled, budget)?;
    if peeled_alpha > 6 * (d - 1) * (p + 1) {
        return Err(Error::internal(format!(
            "peeled set has independence number {peeled_alpha} on a star-free graph"
        )));
    }
    let (rest, map) = g.remove_vertices(&peeled);
    let sub = if rest.n() == 0 {
        Outcome::Done(TreeDecomposition::single_bag(&rest))
    } else {
        decompose_k(&rest, d, p, k - 1, budget)?
    };
    match sub {
        Outcome::Done(td) => {
            let td = td.relabel(&map, n).add_to_all_bags(&peeled);
            let alpha = td.independence_number(g, budget)?;
            if alpha > bound {
                return Err(Error::internal(format!(
                    "decomposition has independence number {alpha} above {bound}"
                )));
            }
            Ok(Outcome::Done(td))
        }
        Outcome::Certificate(c) => {
            let c = c.relabel(&map);
            // The inner copies avoid N[ours], so one more copy joins them.
            let combined = match (c.kind, &s_hit, &t_hit) {
                (PatternKind::S { .. }, Some(ours), _) => Some((PatternKind::KS { k: 2, p }, ours)),
                (PatternKind::KS { k: j, .. }, Some(ours), _) => Some((PatternKind::KS { k: j + 1, p }, ours)),
                (PatternKind::T { .. }, _, Some(ours)) => Some((PatternKind::KT { k: 2, p }, ours)),
                (PatternKind::KT { k: j, .. }, _, Some(ours)) => Some((PatternKind::KT { k: j + 1, p }, ours)),
                _ => None,
            };
            Ok(Outcome::Certificate(match combined {
                Some((kind, ours)) => {
                    let mut emb = ours.embedding.clone();
                    emb.extend_from_slice(&c.embedding);
                    Certificate::new(g, kind, emb)?
                }
                None => c,
            }))
        }
    }
}
