//! Flowers, sun systems, auxiliary graphs and the search for bad sun systems.
//!
//! All vertex sets are in the numbering of the graph being searched; a sun
//! system found inside a larger graph is the induced subgraph on `F ∪ R`.

use std::fmt;
use std::ops::ControlFlow;

use crate::chordal::{check_chordal, maximal_cliques_within, InducedCycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{Combinations, VertexSet};

/// Cliques with a common vertex: the maximal cliques of `G[F]` together with
/// their intersection, the core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flower {
    petal_cliques: Vec<VertexSet>,
    core: VertexSet,
}

impl Flower {
    pub fn petal_cliques(&self) -> &[VertexSet] {
        &self.petal_cliques
    }

    pub fn core(&self) -> VertexSet {
        self.core
    }

    /// `P_i \ C` for every petal clique.
    pub fn petals(&self) -> Vec<VertexSet> {
        self.petal_cliques.iter().map(|&p| p - self.core).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        self.petal_cliques.iter().fold(VertexSet::EMPTY, |a, &p| a | p)
    }

    pub fn is_trivial(&self) -> bool {
        self.petal_cliques.len() <= 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowerRejection {
    Empty,
    /// Petal-clique indices whose intersection is already empty.
    EmptyCore(Vec<usize>),
}

impl fmt::Display for FlowerRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlowerRejection::Empty => f.write_str("empty flower"),
            FlowerRejection::EmptyCore(ix) => write!(f, "petal cliques {ix:?} have no common vertex"),
        }
    }
}

/// Decomposes `G[F]` into its maximal cliques and accepts when they share a
/// vertex. A nonempty total intersection makes the family Helly.
pub fn try_flower(g: &Graph, f: VertexSet) -> std::result::Result<Flower, FlowerRejection> {
    if f.is_empty() {
        return Err(FlowerRejection::Empty);
    }
    let cliques = maximal_cliques_within(g, f);
    let core = cliques.iter().fold(f, |a, &q| a & q);
    if core.is_empty() {
        // Shrink to an inclusion-minimal family with empty intersection.
        let mut keep: Vec<usize> = (0..cliques.len()).collect();
        let mut i = 0;
        while i < keep.len() {
            let without: Vec<usize> = keep.iter().copied().filter(|&j| j != keep[i]).collect();
            if without.iter().fold(f, |a, &j| a & cliques[j]).is_empty() {
                keep = without;
            } else {
                i += 1;
            }
        }
        return Err(FlowerRejection::EmptyCore(keep));
    }
    Ok(Flower { petal_cliques: cliques, core })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RayKind {
    /// `N(r) ⊆ C`.
    Intersecting,
    /// `N(r)` lies in exactly one petal clique and meets both the core and
    /// that clique's petal.
    SplitOn(usize),
    Other,
}

/// Classifies a ray by its neighbourhood inside the flower.
pub fn classify_ray(g: &Graph, flower: &Flower, r: usize) -> RayKind {
    let nr = g.adj(r) & flower.vertices();
    let core = flower.core;
    if nr.is_subset(core) {
        return RayKind::Intersecting;
    }
    let mut hits = flower
        .petal_cliques
        .iter()
        .enumerate()
        .filter(|&(_, &p)| nr.is_subset(p) && nr.intersects(core) && nr.intersects(p - core))
        .map(|(i, _)| i);
    match (hits.next(), hits.next()) {
        (Some(i), None) => RayKind::SplitOn(i),
        _ => RayKind::Other,
    }
}

/// A validated sun system on `G[F ∪ R]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SunSystem {
    pub flower_vertices: VertexSet,
    pub rays: VertexSet,
    pub flower: Flower,
    /// Kind of each ray, in increasing ray order.
    pub ray_kinds: Vec<(usize, RayKind)>,
}

impl SunSystem {
    pub fn host(&self) -> VertexSet {
        self.flower_vertices | self.rays
    }

    pub fn is_trivial(&self) -> bool {
        self.flower.is_trivial()
    }

    pub fn kind_of(&self, r: usize) -> Option<RayKind> {
        self.ray_kinds.iter().find(|&&(x, _)| x == r).map(|&(_, k)| k)
    }

    /// Petal-clique indices some ray is split on, increasing.
    pub fn split_petals(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .ray_kinds
            .iter()
            .filter_map(|&(_, k)| match k {
                RayKind::SplitOn(p) => Some(p),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SunRejection {
    Overlap(VertexSet),
    RaysNotIndependent(usize, usize),
    TooFewRays(usize),
    Flower(FlowerRejection),
    OtherRay(usize),
    ComparableRays(usize, usize),
    NotAsteroidal(usize),
}

impl fmt::Display for SunRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SunRejection::Overlap(s) => write!(f, "F and R overlap in {s}"),
            SunRejection::RaysNotIndependent(a, b) => write!(f, "rays {a} and {b} are adjacent"),
            SunRejection::TooFewRays(k) => write!(f, "{k} rays; at least three are needed"),
            SunRejection::Flower(r) => write!(f, "not a flower: {r}"),
            SunRejection::OtherRay(r) => write!(f, "ray {r} is neither intersecting nor split"),
            SunRejection::ComparableRays(a, b) => write!(f, "N({a}) and N({b}) are comparable"),
            SunRejection::NotAsteroidal(r) => write!(f, "removing N[{r}] separates the other rays"),
        }
    }
}

/// Checks that `G[F ∪ R]` is a sun system with flower `F` and rays `R`.
/// Asteroidality of `R` is evaluated inside `G[F ∪ R]`.
pub fn is_sun_system(g: &Graph, f: VertexSet, r: VertexSet) -> std::result::Result<SunSystem, SunRejection> {
    if f.intersects(r) {
        return Err(SunRejection::Overlap(f & r));
    }
    for a in r {
        if let Some(b) = (g.adj(a) & r).first() {
            return Err(SunRejection::RaysNotIndependent(a.min(b), a.max(b)));
        }
    }
    if r.len() < 3 {
        return Err(SunRejection::TooFewRays(r.len()));
    }
    let flower = try_flower(g, f).map_err(SunRejection::Flower)?;
    let mut ray_kinds = Vec::with_capacity(r.len());
    for x in r {
        match classify_ray(g, &flower, x) {
            RayKind::Other => return Err(SunRejection::OtherRay(x)),
            k => ray_kinds.push((x, k)),
        }
    }
    let host = f | r;
    let rays = r.to_vec();
    for (i, &a) in rays.iter().enumerate() {
        for &b in &rays[i + 1..] {
            if !(g.adj(a) & host).incomparable(g.adj(b) & host) {
                return Err(SunRejection::ComparableRays(a, b));
            }
        }
    }
    for x in r {
        let rest = r.without(x);
        let reach = g.reach(rest.first().unwrap(), host - g.closed(x));
        if !rest.is_subset(reach) {
            return Err(SunRejection::NotAsteroidal(x));
        }
    }
    Ok(SunSystem { flower_vertices: f, rays: r, flower, ray_kinds })
}

/// A node of the auxiliary graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AuxNode {
    Ray(usize),
    /// Index into the flower's petal cliques.
    Petal(usize),
}

/// Auxiliary graph: one node per ray (in increasing order) followed by one
/// node per split petal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    pub nodes: Vec<AuxNode>,
    pub graph: Graph,
}

impl AuxiliaryGraph {
    pub fn index_of(&self, node: AuxNode) -> Option<usize> {
        self.nodes.iter().position(|&x| x == node)
    }
}

pub fn build_auxiliary_graph(g: &Graph, ss: &SunSystem) -> AuxiliaryGraph {
    let mut nodes: Vec<AuxNode> = ss.rays.iter().map(AuxNode::Ray).collect();
    nodes.extend(ss.split_petals().into_iter().map(AuxNode::Petal));
    let mut a = Graph::empty(nodes.len()).expect("aux graph fits");
    let core = ss.flower.core();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let edge = match (nodes[i], nodes[j]) {
                (AuxNode::Petal(_), AuxNode::Petal(_)) => true,
                (AuxNode::Ray(r), AuxNode::Ray(s)) => (g.adj(r) & g.adj(s) & core).len() > 0,
                (AuxNode::Ray(r), AuxNode::Petal(p)) | (AuxNode::Petal(p), AuxNode::Ray(r)) => {
                    ss.kind_of(r) == Some(RayKind::SplitOn(p))
                }
            };
            if edge {
                a.add_edge(i, j);
            }
        }
    }
    AuxiliaryGraph { nodes, graph: a }
}

/// Two-colours `g`; on failure returns an odd cycle as a vertex sequence
/// (consecutive vertices adjacent, last adjacent to first).
pub fn is_bipartite(g: &Graph) -> std::result::Result<Vec<bool>, Vec<usize>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.adj(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!color[x].unwrap());
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(c) if c == color[x].unwrap() => {
                        // Walk both endpoints up to their common ancestor.
                        let (mut a, mut b) = (x, y);
                        let mut left = vec![a];
                        let mut right = vec![b];
                        while a != b {
                            if depth[a] >= depth[b] {
                                a = parent[a];
                                left.push(a);
                            } else {
                                b = parent[b];
                                right.push(b);
                            }
                        }
                        right.pop();
                        right.reverse();
                        left.extend(right);
                        // left runs x .. lca .. y; rotate to start at the lca.
                        let lca_pos = left.iter().position(|&v| v == a).unwrap();
                        left.rotate_left(lca_pos);
                        return Err(left);
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

/// Why two consecutive nodes of an odd cycle are adjacent in `A^G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxEdgeReason {
    /// The rays share this core vertex.
    SharedCore(usize),
    /// The ray is split on the petal.
    Split,
    /// Petal nodes are always adjacent.
    PetalPetal,
}

/// A non-trivial sun system whose auxiliary graph contains an odd cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadSunSystem {
    pub system: SunSystem,
    /// The odd cycle in `A^G`, as nodes.
    pub cycle: Vec<AuxNode>,
    /// `reasons[i]` justifies the edge `cycle[i] - cycle[i+1 mod len]`.
    pub reasons: Vec<AuxEdgeReason>,
}

fn justify(g: &Graph, ss: &SunSystem, a: AuxNode, b: AuxNode) -> AuxEdgeReason {
    match (a, b) {
        (AuxNode::Ray(r), AuxNode::Ray(s)) => {
            AuxEdgeReason::SharedCore((g.adj(r) & g.adj(s) & ss.flower.core()).first().expect("ray-ray edge"))
        }
        (AuxNode::Petal(_), AuxNode::Petal(_)) => AuxEdgeReason::PetalPetal,
        _ => AuxEdgeReason::Split,
    }
}

/// Odd cycle of the auxiliary graph of a non-trivial sun system, if any.
pub fn bad_cycle(g: &Graph, ss: &SunSystem) -> Option<BadSunSystem> {
    if ss.is_trivial() {
        return None;
    }
    let aux = build_auxiliary_graph(g, ss);
    let cycle = is_bipartite(&aux.graph).err()?;
    let nodes: Vec<AuxNode> = cycle.iter().map(|&i| aux.nodes[i]).collect();
    let reasons = (0..nodes.len()).map(|i| justify(g, ss, nodes[i], nodes[(i + 1) % nodes.len()])).collect();
    Some(BadSunSystem { system: ss.clone(), cycle: nodes, reasons })
}

/// Largest graph accepted by [`find_bad_sun_system`] and [`for_each_sun_system`].
pub const SUN_SEARCH_MAX_N: usize = 12;

/// Visits every induced non-trivial sun system of `g` until `visit` breaks.
///
/// Hosts `H` are visited by increasing size, then in lexicographic order of
/// their sorted vertex lists. Rays are drawn from the simplicial vertices of
/// `G[H]` (both ray kinds need `N(r)` to be a clique) forming independent
/// sets of size at least three, smallest subsets first. A non-trivial flower
/// needs three vertices, so hosts start at six.
pub fn for_each_sun_system<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&SunSystem) -> ControlFlow<()>,
{
    let n = g.n();
    if n > SUN_SEARCH_MAX_N {
        return Err(Error::Unsupported { what: "sun system search vertex count", limit: SUN_SEARCH_MAX_N, actual: n });
    }
    for size in 6..=n {
        for combo in Combinations::new(n, size) {
            let host: VertexSet = combo.iter().collect();
            if sun_systems_on(g, host, &mut visit).is_break() {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn sun_systems_on<F>(g: &Graph, host: VertexSet, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&SunSystem) -> ControlFlow<()>,
{
    let Some(first) = host.first() else { return ControlFlow::Continue(()) };
    if g.reach(first, host) != host {
        return ControlFlow::Continue(());
    }
    let simplicial: Vec<usize> = host.iter().filter(|&v| g.is_clique(g.adj(v) & host)).collect();
    for k in 3..=simplicial.len().min(host.len().saturating_sub(3)) {
        for pick in Combinations::new(simplicial.len(), k) {
            let rays: VertexSet = pick.iter().map(|&i| simplicial[i]).collect();
            if !g.is_independent(rays) {
                continue;
            }
            if let Ok(ss) = is_sun_system(g, host - rays, rays) {
                if !ss.is_trivial() {
                    visit(&ss)?;
                }
            }
        }
    }
    ControlFlow::Continue(())
}

/// First induced non-trivial sun system (in [`for_each_sun_system`] order)
/// whose auxiliary graph contains an odd cycle.
pub fn find_bad_sun_system(g: &Graph) -> Result<Option<BadSunSystem>> {
    let mut found = None;
    for_each_sun_system(g, |ss| match bad_cycle(g, ss) {
        Some(b) => {
            found = Some(b);
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    })?;
    Ok(found)
}

/// Verdict of [`is_path_graph_via_theorem`].
#[derive(Clone, Debug)]
pub enum PathVerdict {
    Path,
    NotChordal(InducedCycle),
    BadSunSystem(Box<BadSunSystem>),
}

impl PathVerdict {
    pub fn is_path(&self) -> bool {
        matches!(self, PathVerdict::Path)
    }
}

/// Path graph iff chordal and free of induced bad sun systems.
pub fn is_path_graph_via_theorem(g: &Graph) -> Result<PathVerdict> {
    if let Err(cycle) = check_chordal(g) {
        return Ok(PathVerdict::NotChordal(cycle));
    }
    Ok(match find_bad_sun_system(g)? {
        Some(b) => PathVerdict::BadSunSystem(Box::new(b)),
        None => PathVerdict::Path,
    })
}
