//! Asteroidal sets, special connections and odd suns.

use std::fmt;

use crate::chordal::is_chordal;
use crate::error::{Error, Result};
use crate::families::{k_sun, s_directed_pointed};
use crate::graph::Graph;
use crate::iso::InducedMatcher;
use crate::set::VertexSet;

/// A graph with two distinguished, distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedGraph {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
}

impl PointedGraph {
    pub fn new(graph: Graph, u: usize, v: usize) -> Result<Self> {
        if u == v || u >= graph.n() || v >= graph.n() {
            return Err(Error::InvalidParameter(format!("pointed graph needs distinct vertices in range, got {u}, {v}")));
        }
        Ok(PointedGraph { graph, u, v })
    }
}

/// Component index of every vertex of `G - N[v]`, for every `v`.
/// Vertices inside `N[v]` get `usize::MAX`.
pub struct ComponentTable {
    comp: Vec<Vec<usize>>,
}

impl ComponentTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let comp = (0..n)
            .map(|v| {
                let mut row = vec![usize::MAX; n];
                for (i, c) in g.components_avoiding(g.closed(v)).into_iter().enumerate() {
                    for w in c {
                        row[w] = i;
                    }
                }
                row
            })
            .collect();
        ComponentTable { comp }
    }

    /// Whether `a` and `b` lie in one component of `G - N[v]`.
    pub fn together(&self, v: usize, a: usize, b: usize) -> bool {
        let row = &self.comp[v];
        row[a] != usize::MAX && row[a] == row[b]
    }

    pub fn is_asteroidal(&self, s: VertexSet) -> bool {
        s.iter().all(|v| {
            let rest = s.without(v);
            let first = rest.first().unwrap();
            rest.iter().all(|w| self.together(v, first, w))
        })
    }
}

/// Whether `s` is asteroidal: for each member, the others share a component
/// once its closed neighbourhood is removed. Rejects sets of fewer than three
/// vertices and non-independent sets.
pub fn is_asteroidal_set(g: &Graph, s: VertexSet) -> Result<bool> {
    if s.len() < 3 {
        return Err(Error::InvalidParameter(format!("asteroidal sets have at least three vertices, got {}", s.len())));
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidParameter(format!("{s} is not a vertex subset")));
    }
    if !g.is_independent(s) {
        return Err(Error::InvalidParameter(format!("{} is not independent", g.fmt_set(s))));
    }
    Ok(s.iter().all(|v| {
        let rest = s.without(v);
        rest.is_subset(g.reach(rest.first().unwrap(), g.vertices() - g.closed(v)))
    }))
}

/// All asteroidal triples as sorted `[a, b, c]`, in lexicographic order.
pub fn find_asteroidal_triples(g: &Graph) -> Vec<[usize; 3]> {
    let table = ComponentTable::new(g);
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) || !table.together(a, b, b) || !table.together(b, a, a) {
                continue;
            }
            for c in b + 1..n {
                if table.together(a, b, c) && table.together(b, a, c) && table.together(c, a, b) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// The lexicographically first asteroidal triple.
pub fn first_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    let table = ComponentTable::new(g);
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if table.together(a, b, c) && table.together(b, a, c) && table.together(c, a, b) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Interval iff chordal and free of asteroidal triples.
pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && first_asteroidal_triple(g).is_none()
}

/// One of the four special-connection shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpecialType {
    Type1,
    Type2,
    Type3,
    /// Type 4 with parameter `t ≥ 1`.
    Type4(usize),
}

impl SpecialType {
    pub fn generator_args(self) -> (u8, usize) {
        match self {
            SpecialType::Type1 => (1, 0),
            SpecialType::Type2 => (2, 0),
            SpecialType::Type3 => (3, 0),
            SpecialType::Type4(t) => (4, t),
        }
    }

    pub fn pointed(self) -> PointedGraph {
        let (ty, t) = self.generator_args();
        s_directed_pointed(ty, t).expect("valid special type")
    }

    pub fn vertex_count(self) -> usize {
        match self {
            SpecialType::Type1 => 3,
            SpecialType::Type2 => 6,
            SpecialType::Type3 => 8,
            SpecialType::Type4(t) => 4 * t + 5,
        }
    }

    /// Every shape that fits in `n` vertices, smallest type first.
    pub fn all_up_to(n: usize) -> Vec<SpecialType> {
        let mut out: Vec<SpecialType> =
            [SpecialType::Type1, SpecialType::Type2, SpecialType::Type3].into_iter().filter(|s| s.vertex_count() <= n).collect();
        out.extend((1..).map(SpecialType::Type4).take_while(|s| s.vertex_count() <= n));
        out
    }
}

impl fmt::Display for SpecialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialType::Type1 => f.write_str("type 1"),
            SpecialType::Type2 => f.write_str("type 2"),
            SpecialType::Type3 => f.write_str("type 3"),
            SpecialType::Type4(t) => write!(f, "type 4 (t={t})"),
        }
    }
}

/// An induced copy of a special shape: `map[i]` is the host vertex playing
/// pattern vertex `i`; pattern vertices `u`, `v` map to the connected pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialConnection {
    pub kind: SpecialType,
    pub map: Vec<usize>,
}

impl SpecialConnection {
    pub fn vertices(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Re-checks that the image induces exactly the pattern and that the
    /// endpoints map to `(u, v)`.
    pub fn verify(&self, g: &Graph, u: usize, v: usize) -> bool {
        let p = self.kind.pointed();
        let k = p.graph.n();
        if self.map.len() != k || self.vertices().len() != k || self.map.iter().any(|&h| h >= g.n()) {
            return false;
        }
        if self.map[p.u] != u || self.map[p.v] != v {
            return false;
        }
        (0..k).all(|i| (i + 1..k).all(|j| p.graph.has_edge(i, j) == g.has_edge(self.map[i], self.map[j])))
    }
}

/// Finds an induced special connection between `u` and `v`, trying shapes
/// in [`SpecialType::all_up_to`] order.
pub fn s_connected(g: &Graph, u: usize, v: usize) -> Result<Option<SpecialConnection>> {
    if u == v || u >= g.n() || v >= g.n() {
        return Err(Error::InvalidParameter(format!("s_connected needs distinct vertices in range, got {u}, {v}")));
    }
    if g.has_edge(u, v) {
        // Every shape has non-adjacent endpoints.
        return Ok(None);
    }
    for kind in SpecialType::all_up_to(g.n()) {
        let p = kind.pointed();
        if let Some(map) = InducedMatcher::new(g, &p.graph, g.vertices()).find(&[(p.u, u), (p.v, v)]) {
            return Ok(Some(SpecialConnection { kind, map }));
        }
    }
    Ok(None)
}

/// An asteroidal triple whose three pairs are each specially connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDirectedTriple {
    pub triple: [usize; 3],
    /// Connections for the pairs `(a,b)`, `(a,c)`, `(b,c)`.
    pub connections: [SpecialConnection; 3],
}

impl SDirectedTriple {
    pub fn pairs(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.triple;
        [(a, b), (a, c), (b, c)]
    }
}

/// First asteroidal triple (lexicographically) with all pairs specially connected.
pub fn find_s_directed_triple(g: &Graph) -> Result<Option<SDirectedTriple>> {
    let mut cache = std::collections::HashMap::new();
    let mut conn = |a: usize, b: usize| -> Result<Option<SpecialConnection>> {
        if let Some(c) = cache.get(&(a, b)) {
            return Ok(Clone::clone(c));
        }
        let c = s_connected(g, a, b)?;
        cache.insert((a, b), c.clone());
        Ok(c)
    };
    for triple in find_asteroidal_triples(g) {
        let [a, b, c] = triple;
        let Some(ab) = conn(a, b)? else { continue };
        let Some(ac) = conn(a, c)? else { continue };
        let Some(bc) = conn(b, c)? else { continue };
        return Ok(Some(SDirectedTriple { triple, connections: [ab, ac, bc] }));
    }
    Ok(None)
}

/// Directed path graph test: chordal with no asteroidal triple whose pairs
/// are all specially connected.
pub fn is_directed_path(g: &Graph) -> Result<bool> {
    Ok(is_chordal(g) && find_s_directed_triple(g)?.is_none())
}

/// An induced k-sun: `core[i]` is `c_i`, `rays[i]` is `r_i`, adjacent to
/// `c_i` and `c_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddSun {
    pub k: usize,
    pub core: Vec<usize>,
    pub rays: Vec<usize>,
}

impl OddSun {
    pub fn vertices(&self) -> VertexSet {
        self.core.iter().chain(&self.rays).collect()
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.k;
        if k < 3 || k % 2 == 0 || self.core.len() != k || self.rays.len() != k || self.vertices().len() != 2 * k {
            return false;
        }
        if self.vertices().iter().any(|v| v >= g.n()) {
            return false;
        }
        let core: VertexSet = self.core.iter().collect();
        let rays: VertexSet = self.rays.iter().collect();
        g.is_clique(core)
            && g.is_independent(rays)
            && (0..k).all(|i| g.adj(self.rays[i]) & core == [self.core[i], self.core[(i + 1) % k]].iter().collect())
    }
}

/// Smallest induced odd sun, searching `k = 3, 5, …` while `2k ≤ n`.
pub fn find_induced_odd_sun(g: &Graph) -> Result<Option<OddSun>> {
    let mut k = 3;
    while 2 * k <= g.n() {
        let sun = k_sun(k)?;
        if let Some(map) = InducedMatcher::new(g, &sun, g.vertices()).find(&[]) {
            return Ok(Some(OddSun { k, core: map[..k].to_vec(), rays: map[k..].to_vec() }));
        }
        k += 2;
    }
    Ok(None)
}

pub fn contains_induced_odd_sun(g: &Graph) -> Result<bool> {
    Ok(find_induced_odd_sun(g)?.is_some())
}
