//! Generators for the named graphs and families, plus chordal corpora.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asteroidal::{is_asteroidal_set, PointedGraph};
use crate::chordal::{is_chordal, maximal_cliques};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical_code;
use crate::set::VertexSet;
use crate::tree::CliqueTree;

fn named(names: &[&str], edges: &[(&str, &str)]) -> Graph {
    let idx = |s: &str| names.iter().position(|&x| x == s).expect("known vertex");
    let e: Vec<_> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    Graph::from_edge_list(names.len(), &e).expect("static graph").with_labels(names.iter().copied())
}

/// Directed path graph that is not interval. Vertices `a b c d x y z`.
pub fn g1() -> Graph {
    named(
        &["a", "b", "c", "d", "x", "y", "z"],
        &[
            ("x", "a"),
            ("x", "d"),
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
            ("b", "z"),
            ("c", "z"),
            ("d", "y"),
            ("c", "y"),
        ],
    )
}

/// The 3-sun. Vertices `a b c x y z`; `x y z` are the rays.
pub fn g2() -> Graph {
    named(
        &["a", "b", "c", "x", "y", "z"],
        &[("a", "b"), ("a", "c"), ("b", "c"), ("a", "z"), ("c", "z"), ("b", "y"), ("c", "y"), ("x", "a"), ("x", "b")],
    )
}

/// Chordal but not a path graph. Vertices `a b c d e x y z`.
pub fn g3() -> Graph {
    named(
        &["a", "b", "c", "d", "e", "x", "y", "z"],
        &[
            ("a", "b"),
            ("a", "e"),
            ("a", "d"),
            ("a", "c"),
            ("b", "e"),
            ("b", "d"),
            ("b", "c"),
            ("e", "d"),
            ("d", "c"),
            ("a", "z"),
            ("e", "z"),
            ("b", "y"),
            ("c", "y"),
            ("a", "x"),
            ("b", "x"),
        ],
    )
}

/// Core triangle `u v w`, two vertices `x y` on the whole core, and rays
/// `r1 r2 r3` on `{u,v}`, `{u,w}`, `{v,w}`.
pub fn f11_8() -> Graph {
    named(
        &["u", "v", "w", "x", "y", "r1", "r2", "r3"],
        &[
            ("u", "v"),
            ("u", "w"),
            ("v", "w"),
            ("x", "u"),
            ("x", "v"),
            ("x", "w"),
            ("y", "u"),
            ("y", "v"),
            ("y", "w"),
            ("r1", "u"),
            ("r1", "v"),
            ("r2", "u"),
            ("r2", "w"),
            ("r3", "v"),
            ("r3", "w"),
        ],
    )
}

/// The k-sun: core `c1..ck` (indices `0..k`), rays `r1..rk` (indices
/// `k..2k`), ray `r_i` adjacent to `c_i` and `c_{i+1}` cyclically.
pub fn k_sun(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k-sun needs k >= 3, got {k}")));
    }
    let mut g = Graph::complete(k)?.disjoint_union(&Graph::empty(k)?)?;
    for i in 0..k {
        g.add_edge(k + i, i);
        g.add_edge(k + i, (i + 1) % k);
    }
    let labels = (1..=k).map(|i| format!("c{i}")).chain((1..=k).map(|i| format!("r{i}")));
    let g = g.with_labels(labels);
    debug_assert!(is_chordal(&g));
    Ok(g)
}

/// Vertex layout of [`f11_4k`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct F11Layout {
    pub k: usize,
}

impl F11Layout {
    /// Number of core vertices and of rays, `2k - 1`.
    pub fn m(self) -> usize {
        2 * self.k - 1
    }
    pub fn core(self) -> VertexSet {
        VertexSet::full(self.m())
    }
    pub fn rays(self) -> VertexSet {
        VertexSet::full(2 * self.m()) - self.core()
    }
    pub fn ray(self, i: usize) -> usize {
        self.m() + i
    }
    pub fn x(self) -> usize {
        2 * self.m()
    }
    pub fn y(self) -> usize {
        2 * self.m() + 1
    }
}

/// Reconstruction of `F11(4k)`: a `(2k-1)`-sun whose core is also fully
/// joined to two non-adjacent vertices `x` and `y`. Layout as in
/// [`F11Layout`]; `4k` vertices in total.
pub fn f11_4k(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("F11(4k) needs k >= 2, got {k}")));
    }
    let lay = F11Layout { k };
    let m = lay.m();
    let sun = k_sun(m)?;
    let mut g = sun.disjoint_union(&Graph::empty(2)?)?;
    for c in 0..m {
        g.add_edge(lay.x(), c);
        g.add_edge(lay.y(), c);
    }
    let labels = (1..=m).map(|i| format!("c{i}")).chain((1..=m).map(|i| format!("r{i}"))).chain(["x".into(), "y".into()]);
    let g = g.with_labels(labels);
    debug_assert_eq!(maximal_cliques(&g).map(|c| c.len()).ok(), Some(m + 2));
    Ok(g)
}

/// Outcome of the reconstruction checks for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F11Check {
    pub k: usize,
    pub vertices: usize,
    pub maximal_cliques: usize,
    pub rays: usize,
    /// Only meaningful for `k = 2`.
    pub matches_f11_8: Option<bool>,
}

impl F11Check {
    pub fn passes(&self) -> bool {
        self.vertices == 4 * self.k && self.maximal_cliques == self.rays + 2 && self.matches_f11_8 != Some(false)
    }
}

pub fn check_f11_reconstruction(k: usize) -> Result<F11Check> {
    let g = f11_4k(k)?;
    let lay = F11Layout { k };
    let matches_f11_8 = if k == 2 { Some(canonical_code(&g)? == canonical_code(&f11_8())?) } else { None };
    Ok(F11Check {
        k,
        vertices: g.n(),
        maximal_cliques: maximal_cliques(&g)?.len(),
        rays: lay.rays().len(),
        matches_f11_8,
    })
}

/// The clique tree `T_A` of `f11_4k(k)` for an asteroidal triple `A`:
/// `Q_x - Q_y`, every ray triangle hung on `Q_x` or `Q_y`.
///
/// Each core vertex `v` adjacent to a ray of `A` lies in exactly two ray
/// triangles; `T_A^v` is a path iff those two hang on different sides.
/// The sides are a 2-colouring of that constraint graph, rays visited in
/// index order, a fresh component starting on `Q_x` and `Q_y` alternately.
/// Fails when `A` is not asteroidal or the constraints contain an odd cycle.
pub fn build_ta(k: usize, a: VertexSet) -> Result<CliqueTree> {
    let g = f11_4k(k)?;
    let lay = F11Layout { k };
    if a.len() != 3 || !is_asteroidal_set(&g, a)? {
        return Err(Error::InvalidParameter(format!("{} is not an asteroidal triple", g.fmt_set(a))));
    }
    let m = lay.m();
    let mut constraint = vec![VertexSet::EMPTY; m];
    let touched = a.iter().fold(VertexSet::EMPTY, |acc, r| acc | g.adj(r));
    for v in touched {
        // Rays at core vertex c_v are r_{v-1} and r_v.
        let (p, q) = ((v + m - 1) % m, v);
        constraint[p].insert(q);
        constraint[q].insert(p);
    }
    let mut side: Vec<Option<bool>> = vec![None; m];
    let mut roots = 0usize;
    for start in 0..m {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(roots % 2 == 1);
        roots += 1;
        let mut stack = vec![start];
        while let Some(r) = stack.pop() {
            let s = side[r].unwrap();
            for q in constraint[r] {
                match side[q] {
                    None => {
                        side[q] = Some(!s);
                        stack.push(q);
                    }
                    Some(t) if t == s => {
                        return Err(Error::InvalidParameter(format!(
                            "no T_A for {}: the ray constraints form an odd cycle",
                            g.fmt_set(a)
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let cliques = maximal_cliques(&g)?;
    let qx = cliques.iter().position(|q| q.contains(lay.x())).unwrap();
    let qy = cliques.iter().position(|q| q.contains(lay.y())).unwrap();
    let mut edges = vec![(qx, qy)];
    for (i, s) in side.iter().enumerate() {
        let qr = cliques.iter().position(|q| q.contains(lay.ray(i))).unwrap();
        edges.push((if s.unwrap() { qy } else { qx }, qr));
    }
    CliqueTree::new(Arc::new(g), cliques, edges)
}

/// The four special-connection shapes with `u`, `v` distinguished.
pub fn s_directed_pointed(ty: u8, t: usize) -> Result<PointedGraph> {
    let bad = || Error::InvalidParameter(format!("no special connection of type {ty} with t = {t}"));
    let (g, u, v) = match ty {
        1 if t == 0 => (named(&["u", "w", "v"], &[("u", "w"), ("w", "v")]), 0, 2),
        2 if t == 0 => (
            named(
                &["u", "v", "a", "b", "c", "d"],
                &[("u", "a"), ("u", "c"), ("a", "b"), ("b", "c"), ("a", "c"), ("b", "d"), ("c", "d"), ("b", "v"), ("d", "v")],
            ),
            0,
            1,
        ),
        3 if t == 0 => {
            let mut edges = Vec::new();
            for group in [&["u", "a", "c"][..], &["v", "b", "d"], &["a", "b", "c", "d"], &["x", "a", "b", "c"], &["y", "a", "b", "d"]] {
                for (i, &p) in group.iter().enumerate() {
                    for &q in &group[i + 1..] {
                        edges.push((p, q));
                    }
                }
            }
            (named(&["u", "v", "a", "b", "c", "d", "x", "y"], &edges), 0, 1)
        }
        4 if t >= 1 => {
            // u, v, z_0..z_{2t+2}, z'_1..z'_{2t}
            let zc = 2 * t + 3;
            let n = 2 + zc + 2 * t;
            if n > crate::set::MAX_VERTICES {
                return Err(Error::TooManyVertices(n));
            }
            let z = |i: usize| 2 + i;
            let zp = |i: usize| match i {
                0 => 0,
                i if i == 2 * t + 1 => 1,
                i => 2 + zc + i - 1,
            };
            let mut g = Graph::empty(n)?;
            for i in 0..zc {
                for j in i + 1..zc {
                    g.add_edge(z(i), z(j));
                }
            }
            for k in 0..=2 * t + 1 {
                g.add_edge(zp(k), z(k));
                g.add_edge(zp(k), z(k + 1));
            }
            let labels = ["u".to_string(), "v".to_string()]
                .into_iter()
                .chain((0..zc).map(|i| format!("z{i}")))
                .chain((1..=2 * t).map(|i| format!("z'{i}")));
            (g.with_labels(labels), 0, 1)
        }
        _ => return Err(bad()),
    };
    PointedGraph::new(g, u, v)
}

/// Largest `n` accepted by [`enumerate_small_chordal`].
pub const SMALL_CHORDAL_MAX_N: usize = 7;

/// All connected chordal graphs on `n` vertices up to isomorphism, sorted by
/// canonical code.
///
/// Built by adding a vertex on a nonempty clique of each graph on `n - 1`
/// vertices: deleting a simplicial vertex keeps a connected chordal graph
/// connected and chordal, so every graph arises this way.
pub fn enumerate_small_chordal(n: usize) -> Result<Vec<Graph>> {
    if n > SMALL_CHORDAL_MAX_N {
        return Err(Error::Unsupported { what: "small chordal enumeration vertex count", limit: SMALL_CHORDAL_MAX_N, actual: n });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut level: BTreeSet<Vec<u8>> = BTreeSet::new();
    level.insert(canonical_code(&Graph::empty(1)?)?);
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = crate::format::from_graph6(std::str::from_utf8(code).unwrap())?;
            for s in 1u64..(1 << (size - 1)) {
                let s = VertexSet::from_bits(s);
                if !g.is_clique(s) {
                    continue;
                }
                let mut h = g.disjoint_union(&Graph::empty(1)?)?;
                for w in s {
                    h.add_edge(size - 1, w);
                }
                next.insert(canonical_code(&h)?);
            }
        }
        level = next;
    }
    level.into_iter().map(|c| crate::format::from_graph6(std::str::from_utf8(&c).unwrap())).collect()
}

/// Corpus: all connected chordal graphs with `1..=n_max` vertices.
pub fn small_chordal_corpus(n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_small_chordal(n)?);
    }
    Ok(out)
}

/// Largest `n` accepted by [`random_chordal`].
pub const RANDOM_CHORDAL_MAX_N: usize = 12;

/// A random chordal graph: a random tree on `clique_budget` nodes, a random
/// subtree for every vertex, and an edge wherever two subtrees meet.
/// Deterministic for a given seed; not uniform over chordal graphs.
pub fn random_chordal(n: usize, clique_budget: usize, seed: u64) -> Result<Graph> {
    if n > RANDOM_CHORDAL_MAX_N {
        return Err(Error::Unsupported { what: "random chordal vertex count", limit: RANDOM_CHORDAL_MAX_N, actual: n });
    }
    if clique_budget == 0 || clique_budget > 64 {
        return Err(Error::InvalidParameter(format!("clique budget must be in 1..=64, got {clique_budget}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tree = vec![VertexSet::EMPTY; clique_budget];
    for i in 1..clique_budget {
        let p = rng.gen_range(0..i);
        tree[i].insert(p);
        tree[p].insert(i);
    }
    let subtrees: Vec<VertexSet> = (0..n)
        .map(|_| {
            let size = rng.gen_range(1..=clique_budget.min(4));
            let mut sub = VertexSet::singleton(rng.gen_range(0..clique_budget));
            while sub.len() < size {
                let frontier: Vec<usize> = (sub.iter().fold(VertexSet::EMPTY, |a, q| a | tree[q]) - sub).to_vec();
                match frontier.choose(&mut rng) {
                    Some(&q) => sub.insert(q),
                    None => break,
                }
            }
            sub
        })
        .collect();
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if subtrees[u].intersects(subtrees[v]) {
                g.add_edge(u, v);
            }
        }
    }
    debug_assert!(is_chordal(&g));
    Ok(g)
}

/// The chordless cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

/// A named family member, as accepted on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    KSun(usize),
    G1,
    G2,
    G3,
    F11_8,
    F11_4k(usize),
    SDirected { ty: u8, t: usize },
    RandomChordal { n: usize, budget: usize, seed: u64 },
    Cycle(usize),
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::KSun(k) => k_sun(k),
            FamilySpec::G1 => Ok(g1()),
            FamilySpec::G2 => Ok(g2()),
            FamilySpec::G3 => Ok(g3()),
            FamilySpec::F11_8 => Ok(f11_8()),
            FamilySpec::F11_4k(k) => f11_4k(k),
            FamilySpec::SDirected { ty, t } => Ok(s_directed_pointed(ty, t)?.graph),
            FamilySpec::RandomChordal { n, budget, seed } => random_chordal(n, budget, seed),
            FamilySpec::Cycle(n) => cycle(n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::KSun(k) => write!(f, "ksun:{k}"),
            FamilySpec::G1 => f.write_str("g1"),
            FamilySpec::G2 => f.write_str("g2"),
            FamilySpec::G3 => f.write_str("g3"),
            FamilySpec::F11_8 => f.write_str("f11_8"),
            FamilySpec::F11_4k(k) => write!(f, "f11:{k}"),
            FamilySpec::SDirected { ty, t } => write!(f, "sdirected:{ty}:{t}"),
            FamilySpec::RandomChordal { n, budget, seed } => write!(f, "random:{n}:{budget}:{seed}"),
            FamilySpec::Cycle(n) => write!(f, "c{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `ksun:5`, `f11:4`,
    /// `sdirected:4:1`, `random:10:6:42`, `c5`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(n) = s.strip_prefix('c').and_then(|d| d.parse::<usize>().ok()) {
            return Ok(FamilySpec::Cycle(n));
        }
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<u64> {
            parts
                .get(i)
                .ok_or_else(|| Error::InvalidParameter(format!("{s}: missing parameter {i}")))?
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("{s}: parameter {i} is not a number")))
        };
        let spec = match (parts[0], parts.len()) {
            ("ksun", 2) => FamilySpec::KSun(num(1)? as usize),
            ("g1", 1) => FamilySpec::G1,
            ("g2", 1) => FamilySpec::G2,
            ("g3", 1) => FamilySpec::G3,
            ("f11_8", 1) => FamilySpec::F11_8,
            ("f11", 2) => FamilySpec::F11_4k(num(1)? as usize),
            ("sdirected", 2) => FamilySpec::SDirected { ty: num(1)? as u8, t: 0 },
            ("sdirected", 3) => FamilySpec::SDirected { ty: num(1)? as u8, t: num(2)? as usize },
            ("random", 4) => FamilySpec::RandomChordal { n: num(1)? as usize, budget: num(2)? as usize, seed: num(3)? },
            _ => return Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        };
        Ok(spec)
    }
}
