//! Chordality testing, maximal cliques and clique-tree construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::tree::CliqueTree;

/// A vertex ordering intended as a perfect elimination order, with the first
/// violation found when it is not one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder {
    /// Vertices in elimination order.
    pub order: Vec<usize>,
    pub failure: Option<PeoViolation>,
}

/// `vertex` has two later neighbours `missing.0`, `missing.1` that are not adjacent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeoViolation {
    pub vertex: usize,
    pub missing: (usize, usize),
}

impl EliminationOrder {
    pub fn is_perfect(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `order` as an elimination order; returns the first violation.
pub fn check_elimination_order(g: &Graph, order: &[usize]) -> Option<PeoViolation> {
    let mut later = VertexSet::full(g.n());
    for &v in order {
        later.remove(v);
        let nb = g.adj(v) & later;
        for a in nb {
            let missing = (nb - g.adj(a)).without(a);
            if let Some(b) = missing.first() {
                return Some(PeoViolation { vertex: v, missing: (a.min(b), a.max(b)) });
            }
        }
    }
    None
}

/// Maximum cardinality search. The returned order is the reverse of the
/// visiting order, which is a perfect elimination order iff `g` is chordal.
/// Ties go to the smallest vertex index.
pub fn mcs_order(g: &Graph) -> EliminationOrder {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut visit = Vec::with_capacity(n);
    while !unvisited.is_empty() {
        let v = unvisited.iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        unvisited.remove(v);
        visit.push(v);
        for w in g.adj(v) & unvisited {
            weight[w] += 1;
        }
    }
    visit.reverse();
    let failure = check_elimination_order(g, &visit);
    EliminationOrder { order: visit, failure }
}

/// An induced cycle of length at least four, listed in cyclic order.
#[derive(Clone, PartialEq, Eq)]
pub struct InducedCycle(pub Vec<usize>);

impl fmt::Debug for InducedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl InducedCycle {
    /// Re-checks that this is a chordless cycle of length ≥ 4 in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let c = &self.0;
        let k = c.len();
        if k < 4 || c.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set: VertexSet = c.iter().collect();
        if set.len() != k {
            return false;
        }
        (0..k).all(|i| {
            (0..k).filter(|&j| j != i).all(|j| {
                let consecutive = (i + 1) % k == j || (j + 1) % k == i;
                g.has_edge(c[i], c[j]) == consecutive
            })
        })
    }
}

/// For `v` with non-adjacent neighbours `a`, `b`: a shortest `a`-`b` path
/// avoiding the rest of `N[v]` closes an induced cycle through `v`.
fn cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<InducedCycle> {
    let allowed = (g.vertices() - g.closed(v)).with(a).with(b);
    let path = g.shortest_path(a, b, allowed)?;
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(InducedCycle(cycle))
}

fn find_induced_cycle(g: &Graph, hint: PeoViolation) -> InducedCycle {
    if let Some(c) = cycle_through(g, hint.vertex, hint.missing.0, hint.missing.1) {
        return c;
    }
    // Every chordless cycle of length ≥ 4 passes through some vertex whose
    // two cycle neighbours are non-adjacent, so this scan always succeeds on
    // a non-chordal graph.
    for v in 0..g.n() {
        let nb = g.adj(v);
        for a in nb {
            for b in (nb - g.adj(a)) - VertexSet::full(a + 1) {
                if let Some(c) = cycle_through(g, v, a, b) {
                    return c;
                }
            }
        }
    }
    unreachable!("elimination order failed on a chordal graph")
}

/// `Ok(perfect elimination order)` for chordal graphs, otherwise a verified
/// induced cycle of length ≥ 4.
pub fn check_chordal(g: &Graph) -> std::result::Result<Vec<usize>, InducedCycle> {
    let eo = mcs_order(g);
    match eo.failure {
        None => Ok(eo.order),
        Some(fail) => {
            let cycle = find_induced_cycle(g, fail);
            assert!(cycle.verify(g), "extracted cycle {cycle:?} is not induced");
            Err(cycle)
        }
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    mcs_order(g).is_perfect()
}

/// Maximal cliques with a vertex → clique-index lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueList {
    cliques: Vec<VertexSet>,
    /// For each vertex, the indices of the cliques containing it.
    containing: Vec<VertexSet>,
}

impl CliqueList {
    /// Sorts the cliques by their member lists so that indices are stable.
    pub fn new(n: usize, mut cliques: Vec<VertexSet>) -> Self {
        cliques.sort_by_key(|c| c.to_vec());
        cliques.dedup();
        let mut containing = vec![VertexSet::EMPTY; n];
        for (i, c) in cliques.iter().enumerate() {
            for v in *c {
                containing[v].insert(i);
            }
        }
        CliqueList { cliques, containing }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn get(&self, i: usize) -> VertexSet {
        self.cliques[i]
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.cliques.iter().copied()
    }

    /// Node indices of cliques containing `v`.
    pub fn containing(&self, v: usize) -> VertexSet {
        self.containing[v]
    }

    pub fn index_of(&self, c: VertexSet) -> Option<usize> {
        self.cliques.iter().position(|&q| q == c)
    }
}

fn is_maximal_clique(g: &Graph, c: VertexSet) -> bool {
    let common = c.iter().fold(g.vertices(), |acc, v| acc & g.adj(v));
    (common - c).is_empty()
}

/// Maximal cliques of a chordal graph, read off a perfect elimination order.
pub fn maximal_cliques(g: &Graph) -> Result<CliqueList> {
    let peo = check_chordal(g).map_err(Error::NotChordal)?;
    Ok(cliques_from_peo(g, &peo))
}

pub(crate) fn cliques_from_peo(g: &Graph, peo: &[usize]) -> CliqueList {
    let mut later = g.vertices();
    let mut out = Vec::new();
    for &v in peo {
        later.remove(v);
        let c = (g.adj(v) & later).with(v);
        if is_maximal_clique(g, c) {
            out.push(c);
        }
    }
    CliqueList::new(g.n(), out)
}

/// Largest graph accepted by [`maximal_cliques_general`].
pub const GENERAL_CLIQUE_MAX_N: usize = 20;

/// Bron–Kerbosch with pivoting; for arbitrary graphs used by test tooling.
pub fn maximal_cliques_general(g: &Graph) -> Result<CliqueList> {
    if g.n() > GENERAL_CLIQUE_MAX_N {
        return Err(Error::Unsupported {
            what: "general maximal clique enumeration vertex count",
            limit: GENERAL_CLIQUE_MAX_N,
            actual: g.n(),
        });
    }
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    Ok(CliqueList::new(g.n(), out))
}

/// Maximal cliques of the induced subgraph `G[within]`, in parent vertex
/// numbering, sorted by member list. Worst-case exponential; intended for
/// the small subgraphs examined by the sun-system search.
pub fn maximal_cliques_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
    out.sort_by_key(|c| c.to_vec());
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x).iter().max_by_key(|&u| (g.adj(u) & p).len()).unwrap();
    for v in p - g.adj(pivot) {
        bron_kerbosch(g, r.with(v), p & g.adj(v), x & g.adj(v), out);
        p.remove(v);
        x.insert(v);
    }
}

/// A clique tree built as a maximum-weight spanning tree of the clique
/// intersection graph (weight `|Qi ∩ Qj|`). Pairs are taken in decreasing
/// weight, ties by smallest `(i, j)`; zero-weight pairs join components of a
/// disconnected graph.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    let cliques = maximal_cliques(g)?;
    let k = cliques.len();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push(((cliques.get(i) & cliques.get(j)).len(), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut root: Vec<usize> = (0..k).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    for (_, i, j) in pairs {
        let (a, b) = (find(&mut root, i), find(&mut root, j));
        if a != b {
            root[a] = b;
            edges.push((i, j));
        }
    }
    let tree = CliqueTree::new(Arc::new(g.clone()), cliques, edges)?;
    debug_assert!(tree.first_disconnected_vertex().is_none());
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::tree::validate_clique_tree;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn complete_graphs_are_chordal() {
        let k3 = Graph::complete(3).unwrap();
        let eo = mcs_order(&k3);
        assert!(eo.is_perfect());
        // Any order of K3 eliminates perfectly.
        assert!(check_elimination_order(&k3, &[2, 0, 1]).is_none());
    }

    #[test]
    fn c4_fails() {
        let c4 = cycle(4);
        let eo = mcs_order(&c4);
        let fail = eo.failure.expect("C4 has no PEO");
        assert!(!c4.has_edge(fail.missing.0, fail.missing.1));
        let cyc = check_chordal(&c4).unwrap_err();
        assert_eq!(cyc.0.len(), 4);
        assert!(cyc.verify(&c4));
    }

    #[test]
    fn c5_certificate_is_the_cycle() {
        let c5 = cycle(5);
        let cyc = check_chordal(&c5).unwrap_err();
        assert!(cyc.verify(&c5));
        let mut members = cyc.0.clone();
        members.sort();
        assert_eq!(members, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn named_graphs_and_suns_are_chordal() {
        assert!(is_chordal(&families::g1()));
        assert!(is_chordal(&families::g2()));
        assert!(is_chordal(&families::g3()));
        for k in 3..=6 {
            assert!(is_chordal(&families::k_sun(k).unwrap()), "{k}-sun");
        }
    }

    #[test]
    fn cycle_extraction_on_chorded_wheel() {
        // C6 with a pendant chord pattern that forces the fallback scan.
        let mut g = cycle(6);
        g.add_edge(0, 2);
        let cyc = check_chordal(&g).unwrap_err();
        assert!(cyc.verify(&g));
        assert_eq!(cyc.0.len(), 5);
    }

    #[test]
    fn induced_cycle_verifier_rejects_chords() {
        let mut g = cycle(5);
        g.add_edge(0, 2);
        assert!(!InducedCycle(vec![0, 1, 2, 3, 4]).verify(&g));
        assert!(InducedCycle(vec![0, 2, 3, 4]).verify(&g));
        assert!(!InducedCycle(vec![0, 2, 3]).verify(&g));
    }

    #[test]
    fn clique_counts() {
        assert_eq!(maximal_cliques(&Graph::complete(5).unwrap()).unwrap().len(), 1);
        let f = families::f11_8();
        let cl = maximal_cliques(&f).unwrap();
        assert_eq!(cl.len(), 5);
        let core: VertexSet = [0, 1, 2].iter().collect();
        let big: Vec<_> = cl.iter().filter(|c| c.len() == 4).collect();
        assert_eq!(big.len(), 2);
        assert!(big.iter().all(|c| core.is_subset(*c)));
        assert_eq!(cl.iter().filter(|c| c.len() == 3).count(), 3);
    }

    #[test]
    fn sun_cliques_match_brute_force() {
        let sun = families::g2();
        let fast = maximal_cliques(&sun).unwrap();
        // Brute force over all subsets.
        let mut brute = Vec::new();
        for bits in 1u64..(1 << sun.n()) {
            let s = VertexSet::from_bits(bits);
            if sun.is_clique(s) && is_maximal_clique(&sun, s) {
                brute.push(s);
            }
        }
        assert_eq!(fast, CliqueList::new(sun.n(), brute));
        assert_eq!(fast.len(), 4);
        assert_eq!(maximal_cliques_general(&sun).unwrap(), fast);
    }

    #[test]
    fn non_chordal_clique_request_fails() {
        assert!(matches!(maximal_cliques(&cycle(4)), Err(Error::NotChordal(_))));
        assert_eq!(maximal_cliques_general(&cycle(4)).unwrap().len(), 4);
        assert!(matches!(
            maximal_cliques_general(&Graph::empty(21).unwrap()),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn clique_trees() {
        let single = build_clique_tree(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(single.node_count(), 1);
        assert!(single.edges().is_empty());

        let sun = families::g2();
        let t = build_clique_tree(&sun).unwrap();
        assert_eq!(validate_clique_tree(&t).unwrap(), None);
        // Star around the core triangle.
        let core = t.cliques().index_of(VertexSet::from_bits(0b111)).unwrap();
        assert_eq!(t.neighbors(core).len(), 3);

        let disconnected = Graph::from_edge_list(5, &[(0, 1), (2, 3)]).unwrap();
        let t = build_clique_tree(&disconnected).unwrap();
        assert_eq!(t.node_count(), 3);
        assert_eq!(validate_clique_tree(&t).unwrap(), None);
    }
}
