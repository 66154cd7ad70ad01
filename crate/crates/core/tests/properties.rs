//! Property tests. Brute-force helpers here share no code with the library
//! searches they check.

use std::ops::ControlFlow;

use pathgraph_core::families::{self, f11_4k, random_chordal, s_directed_pointed, small_chordal_corpus};
use pathgraph_core::oracle::{path_oracle, PathOracleOptions};
use pathgraph_core::sun::{bad_cycle, for_each_sun_system, AuxNode, RayKind};
use pathgraph_core::*;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_chordal(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 1usize..=8, any::<u64>()).prop_map(|(n, b, seed)| random_chordal(n, b, seed).unwrap())
}

fn subset_of(n: usize, bits: u64) -> VertexSet {
    (0..n).filter(|&v| bits >> v & 1 == 1).collect()
}

/// Some subset of four or more vertices induces a connected 2-regular graph.
fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).any(|bits| {
        let s = subset_of(n, bits);
        s.len() >= 4 && s.iter().all(|v| (g.adj(v) & s).len() == 2) && g.reach(s.first().unwrap(), s) == s
    })
}

fn is_induced_cycle(g: &Graph, c: &[usize]) -> bool {
    let s: VertexSet = c.iter().collect();
    c.len() >= 4
        && s.len() == c.len()
        && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
        && s.iter().all(|v| (g.adj(v) & s).len() == 2)
}

/// Connected components by repeated flood fill over explicit edge lists.
fn components_by_edges(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut comp: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for (u, v) in g.edges() {
            let m = comp[u].min(comp[v]);
            if comp[u] != m || comp[v] != m {
                comp[u] = m;
                comp[v] = m;
                changed = true;
            }
        }
    }
    let mut out: Vec<VertexSet> = Vec::new();
    for root in 0..n {
        let s: VertexSet = (0..n).filter(|&v| comp[v] == root).collect();
        if !s.is_empty() {
            out.push(s);
        }
    }
    out
}

fn sorted(mut v: Vec<VertexSet>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = v.drain(..).map(|s| s.to_vec()).collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn clique_and_independence_match_edge_counts(g in arb_graph(9), bits in any::<u64>()) {
        let s = subset_of(g.n(), bits);
        let k = s.len();
        let inside = s.iter().map(|v| (g.adj(v) & s).len()).sum::<usize>() / 2;
        prop_assert_eq!(g.is_clique(s), inside == k * k.saturating_sub(1) / 2);
        prop_assert_eq!(g.is_independent(s), inside == 0);
    }

    #[test]
    fn incomparable_is_mutual_non_containment(a in any::<u64>(), b in any::<u64>()) {
        let (a, b) = (subset_of(64, a), subset_of(64, b));
        prop_assert_eq!(a.incomparable(b), !a.is_subset(b) && !b.is_subset(a));
        prop_assert!(!a.incomparable(a));
    }

    #[test]
    fn components_avoiding_nothing_are_components(g in arb_graph(10)) {
        prop_assert_eq!(sorted(g.components_avoiding(VertexSet::EMPTY)), sorted(components_by_edges(&g)));
        prop_assert_eq!(sorted(g.components()), sorted(components_by_edges(&g)));
    }

    #[test]
    fn chordality_matches_cycle_search(g in arb_graph(7)) {
        prop_assert_eq!(is_chordal(&g), !has_long_induced_cycle(&g));
        if let Err(c) = check_chordal(&g) {
            prop_assert!(is_induced_cycle(&g, &c.0));
        }
    }

    #[test]
    fn clique_tree_is_valid(g in arb_chordal(12)) {
        let t = build_clique_tree(&g).unwrap();
        prop_assert_eq!(validate_clique_tree(&t).unwrap(), None);
        prop_assert!(t.node_count() <= g.n());
    }

    #[test]
    fn pruned_oracle_matches_full_enumeration(g in arb_chordal(9)) {
        let pruned = path_oracle(&g, PathOracleOptions::default()).unwrap().is_path();
        let full = path_oracle(&g, PathOracleOptions { prune: false, ..Default::default() }).unwrap().is_path();
        prop_assert_eq!(pruned, full);
    }

    #[test]
    fn hierarchy_is_monotone(g in arb_chordal(9)) {
        let h = hierarchy(&g).unwrap();
        prop_assert!(h.windows(2).all(|w| !w[0] || w[1]), "{:?}", h);
        let o: Vec<bool> = Class::ALL.iter().map(|&c| recognize_oracle(&g, c, OracleCaps::default()).unwrap().member).collect();
        prop_assert!(o.windows(2).all(|w| !w[0] || w[1]), "{:?}", o);
    }

    #[test]
    fn special_connections_are_symmetric(g in arb_chordal(9), a in any::<usize>(), b in any::<usize>()) {
        let (u, v) = (a % g.n(), b % g.n());
        prop_assume!(u != v);
        let uv = s_connected(&g, u, v).unwrap();
        let vu = s_connected(&g, v, u).unwrap();
        prop_assert_eq!(uv.is_some(), vu.is_some());
        if let Some(c) = uv {
            prop_assert!(c.verify(&g, u, v));
        }
    }

    #[test]
    fn reported_triples_are_asteroidal(g in arb_chordal(10)) {
        for t in find_asteroidal_triples(&g) {
            let s: VertexSet = t.iter().collect();
            prop_assert!(g.is_independent(s));
            prop_assert!(is_asteroidal_set(&g, s).unwrap());
        }
    }

    #[test]
    fn certificates_verify(g in arb_graph(8)) {
        for c in Class::ALL {
            let r = recognize(&g, c).unwrap();
            prop_assert_eq!(r.member, r.certificate.is_none());
            if let Some(cert) = r.certificate {
                prop_assert!(cert.verify(&g), "{}", cert.to_text(&g));
            }
        }
    }

    #[test]
    fn sun_systems_are_well_formed(g in arb_chordal(9)) {
        let mut bad = None;
        for_each_sun_system(&g, |ss| {
            let cliques = maximal_cliques(&g.induced(ss.host()).graph).unwrap();
            let host = g.induced(ss.host());
            for &(r, kind) in &ss.ray_kinds {
                if matches!(kind, RayKind::Intersecting | RayKind::SplitOn(_)) {
                    let closed = (g.adj(r) & ss.host()).with(r);
                    if !cliques.iter().any(|q| host.parent_set(q) == closed) {
                        bad = Some(format!("N[{r}] not maximal in the host"));
                    }
                }
            }
            let aux = build_auxiliary_graph(&g, ss);
            let petals: VertexSet =
                (0..aux.nodes.len()).filter(|&i| matches!(aux.nodes[i], AuxNode::Petal(_))).collect();
            if !aux.graph.is_clique(petals) || (0..aux.graph.n()).any(|i| aux.graph.adj(i).contains(i)) {
                bad = Some("auxiliary graph malformed".into());
            }
            if let Some(b) = bad_cycle(&g, ss) {
                if !Certificate::BadSunSystem(Box::new(b)).verify(&g) {
                    bad = Some("bad sun system does not re-verify".into());
                }
            }
            if bad.is_some() { ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
        }).unwrap();
        prop_assert!(bad.is_none(), "{:?}", bad);
    }
}

/// The two cliques through the core that every ray clique hangs from, in
/// every clique-path tree of a path-graph sun system.
#[test]
fn ray_cliques_hang_from_two_core_cliques() {
    let mut graphs = small_chordal_corpus(7).unwrap();
    graphs.retain(|g| g.n() >= 6);
    let mut checked = 0;
    for g in &graphs {
        for ss_host in sun_hosts(g) {
            let (h, ss) = ss_host;
            let hg = &h.graph;
            if !is_path_graph_oracle(hg).unwrap().is_path() {
                continue;
            }
            let trees = oracle::enumerate_clique_trees(hg, 10_000).unwrap().trees;
            let core = h.induced_core(&ss);
            for t in trees.iter().filter(|t| is_clique_path_tree(t).is_none()) {
                let ray_nodes: Vec<usize> = ss
                    .ray_kinds
                    .iter()
                    .filter(|(_, k)| !matches!(k, RayKind::Other))
                    .map(|&(r, _)| t.cliques().index_of(h.closed_local(r)).unwrap())
                    .collect();
                let through_core: Vec<usize> = (0..t.node_count()).filter(|&q| core.is_subset(t.clique(q))).collect();
                let found = through_core.iter().any(|&a| {
                    through_core.iter().any(|&b| ray_nodes.iter().all(|&q| t.adjacent(q, a) || t.adjacent(q, b)))
                });
                assert!(found, "{}", to_graph6(hg));
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

/// Three or more split petals force a non-path host.
#[test]
fn three_split_petals_rule_out_path() {
    let mut checked = 0;
    let built = [
        split_petal_sun(3, 1, &[0, 1, 2]),
        split_petal_sun(2, 1, &[0, 1, 0]),
        split_petal_sun(3, 2, &[0, 1, 2]),
        split_petal_sun(2, 2, &[0, 0, 1]),
    ];
    for g in small_chordal_corpus(7).unwrap().iter().chain(random_pool().iter()).chain(built.iter()) {
        for_each_sun_system(g, |ss| {
            if ss.split_petals().len() >= 3 {
                let host = g.induced(ss.host()).graph;
                assert!(!is_path_graph_oracle(&host).unwrap().is_path(), "{}", to_graph6(g));
                checked += 1;
            }
            ControlFlow::Continue(())
        })
        .unwrap();
    }
    assert!(checked > 0);
}

/// Bad sun systems in the exhaustive corpus all sit in non-path hosts.
#[test]
fn bad_sun_systems_in_corpus_have_non_path_hosts() {
    for g in small_chordal_corpus(7).unwrap() {
        for_each_sun_system(&g, |ss| {
            if bad_cycle(&g, ss).is_some() {
                let host = g.induced(ss.host()).graph;
                assert!(!is_path_graph_oracle(&host).unwrap().is_path(), "{}", to_graph6(&g));
            }
            ControlFlow::Continue(())
        })
        .unwrap();
    }
}

/// A path graph on eight vertices that is itself a sun system whose
/// auxiliary graph has a triangle: three rays all split on one clique, two
/// of them sharing a core vertex.
#[test]
fn path_graph_with_odd_auxiliary_cycle() {
    let g = Graph::from_edge_list(
        8,
        &[
            (0, 5), (0, 6), (1, 3), (1, 5), (1, 6), (2, 4), (2, 6), (3, 4),
            (3, 5), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7),
        ],
    )
    .unwrap();
    let ss = is_sun_system(&g, [0, 3, 4, 5, 6].into_iter().collect(), [1, 2, 7].into_iter().collect()).unwrap();
    let b = bad_cycle(&g, &ss).expect("odd cycle");
    assert!(Certificate::BadSunSystem(Box::new(b)).verify(&g));
    let PathOracle::CliquePathTree(t) = is_path_graph_oracle(&g).unwrap() else { panic!("oracle rejects") };
    assert_eq!(validate_clique_tree(&t).unwrap(), None);
    assert_eq!(is_clique_path_tree(&t), None);
}

#[test]
fn type4_shape() {
    for t in 1..=4 {
        let p = s_directed_pointed(4, t).unwrap();
        let g = &p.graph;
        let zc = 2 * t + 3;
        assert_eq!(g.n(), 4 * t + 5);
        let z: VertexSet = (2..2 + zc).collect();
        assert!(g.is_clique(z));
        // z'_k for k = 0..=2t+1; z'_0 = u and z'_{2t+1} = v.
        let primes: Vec<usize> = std::iter::once(p.u)
            .chain((1..=2 * t).map(|k| 2 + zc + k - 1))
            .chain(std::iter::once(p.v))
            .collect();
        for (k, &zp) in primes.iter().enumerate() {
            let want: VertexSet = [2 + k, 3 + k].into_iter().collect();
            assert_eq!(g.adj(zp), want, "t={t}, k={k}");
        }
    }
}

#[test]
fn f11_members_contain_odd_suns() {
    for k in 2..=4 {
        let g = f11_4k(k).unwrap();
        let sun = find_induced_odd_sun(&g).unwrap().expect("odd sun");
        assert!(sun.verify(&g));
        assert!(!is_directed_path(&g).unwrap());
    }
    assert!(families::check_f11_reconstruction(2).unwrap().passes());
}

#[test]
fn corpus_clique_trees_are_valid() {
    for g in small_chordal_corpus(7).unwrap() {
        let t = build_clique_tree(&g).unwrap();
        assert_eq!(validate_clique_tree(&t).unwrap(), None);
        assert!(t.node_count() <= g.n());
    }
}

#[test]
fn corpus_hierarchy_is_monotone() {
    for g in small_chordal_corpus(7).unwrap() {
        let h = hierarchy(&g).unwrap();
        assert!(h.windows(2).all(|w| !w[0] || w[1]), "{} {h:?}", to_graph6(&g));
    }
}

/// A flower of three cliques sharing a core of `core` vertices, each with
/// `excl` private vertices, and one ray per clique adjacent to the first
/// private vertex and to core vertex `ray_core[i]`.
fn split_petal_sun(core: usize, excl: usize, ray_core: &[usize; 3]) -> Graph {
    let n = core + 3 * excl + 3;
    let mut g = Graph::empty(n).unwrap();
    let private = |i: usize, j: usize| core + i * excl + j;
    for i in 0..3 {
        let clique: Vec<usize> = (0..core).chain((0..excl).map(|j| private(i, j))).collect();
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                g.add_edge(u, v);
            }
        }
        let r = core + 3 * excl + i;
        g.add_edge(r, private(i, 0));
        g.add_edge(r, ray_core[i]);
    }
    g
}

fn random_pool() -> Vec<Graph> {
    (0..300).map(|s| random_chordal(10, 4 + (s % 7) as usize, s).unwrap()).collect()
}

struct Host {
    graph: Graph,
    to_parent: Vec<usize>,
}

impl Host {
    fn local(&self, v: usize) -> usize {
        self.to_parent.iter().position(|&p| p == v).unwrap()
    }

    fn closed_local(&self, r: usize) -> VertexSet {
        self.graph.closed(self.local(r))
    }

    fn induced_core(&self, ss: &sun::SunSystem) -> VertexSet {
        ss.flower.core().iter().map(|v| self.local(v)).collect()
    }
}

/// Every non-trivial sun system of `g` with its host as a standalone graph.
fn sun_hosts(g: &Graph) -> Vec<(Host, sun::SunSystem)> {
    let mut out = Vec::new();
    for_each_sun_system(g, |ss| {
        let h = g.induced(ss.host());
        out.push((Host { graph: h.graph, to_parent: h.to_parent }, ss.clone()));
        ControlFlow::Continue(())
    })
    .unwrap();
    out
}
