//! Cross-validation suites. Each runs one property over a corpus of graphs
//! and collects the graphs that violate it, in corpus order.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::asteroidal::{contains_induced_odd_sun, find_asteroidal_triples, is_directed_path, is_interval};
use crate::certificate::Certificate;
use crate::chordal::{is_chordal, maximal_cliques};
use crate::error::{Error, Result};
use crate::families::{self, build_ta, check_f11_reconstruction, f11_4k, random_chordal};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::oracle::{enumerate_clique_trees, is_interval_oracle, is_path_graph_oracle};
use crate::recognize::{hierarchy, recognize, recognize_directed_path_via_odd_suns, recognize_oracle, Class, OracleCaps, Recognition};
use crate::set::VertexSet;
use crate::sun::{for_each_sun_system, is_path_graph_via_theorem, RayKind};
use crate::tree::validate_clique_tree;

/// One failing graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// graph6 encoding of the graph.
    pub graph: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    /// Number of checks performed; what counts as one check is per suite.
    pub checked: usize,
    /// Inputs set aside because they exceed an oracle cap or the property
    /// does not apply.
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// graph6 strings of the violating graphs, deduplicated, in order.
    pub fn violating_graphs(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.graph) {
                out.push(v.graph.clone());
            }
        }
        out
    }

    fn absorb(&mut self, g: &Graph, t: Tally) {
        self.checked += t.checked;
        self.skipped += t.skipped;
        let code = to_graph6(g);
        self.violations.extend(t.violations.into_iter().map(|detail| Violation { graph: code.clone(), detail }));
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    skipped: usize,
    violations: Vec<String>,
}

impl Tally {
    fn skip() -> Self {
        Tally { skipped: 1, ..Default::default() }
    }

    fn check(ok: bool, detail: impl FnOnce() -> String) -> Self {
        Tally { checked: 1, skipped: 0, violations: if ok { vec![] } else { vec![detail()] } }
    }
}

fn over<F>(graphs: &[Graph], f: F) -> Result<SuiteReport>
where
    F: Fn(&Graph) -> Result<Tally> + Sync,
{
    let tallies: Vec<Result<Tally>> = graphs.par_iter().map(&f).collect();
    let mut report = SuiteReport::default();
    for (g, t) in graphs.iter().zip(tallies) {
        report.absorb(g, t?);
    }
    Ok(report)
}

/// `None` when the graph exceeds an oracle cap.
fn capped<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::Unsupported { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Which recognizer decides path-graph membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathEngine {
    /// Bad sun system search.
    Characterization,
    /// Clique-path tree search.
    Oracle,
}

fn is_path(g: &Graph, engine: PathEngine) -> Result<Option<bool>> {
    match engine {
        PathEngine::Characterization => Ok(Some(is_path_graph_via_theorem(g)?.is_path())),
        PathEngine::Oracle => Ok(capped(is_path_graph_oracle(g))?.map(|o| o.is_path())),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `count` seeded random chordal graphs on `n` vertices. Sample `i` uses
/// seed `seed + i` and a clique budget cycling through 4..=10.
pub fn random_sample(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    (0..count as u64).map(|i| random_chordal(n, 4 + (i % 7) as usize, seed + i)).collect()
}

/// Class memberships of the three hierarchy witnesses, against the
/// expected rows (interval, directed path, path, chordal).
pub fn witness_hierarchy() -> Result<SuiteReport> {
    let rows = [
        (families::g1(), [false, true, true, true]),
        (families::g2(), [false, false, true, true]),
        (families::g3(), [false, false, false, true]),
    ];
    let mut report = SuiteReport::default();
    for (g, want) in rows {
        let got = hierarchy(&g)?;
        report.absorb(&g, Tally::check(got == want, || format!("memberships {got:?}, expected {want:?}")));
    }
    Ok(report)
}

/// Sun-system characterization against the clique-path tree oracle.
/// Graphs above the oracle's clique cap are skipped.
pub fn sun_systems_vs_oracle(graphs: &[Graph]) -> Result<SuiteReport> {
    over(graphs, |g| {
        let Some(oracle) = is_path(g, PathEngine::Oracle)? else { return Ok(Tally::skip()) };
        let by_suns = is_path(g, PathEngine::Characterization)?.unwrap();
        Ok(Tally::check(by_suns == oracle, || {
            format!("characterization says path={}, oracle says path={}", yes_no(by_suns), yes_no(oracle))
        }))
    })
}

/// Special-connection characterization against "path graph without an
/// induced odd sun", with path membership decided by `engine`.
pub fn directed_path_double(graphs: &[Graph], engine: PathEngine) -> Result<SuiteReport> {
    over(graphs, |g| {
        let Some(path) = is_path(g, engine)? else { return Ok(Tally::skip()) };
        let lhs = is_directed_path(g)?;
        let rhs = path && !contains_induced_odd_sun(g)?;
        Ok(Tally::check(lhs == rhs, || {
            format!("no special triple: {}, path without odd sun: {}", yes_no(lhs), yes_no(rhs))
        }))
    })
}

/// Asteroidal-triple freeness against the clique ordering oracle.
pub fn interval_double(graphs: &[Graph]) -> Result<SuiteReport> {
    over(graphs, |g| {
        let Some(oracle) = capped(is_interval_oracle(g))? else { return Ok(Tally::skip()) };
        let at_free = is_chordal(g) && is_interval(g);
        Ok(Tally::check(at_free == oracle, || format!("AT-free chordal: {}, oracle: {}", yes_no(at_free), yes_no(oracle))))
    })
}

/// For every asteroidal triple and every clique tree (up to `tree_cap`
/// trees per graph), the minimal subtree covering the triple has exactly
/// three leaves, one per triple vertex, and the leaf holding a given vertex
/// is the same clique in every tree. One check per (triple, tree).
pub fn asteroidal_leaves(graphs: &[Graph], tree_cap: usize) -> Result<SuiteReport> {
    over(graphs, |g| {
        let ats = find_asteroidal_triples(g);
        if ats.is_empty() {
            return Ok(Tally::default());
        }
        let Some(trees) = capped(enumerate_clique_trees(g, tree_cap))? else { return Ok(Tally::skip()) };
        let mut tally = Tally { skipped: usize::from(trees.truncated), ..Default::default() };
        for t in &ats {
            let s: VertexSet = t.iter().collect();
            let mut first: Option<[VertexSet; 3]> = None;
            for (i, tree) in trees.trees.iter().enumerate() {
                tally.checked += 1;
                let leaves: Vec<VertexSet> = tree.steiner_subtree(s).leaves().into_iter().map(|q| tree.clique(q)).collect();
                let holder = t.map(|a| leaves.iter().copied().find(|q| q.contains(a)));
                let shaped = leaves.len() == 3 && leaves.iter().all(|q| (*q & s).len() == 1) && holder.iter().all(Option::is_some);
                if !shaped {
                    tally.violations.push(format!("triple {t:?}, tree {i}: covering subtree leaves {leaves:?}"));
                    continue;
                }
                let holder = holder.map(Option::unwrap);
                match first {
                    None => first = Some(holder),
                    Some(h) if h != holder => {
                        tally.violations.push(format!("triple {t:?}, tree {i}: leaf cliques {holder:?} differ from {h:?}"))
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(tally)
    })
}

/// Graphs with an asteroidal triple inside one open neighbourhood must fail
/// the path oracle. One check per such graph.
pub fn at_in_neighbourhood(graphs: &[Graph]) -> Result<SuiteReport> {
    over(graphs, |g| {
        let hit = find_asteroidal_triples(g)
            .into_iter()
            .find_map(|t| (0..g.n()).find(|&x| t.iter().all(|&a| g.has_edge(x, a))).map(|x| (t, x)));
        let Some((t, x)) = hit else { return Ok(Tally::default()) };
        let Some(path) = is_path(g, PathEngine::Oracle)? else { return Ok(Tally::skip()) };
        Ok(Tally::check(!path, || format!("triple {t:?} inside N({x}) yet the oracle finds a clique-path tree")))
    })
}

/// For every asteroidal triple `A` of `f11_4k(k)`: `build_ta` gives a valid
/// clique tree in which `T^v` is a path for every neighbour `v` of `A`; and
/// the oracle rejects the graph. One check per triple plus one per `k`.
pub fn prop44(ks: &[usize]) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for &k in ks {
        let g = f11_4k(k)?;
        let mut tally = Tally::default();
        for t in find_asteroidal_triples(&g) {
            let a: VertexSet = t.iter().collect();
            tally.checked += 1;
            let tree = match build_ta(k, a) {
                Ok(tree) => tree,
                Err(e) => {
                    tally.violations.push(format!("k={k}, triple {}: {e}", g.fmt_set(a)));
                    continue;
                }
            };
            if let Some(v) = validate_clique_tree(&tree)? {
                tally.violations.push(format!("k={k}, triple {}: T^{} disconnected", g.fmt_set(a), g.label(v)));
                continue;
            }
            let nbrs = a.iter().fold(VertexSet::EMPTY, |acc, r| acc | g.adj(r));
            if let Some(v) = nbrs.iter().find(|&v| {
                let nodes = tree.subtree_nodes(v);
                nodes.iter().any(|q| tree.degree_within(q, nodes) > 2)
            }) {
                tally.violations.push(format!("k={k}, triple {}: T^{} is not a path", g.fmt_set(a), g.label(v)));
            }
        }
        tally.checked += 1;
        if is_path_graph_oracle(&g)?.is_path() {
            tally.violations.push(format!("k={k}: oracle finds a clique-path tree"));
        }
        report.absorb(&g, tally);
    }
    Ok(report)
}

/// The `F11(4k)` reconstruction gate for each `k`.
pub fn reconstruction(ks: &[usize]) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for &k in ks {
        let check = check_f11_reconstruction(k)?;
        report.absorb(&f11_4k(k)?, Tally::check(check.passes(), || format!("{check:?}")));
    }
    Ok(report)
}

/// Every certificate produced by either engine, for every class, passes
/// re-verification. One check per certificate; a recognizer run refused
/// by a size cap counts as skipped.
pub fn certificate_soundness(graphs: &[Graph]) -> Result<SuiteReport> {
    over(graphs, |g| {
        let mut certs: Vec<Certificate> = Vec::new();
        let mut tally = Tally::default();
        let mut take = |r: Result<Recognition>| -> Result<()> {
            match capped(r)? {
                Some(r) => certs.extend(r.certificate),
                None => tally.skipped += 1,
            }
            Ok(())
        };
        for class in Class::ALL {
            take(recognize(g, class))?;
            take(recognize_oracle(g, class, OracleCaps::default()))?;
        }
        take(recognize_directed_path_via_odd_suns(g))?;
        for c in certs {
            tally.checked += 1;
            if !c.verify(g) {
                tally.violations.push(format!("{} certificate fails re-verification: {}", c.kind(), c.to_text(g)));
            }
        }
        Ok(tally)
    })
}

/// Path graphs that are themselves non-trivial sun systems with split
/// rays: in every clique tree (up to `tree_cap` per graph), `N[r]` is
/// adjacent to the flower clique containing `N(r)`.
///
/// One check per sun system with at least one applicable split ray. A split
/// ray whose flower clique is not maximal in the whole graph (because
/// `N(r)` is all of it) has nothing to be adjacent to and is counted as
/// skipped.
pub fn split_rays(graphs: &[Graph], tree_cap: usize) -> Result<SuiteReport> {
    over(graphs, |g| {
        if g.n() < 6 || !matches!(is_path(g, PathEngine::Oracle)?, Some(true)) {
            return Ok(Tally::default());
        }
        let cliques = maximal_cliques(g)?;
        let mut systems = Vec::new();
        for_each_sun_system(g, |ss| {
            if ss.host() == g.vertices() && ss.ray_kinds.iter().any(|(_, k)| matches!(k, RayKind::SplitOn(_))) {
                systems.push(ss.clone());
            }
            ControlFlow::Continue(())
        })?;
        if systems.is_empty() {
            return Ok(Tally::default());
        }
        let trees = enumerate_clique_trees(g, tree_cap)?.trees;
        let mut tally = Tally::default();
        for ss in &systems {
            let mut applicable = false;
            for &(r, kind) in &ss.ray_kinds {
                let RayKind::SplitOn(p) = kind else { continue };
                let petal = ss.flower.petal_cliques()[p];
                let (Some(qp), Some(qr)) = (cliques.index_of(petal), cliques.index_of(g.closed(r))) else {
                    tally.skipped += 1;
                    continue;
                };
                applicable = true;
                for (i, tree) in trees.iter().enumerate() {
                    if !tree.adjacent(qp, qr) {
                        tally.violations.push(format!(
                            "F={}, ray {}: tree {i} does not join N[r] to {}",
                            g.fmt_set(ss.flower_vertices),
                            g.label(r),
                            g.fmt_set(petal)
                        ));
                    }
                }
            }
            tally.checked += usize::from(applicable);
        }
        Ok(tally)
    })
}
