//! Brute-force oracles: enumeration of all clique trees, the clique-path
//! tree search for path graphs, and the clique-ordering search for interval
//! graphs.
//!
//! Clique trees are enumerated as spanning trees of the clique intersection
//! graph, filtered by the clique-tree property itself. For a disconnected
//! graph the intersection graph has one component per graph component; those
//! are chained by fixed zero-weight edges (first clique of each component to
//! the first clique of the next), which no `T^v` ever uses.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::chordal::{check_chordal, cliques_from_peo, CliqueList, InducedCycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::tree::CliqueTree;

/// Default cap on maximal cliques for tree enumeration and the path oracle.
pub const MAX_TREE_CLIQUES: usize = 12;
/// Default cap on maximal cliques for the interval oracle.
pub const MAX_INTERVAL_CLIQUES: usize = 10;

struct SpanningSearch<'a> {
    cliques: &'a CliqueList,
    /// Candidate edges, lexicographic.
    cand: Vec<(usize, usize)>,
    forced: Vec<(usize, usize)>,
    /// Vertices lying in at least two cliques; only their `T^v` constrain anything.
    shared: Vec<usize>,
    prune_validity: bool,
    prune_path: bool,
    require_path: bool,
    search_nodes: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Undecided,
    In,
    Out,
}

impl SpanningSearch<'_> {
    fn new(cliques: &CliqueList, n: usize) -> SpanningSearch<'_> {
        let k = cliques.len();
        let mut cand = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if cliques.get(i).intersects(cliques.get(j)) {
                    cand.push((i, j));
                }
            }
        }
        // Components of the intersection graph, chained in order.
        let mut comp_rep = Vec::new();
        let mut seen = VertexSet::EMPTY;
        for i in 0..k {
            if seen.contains(i) {
                continue;
            }
            let mut comp = VertexSet::singleton(i);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for x in frontier {
                    for &(a, b) in &cand {
                        if a == x {
                            next.insert(b);
                        } else if b == x {
                            next.insert(a);
                        }
                    }
                }
                next -= comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comp_rep.push(i);
        }
        let forced = comp_rep.windows(2).map(|w| (w[0], w[1])).collect();
        let shared = (0..n).filter(|&v| cliques.containing(v).len() >= 2).collect();
        SpanningSearch {
            cliques,
            cand,
            forced,
            shared,
            prune_validity: true,
            prune_path: false,
            require_path: false,
            search_nodes: 0,
        }
    }

    fn k(&self) -> usize {
        self.cliques.len()
    }

    fn adjacency(&self, state: &[EdgeState], allow_undecided: bool) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.k()];
        for &(a, b) in &self.forced {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for (e, &(a, b)) in self.cand.iter().enumerate() {
            if state[e] == EdgeState::In || (allow_undecided && state[e] == EdgeState::Undecided) {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj
    }

    fn connected(adj: &[VertexSet], nodes: VertexSet) -> bool {
        let Some(s) = nodes.first() else { return true };
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for x in frontier {
                next |= adj[x];
            }
            next = (next & nodes) - seen;
            seen |= next;
            frontier = next;
        }
        seen == nodes
    }

    /// Still possible to complete into a spanning tree satisfying the
    /// enabled constraints?
    fn feasible(&self, state: &[EdgeState]) -> bool {
        let k = self.k();
        let optimistic = self.adjacency(state, true);
        if !Self::connected(&optimistic, VertexSet::full(k)) {
            return false;
        }
        if self.prune_validity {
            // A path between two nodes of T^v must stay inside T^v.
            for &v in &self.shared {
                if !Self::connected(&optimistic, self.cliques.containing(v)) {
                    return false;
                }
            }
        }
        if self.prune_path {
            // Adding edges never lowers a degree.
            let fixed = self.adjacency(state, false);
            for &v in &self.shared {
                let nodes = self.cliques.containing(v);
                if nodes.iter().any(|q| (fixed[q] & nodes).len() > 2) {
                    return false;
                }
            }
        }
        true
    }

    fn accept(&self, adj: &[VertexSet]) -> bool {
        for &v in &self.shared {
            let nodes = self.cliques.containing(v);
            if !Self::connected(adj, nodes) {
                return false;
            }
            if self.require_path && nodes.iter().any(|q| (adj[q] & nodes).len() > 2) {
                return false;
            }
        }
        true
    }

    fn edges_of(&self, state: &[EdgeState]) -> Vec<(usize, usize)> {
        let mut out = self.forced.clone();
        out.extend(self.cand.iter().enumerate().filter(|(e, _)| state[*e] == EdgeState::In).map(|(_, &p)| p));
        out.sort_unstable();
        out
    }

    /// Include-first / exclude-second enumeration over candidate edges.
    fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(Vec<(usize, usize)>) -> ControlFlow<()>,
    {
        let k = self.k();
        if k <= 1 {
            return visit(Vec::new());
        }
        let target = k - 1 - self.forced.len();
        let mut state = vec![EdgeState::Undecided; self.cand.len()];
        let mut comp: Vec<usize> = (0..k).collect();
        for &(a, b) in &self.forced.clone() {
            relabel(&mut comp, a, b);
        }
        self.recurse(0, 0, target, &mut state, &comp, visit)
    }

    fn recurse<F>(
        &mut self,
        idx: usize,
        included: usize,
        target: usize,
        state: &mut Vec<EdgeState>,
        comp: &[usize],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(Vec<(usize, usize)>) -> ControlFlow<()>,
    {
        self.search_nodes += 1;
        if included == target {
            for s in state.iter_mut().skip(idx) {
                *s = EdgeState::Out;
            }
            let adj = self.adjacency(state, false);
            let flow = if self.accept(&adj) { visit(self.edges_of(state)) } else { ControlFlow::Continue(()) };
            for s in state.iter_mut().skip(idx) {
                *s = EdgeState::Undecided;
            }
            return flow;
        }
        if idx == self.cand.len() {
            return ControlFlow::Continue(());
        }
        let (a, b) = self.cand[idx];
        if comp[a] != comp[b] {
            state[idx] = EdgeState::In;
            if self.feasible(state) {
                let mut next = comp.to_vec();
                relabel(&mut next, a, b);
                self.recurse(idx + 1, included + 1, target, state, &next, visit)?;
            }
        }
        state[idx] = EdgeState::Out;
        if self.feasible(state) {
            self.recurse(idx + 1, included, target, state, comp, visit)?;
        }
        state[idx] = EdgeState::Undecided;
        ControlFlow::Continue(())
    }
}

fn relabel(comp: &mut [usize], a: usize, b: usize) {
    let (from, to) = (comp[b], comp[a]);
    for c in comp.iter_mut() {
        if *c == from {
            *c = to;
        }
    }
}

fn chordal_cliques(g: &Graph, cap: usize, what: &'static str) -> std::result::Result<CliqueList, OracleStop> {
    let peo = check_chordal(g).map_err(OracleStop::NotChordal)?;
    let cliques = cliques_from_peo(g, &peo);
    if cliques.len() > cap {
        return Err(OracleStop::TooLarge(Error::Unsupported { what, limit: cap, actual: cliques.len() }));
    }
    Ok(cliques)
}

enum OracleStop {
    NotChordal(InducedCycle),
    TooLarge(Error),
}

/// Result of [`enumerate_clique_trees`].
#[derive(Clone, Debug)]
pub struct CliqueTreeEnumeration {
    pub trees: Vec<CliqueTree>,
    /// Set when enumeration stopped at the cap with trees left unvisited.
    pub truncated: bool,
}

/// All clique trees of a chordal graph (up to `cap` of them), in the
/// deterministic order of the include-first edge search.
pub fn enumerate_clique_trees(g: &Graph, cap: usize) -> Result<CliqueTreeEnumeration> {
    enumerate_clique_trees_with(g, cap, MAX_TREE_CLIQUES)
}

pub fn enumerate_clique_trees_with(g: &Graph, cap: usize, max_cliques: usize) -> Result<CliqueTreeEnumeration> {
    let cliques = match chordal_cliques(g, max_cliques, "clique tree enumeration clique count") {
        Ok(c) => c,
        Err(OracleStop::NotChordal(c)) => return Err(Error::NotChordal(c)),
        Err(OracleStop::TooLarge(e)) => return Err(e),
    };
    let graph = Arc::new(g.clone());
    let mut search = SpanningSearch::new(&cliques, g.n());
    let mut trees = Vec::new();
    let mut truncated = false;
    let _ = search.run(&mut |edges| {
        if trees.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        trees.push(CliqueTree::new(graph.clone(), cliques.clone(), edges).expect("spanning tree"));
        ControlFlow::Continue(())
    });
    Ok(CliqueTreeEnumeration { trees, truncated })
}

/// Outcome of the clique-path tree search.
#[derive(Clone, Debug)]
pub enum PathOracle {
    /// A clique tree in which every `T^v` is a path.
    CliquePathTree(CliqueTree),
    NotChordal(InducedCycle),
    /// Every clique tree was examined (implicitly, through pruning) and none
    /// is a clique-path tree.
    Exhausted { cliques: usize, search_nodes: usize },
}

impl PathOracle {
    pub fn is_path(&self) -> bool {
        matches!(self, PathOracle::CliquePathTree(_))
    }
}

/// Options for [`path_oracle`].
#[derive(Clone, Copy, Debug)]
pub struct PathOracleOptions {
    pub max_cliques: usize,
    /// Cut partial trees that already break connectivity or give some `T^v`
    /// a node of degree three. Turning this off filters complete spanning
    /// trees only.
    pub prune: bool,
}

impl Default for PathOracleOptions {
    fn default() -> Self {
        PathOracleOptions { max_cliques: MAX_TREE_CLIQUES, prune: true }
    }
}

/// Decides whether `g` has a clique-path tree.
pub fn is_path_graph_oracle(g: &Graph) -> Result<PathOracle> {
    path_oracle(g, PathOracleOptions::default())
}

pub fn path_oracle(g: &Graph, opts: PathOracleOptions) -> Result<PathOracle> {
    let cliques = match chordal_cliques(g, opts.max_cliques, "path oracle clique count") {
        Ok(c) => c,
        Err(OracleStop::NotChordal(c)) => return Ok(PathOracle::NotChordal(c)),
        Err(OracleStop::TooLarge(e)) => return Err(e),
    };
    let mut search = SpanningSearch::new(&cliques, g.n());
    search.prune_validity = opts.prune;
    search.prune_path = opts.prune;
    search.require_path = true;
    let mut found = None;
    let _ = search.run(&mut |edges| {
        found = Some(edges);
        ControlFlow::Break(())
    });
    Ok(match found {
        Some(edges) => {
            let tree = CliqueTree::new(Arc::new(g.clone()), cliques, edges).expect("spanning tree");
            debug_assert!(tree.first_disconnected_vertex().is_none() && tree.first_non_path_vertex().is_none());
            PathOracle::CliquePathTree(tree)
        }
        None => PathOracle::Exhausted { cliques: cliques.len(), search_nodes: search.search_nodes },
    })
}

/// A linear order of the maximal cliques in which every vertex's cliques are
/// consecutive, or `None` when no such order exists (or `g` is not chordal).
pub fn interval_clique_order(g: &Graph) -> Result<Option<Vec<VertexSet>>> {
    interval_clique_order_with(g, MAX_INTERVAL_CLIQUES)
}

pub fn interval_clique_order_with(g: &Graph, max_cliques: usize) -> Result<Option<Vec<VertexSet>>> {
    let cliques = match chordal_cliques(g, max_cliques, "interval oracle clique count") {
        Ok(c) => c,
        Err(OracleStop::NotChordal(_)) => return Ok(None),
        Err(OracleStop::TooLarge(e)) => return Err(e),
    };
    let mut order = Vec::with_capacity(cliques.len());
    Ok(place(cliques.as_slice(), VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY, &mut order).then_some(order))
}

/// Extends `order`; a vertex that already appeared must also be in the last
/// placed clique, otherwise its run of cliques would be broken.
fn place(cliques: &[VertexSet], used: VertexSet, seen: VertexSet, last: VertexSet, order: &mut Vec<VertexSet>) -> bool {
    if order.len() == cliques.len() {
        return true;
    }
    for (i, &q) in cliques.iter().enumerate() {
        if used.contains(i) || !(q & seen).is_subset(last) {
            continue;
        }
        order.push(q);
        if place(cliques, used.with(i), seen | q, q, order) {
            return true;
        }
        order.pop();
    }
    false
}

pub fn is_interval_oracle(g: &Graph) -> Result<bool> {
    Ok(interval_clique_order(g)?.is_some())
}
