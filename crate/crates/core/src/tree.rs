//! Clique trees: validation, clique-path checks, minimal covering subtrees
//! and DOT export.

use std::sync::Arc;

use crate::chordal::{maximal_cliques, CliqueList};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A tree whose nodes are labelled by maximal cliques of `graph`.
///
/// Construction only checks that the edges form a tree; whether each
/// vertex's cliques induce a connected subtree is what
/// [`validate_clique_tree`] decides.
#[derive(Clone, Debug)]
pub struct CliqueTree {
    graph: Arc<Graph>,
    cliques: CliqueList,
    edges: Vec<(usize, usize)>,
    nbrs: Vec<VertexSet>,
}

impl CliqueTree {
    pub fn new(graph: Arc<Graph>, cliques: CliqueList, edges: Vec<(usize, usize)>) -> Result<Self> {
        let k = cliques.len();
        let mut nbrs = vec![VertexSet::EMPTY; k];
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= k || b >= k || a == b {
                return Err(Error::InvalidParameter(format!("bad tree edge ({a}, {b})")));
            }
            nbrs[a].insert(b);
            nbrs[b].insert(a);
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let tree = CliqueTree { graph, cliques, edges: norm, nbrs };
        if k > 0 && (tree.edges.len() != k - 1 || !tree.nodes_connected(VertexSet::full(k))) {
            return Err(Error::InvalidParameter(format!("{} edges do not form a tree on {k} nodes", tree.edges.len())));
        }
        Ok(tree)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn cliques(&self) -> &CliqueList {
        &self.cliques
    }

    pub fn clique(&self, node: usize) -> VertexSet {
        self.cliques.get(node)
    }

    pub fn node_count(&self) -> usize {
        self.cliques.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> VertexSet {
        self.nbrs[node]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.nbrs[a].contains(b)
    }

    /// Nodes of `T^v`.
    pub fn subtree_nodes(&self, v: usize) -> VertexSet {
        self.cliques.containing(v)
    }

    /// Whether `nodes` induces a connected subgraph of the tree.
    pub fn nodes_connected(&self, nodes: VertexSet) -> bool {
        let Some(start) = nodes.first() else { return true };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for x in frontier {
                next |= self.nbrs[x];
            }
            next = (next & nodes) - seen;
            seen |= next;
            frontier = next;
        }
        seen == nodes
    }

    /// Degree of `node` counting only neighbours inside `nodes`.
    pub fn degree_within(&self, node: usize, nodes: VertexSet) -> usize {
        (self.nbrs[node] & nodes).len()
    }

    /// First vertex whose `T^v` is disconnected.
    pub fn first_disconnected_vertex(&self) -> Option<usize> {
        (0..self.graph.n()).find(|&v| !self.nodes_connected(self.subtree_nodes(v)))
    }

    /// First vertex whose `T^v` has a node of degree ≥ 3 inside `T^v`.
    /// Assumes a valid clique tree, where connected plus max degree 2 means path.
    pub fn first_non_path_vertex(&self) -> Option<usize> {
        (0..self.graph.n()).find(|&v| {
            let nodes = self.subtree_nodes(v);
            nodes.iter().any(|q| self.degree_within(q, nodes) > 2)
        })
    }

    /// `T[S]`: the smallest subtree whose cliques together cover `s`.
    ///
    /// Obtained by repeatedly deleting leaves that are not needed for
    /// coverage. Since every `T^v` is a subtree, the inclusion-minimal result
    /// is also of minimum size.
    pub fn steiner_subtree(&self, s: VertexSet) -> SubtreeView {
        let mut nodes = VertexSet::full(self.node_count());
        loop {
            let covered = |nodes: VertexSet| s.is_subset(nodes.iter().fold(VertexSet::EMPTY, |a, q| a | self.clique(q)));
            let removable = nodes.iter().find(|&q| self.degree_within(q, nodes) <= 1 && nodes.len() > 1 && covered(nodes.without(q)));
            match removable {
                Some(q) => nodes.remove(q),
                None => break,
            }
        }
        let edges = self.edges.iter().copied().filter(|&(a, b)| nodes.contains(a) && nodes.contains(b)).collect();
        SubtreeView { nodes, edges }
    }

    /// Graphviz rendering. Nodes are listed in index order and labelled by
    /// the sorted vertex names of their clique.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph clique_tree {\n");
        for i in 0..self.node_count() {
            let mut names: Vec<String> = self.clique(i).iter().map(|v| self.graph.label(v)).collect();
            names.sort();
            out.push_str(&format!("  q{i} [label=\"{}\"];\n", names.join(" ")));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  q{a} -- q{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A subtree of a clique tree given by its node set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeView {
    pub nodes: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

impl SubtreeView {
    /// Nodes of degree ≤ 1 within the subtree (a single node counts as a leaf).
    pub fn leaves(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .filter(|&q| self.edges.iter().filter(|&&(a, b)| a == q || b == q).count() <= 1)
            .collect()
    }
}

/// Checks the clique-tree property. `Ok(None)` means valid; `Ok(Some(v))`
/// names a vertex whose cliques do not form a connected subtree. Fails when
/// the nodes are not exactly the maximal cliques of the graph.
pub fn validate_clique_tree(t: &CliqueTree) -> Result<Option<usize>> {
    let expected = maximal_cliques(t.graph())?;
    if &expected != t.cliques() {
        return Err(Error::CliqueMismatch);
    }
    Ok(t.first_disconnected_vertex())
}

/// `None` when every `T^v` is a path, else an offending vertex.
pub fn is_clique_path_tree(t: &CliqueTree) -> Option<usize> {
    t.first_non_path_vertex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::build_clique_tree;
    use crate::families;

    fn sun_tree(edges: &[(usize, usize)]) -> CliqueTree {
        let sun = families::g2();
        let cl = maximal_cliques(&sun).unwrap();
        CliqueTree::new(Arc::new(sun), cl, edges.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_trees() {
        let sun = families::g2();
        let cl = maximal_cliques(&sun).unwrap();
        assert!(CliqueTree::new(Arc::new(sun.clone()), cl.clone(), vec![(0, 1), (1, 2)]).is_err());
        assert!(CliqueTree::new(Arc::new(sun), cl, vec![(0, 1), (1, 2), (2, 0)]).is_err());
    }

    #[test]
    fn sun_path_arrangement_still_valid() {
        // Cliques of the 3-sun sorted by member list: core {a,b,c} first.
        let sun = families::g2();
        let cl = maximal_cliques(&sun).unwrap();
        assert_eq!(cl.get(0), VertexSet::from_bits(0b111));
        // ray - core - ray - ray
        let t = sun_tree(&[(1, 0), (0, 2), (2, 3)]);
        let verdict = validate_clique_tree(&t).unwrap();
        // The third ray triangle hangs off another ray triangle, so the
        // core vertex it shares with the core is cut off.
        assert!(verdict.is_some());
        let star = sun_tree(&[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(validate_clique_tree(&star).unwrap(), None);
    }

    #[test]
    fn sun_star_is_clique_path_tree() {
        let star = sun_tree(&[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(is_clique_path_tree(&star), None);
        // Core vertex a: core clique plus two ray cliques.
        assert_eq!(star.subtree_nodes(0).len(), 3);
    }

    #[test]
    fn disconnected_vertex_reported() {
        // Path a-b-c-d: cliques ab, bc, cd. Tree ab - cd - bc separates b.
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cl = maximal_cliques(&p4).unwrap();
        let t = CliqueTree::new(Arc::new(p4), cl, vec![(0, 2), (2, 1)]).unwrap();
        assert_eq!(validate_clique_tree(&t).unwrap(), Some(1));
    }

    #[test]
    fn clique_mismatch() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let wrong = CliqueList::new(3, vec![VertexSet::from_bits(0b111)]);
        let t = CliqueTree::new(Arc::new(p3), wrong, vec![]).unwrap();
        assert_eq!(validate_clique_tree(&t), Err(Error::CliqueMismatch));
    }

    #[test]
    fn steiner_subtrees() {
        let star = sun_tree(&[(0, 1), (0, 2), (0, 3)]);
        let sun = families::g2();
        let rays: VertexSet = [3, 4, 5].iter().collect();
        let view = star.steiner_subtree(rays);
        assert_eq!(view.nodes, VertexSet::full(4));
        assert_eq!(view.leaves(), vec![1, 2, 3]);

        let inside = star.steiner_subtree(VertexSet::from_bits(0b011));
        assert_eq!(inside.nodes.len(), 1);
        assert_eq!(star.steiner_subtree(sun.vertices()).nodes, VertexSet::full(4));
    }

    #[test]
    fn dot_export_is_deterministic() {
        let t = build_clique_tree(&families::g2()).unwrap();
        let dot = t.to_dot();
        assert!(dot.starts_with("graph clique_tree {\n  q0 [label=\"a b c\"];"));
        assert_eq!(dot, build_clique_tree(&families::g2()).unwrap().to_dot());
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
