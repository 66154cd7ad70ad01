//! Simple undirected graphs on at most 64 vertices.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex, so neighbourhood
/// algebra is a handful of word operations. Labels are display metadata
/// only and do not take part in equality.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { adj: vec![VertexSet::EMPTY; n], labels: None })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.adj[u] = VertexSet::full(n).without(u);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected with the offending edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::EndpointOutOfRange(u, v, n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Panicking variant of [`Graph::try_add_edge`] for generators.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("valid edge");
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    pub fn adj(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N(v)`, or `N[v]` when `closed` is set.
    pub fn neighborhood(&self, v: usize, closed: bool) -> VertexSet {
        assert!(v < self.n(), "vertex {v} out of range");
        if closed {
            self.adj[v].with(v)
        } else {
            self.adj[v]
        }
    }

    /// `N[v]`.
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let later = self.adj[u] - VertexSet::full(u + 1);
            later.iter().map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adj[v]).without(v).is_empty())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    pub fn reach(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = (next & allowed) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced on `V \ removed`, ordered
    /// by smallest member.
    pub fn components_avoiding(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut left = self.vertices() - removed;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            left -= c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_avoiding(VertexSet::EMPTY)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A shortest path from `from` to `to` whose vertices all lie in `allowed`.
    pub fn shortest_path(&self, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
        if !allowed.contains(from) || !allowed.contains(to) {
            return None;
        }
        let mut prev = vec![usize::MAX; self.n()];
        let mut seen = VertexSet::singleton(from);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in (self.adj[v] & allowed) - seen {
                seen.insert(w);
                prev[w] = v;
                queue.push_back(w);
            }
        }
        None
    }

    /// The subgraph induced on `s`, with vertices renumbered in increasing order.
    pub fn induced(&self, s: VertexSet) -> InducedSubgraph {
        let to_parent = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in to_parent.iter().enumerate() {
            index[v] = i;
        }
        let adj = to_parent
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| index[w]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| to_parent.iter().map(|&v| l[v].clone()).collect());
        InducedSubgraph { graph: Graph { adj, labels }, to_parent }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for v in 0..n {
                out[perm[v]] = l[v].clone();
            }
            out
        });
        Graph { adj, labels }
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n();
        let mut g = Graph::empty(n + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(n + u, n + v);
        }
        Ok(g)
    }

    /// Formats a vertex set using labels, e.g. `{a,b,c}`.
    pub fn fmt_set(&self, s: VertexSet) -> String {
        let names: Vec<String> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.label(u), self.label(v)))
            .collect();
        write!(f, "Graph(n={}, [{}])", self.n(), edges.join(" "))
    }
}

/// An induced subgraph together with the map back to the parent's vertex ids.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn parent_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_parent[v]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn p3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(Error::EndpointOutOfRange(0, 3, 3)));
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g, p3());
    }

    #[test]
    fn empty_graph() {
        let g = Graph::from_edge_list(0, &[]).unwrap();
        assert_eq!(g.n(), 0);
        assert!(g.components().is_empty());
        assert!(g.is_connected());
    }

    #[test]
    fn neighborhoods() {
        let g = families::g2();
        let x = 3;
        assert_eq!(g.label(x), "x");
        assert_eq!(g.fmt_set(g.neighborhood(x, false)), "{a,b}");

        let iso = Graph::empty(2).unwrap();
        assert!(iso.neighborhood(0, false).is_empty());
        assert_eq!(iso.neighborhood(0, true), VertexSet::singleton(0));

        let k4 = Graph::complete(4).unwrap();
        for v in 0..4 {
            assert_eq!(k4.neighborhood(v, true), k4.vertices());
        }
    }

    #[test]
    fn components_after_removal() {
        let g = p3();
        let comps = g.components_avoiding(VertexSet::singleton(1));
        assert_eq!(comps, vec![VertexSet::singleton(0), VertexSet::singleton(2)]);
        assert_eq!(g.components_avoiding(VertexSet::EMPTY), vec![g.vertices()]);

        // 3-sun minus N[x] leaves y, z, c in one piece.
        let sun = families::g2();
        let comps = sun.components_avoiding(sun.closed(3));
        assert_eq!(comps.len(), 1);
        assert_eq!(sun.fmt_set(comps[0]), "{c,y,z}");
    }

    #[test]
    fn induced_subgraphs() {
        let g3 = families::g3();
        let top: VertexSet = ["a", "b", "c", "d", "e"]
            .iter()
            .map(|name| g3.labels().unwrap().iter().position(|l| l == name).unwrap())
            .collect();
        let sub = g3.induced(top);
        assert_eq!(sub.graph.edge_count(), 9);
        assert!(!sub.graph.has_edge(2, 4));
        assert_eq!(sub.graph.label(2), "c");
        assert_eq!(sub.parent_set(sub.graph.vertices()), top);

        assert_eq!(g3.induced(VertexSet::EMPTY).graph.n(), 0);
        assert_eq!(g3.induced(g3.vertices()).graph, g3);
    }

    #[test]
    fn clique_and_independence_predicates() {
        let g = families::g2();
        for bits in 0u64..(1 << g.n()) {
            let s = VertexSet::from_bits(bits);
            let k = s.len();
            assert_eq!(g.is_clique(s), g.edges_within(s) == k * k.saturating_sub(1) / 2);
            assert_eq!(g.is_independent(s), g.edges_within(s) == 0);
        }
    }

    #[test]
    fn shortest_path_respects_allowed() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.shortest_path(0, 2, c5.vertices()), Some(vec![0, 1, 2]));
        let allowed = c5.vertices().without(1);
        assert_eq!(c5.shortest_path(0, 2, allowed), Some(vec![0, 4, 3, 2]));
        assert_eq!(c5.shortest_path(0, 2, VertexSet::from_bits(0b101)), None);
    }
}
