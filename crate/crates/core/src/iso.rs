//! Canonical codes for small graphs and induced-subgraph matching.

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Largest graph [`canonical_code`] will accept.
pub const CANONICAL_MAX_N: usize = 10;

/// Stable colour refinement starting from degrees. The resulting colour
/// classes and their order depend only on the isomorphism type.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.adj(v).iter().map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// Colour required at each position of the canonical order.
    slot_color: Vec<usize>,
    color: Vec<usize>,
    order: Vec<usize>,
    best_bits: Option<Vec<bool>>,
    best_order: Vec<usize>,
    bits: Vec<bool>,
}

impl CanonSearch<'_> {
    /// Places a vertex at position `pos`; prefixes already below the best
    /// complete code are cut.
    fn search(&mut self, pos: usize, used: VertexSet) {
        let n = self.g.n();
        if pos == n {
            if self.best_bits.as_ref().is_none_or(|b| self.bits > *b) {
                self.best_bits = Some(self.bits.clone());
                self.best_order = self.order.clone();
            }
            return;
        }
        for v in 0..n {
            if used.contains(v) || self.color[v] != self.slot_color[pos] {
                continue;
            }
            let start = self.bits.len();
            for &u in &self.order {
                self.bits.push(self.g.has_edge(u, v));
            }
            let behind = matches!(&self.best_bits, Some(b) if self.bits[..] < b[..self.bits.len()]);
            if !behind {
                self.order.push(v);
                self.search(pos + 1, used.with(v));
                self.order.pop();
            }
            self.bits.truncate(start);
        }
    }
}

/// Returns `(canonical graph, order)` where `order[i]` is the original vertex
/// placed at canonical position `i`.
pub fn canonical_form(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::Unsupported { what: "canonical_code vertex count", limit: CANONICAL_MAX_N, actual: n });
    }
    let color = refine(g);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut s = CanonSearch {
        g,
        slot_color,
        color,
        order: Vec::with_capacity(n),
        best_bits: None,
        best_order: Vec::new(),
        bits: Vec::new(),
    };
    s.search(0, VertexSet::EMPTY);
    let order = s.best_order;
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    Ok((g.relabel(&perm), order))
}

/// A byte string equal for two graphs iff they are isomorphic (n ≤ 10).
///
/// Built from colour refinement followed by a search over orderings
/// consistent with the refined classes for the lexicographically largest
/// adjacency string; the code is the graph6 encoding of that relabelling.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    let (canon, _) = canonical_form(g)?;
    Ok(to_graph6(&canon).into_bytes())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// Induced-subgraph matcher: finds an injective map `pattern -> host` whose
/// image lies in `within`, preserving both edges and non-edges, and honouring
/// the fixed `pins` (pattern vertex, host vertex).
pub struct InducedMatcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    within: VertexSet,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl<'a> InducedMatcher<'a> {
    pub fn new(host: &'a Graph, pattern: &'a Graph, within: VertexSet) -> Self {
        InducedMatcher { host, pattern, within, order: Vec::new(), map: Vec::new() }
    }

    /// Pattern vertices ordered so each (after the pins) has as many earlier
    /// neighbours as possible; keeps candidate sets small.
    fn plan(&mut self, pinned: VertexSet) {
        let k = self.pattern.n();
        let mut placed = pinned;
        let mut order: Vec<usize> = pinned.to_vec();
        while order.len() < k {
            let next = (0..k)
                .filter(|&p| !placed.contains(p))
                .max_by_key(|&p| ((self.pattern.adj(p) & placed).len(), self.pattern.degree(p), std::cmp::Reverse(p)))
                .unwrap();
            placed.insert(next);
            order.push(next);
        }
        self.order = order;
    }

    pub fn find(&mut self, pins: &[(usize, usize)]) -> Option<Vec<usize>> {
        let k = self.pattern.n();
        if k > self.within.len() {
            return None;
        }
        let pinned: VertexSet = pins.iter().map(|&(p, _)| p).collect();
        self.plan(pinned);
        self.map = vec![usize::MAX; k];
        let mut used = VertexSet::EMPTY;
        for &(p, h) in pins {
            if !self.within.contains(h) || used.contains(h) {
                return None;
            }
            self.map[p] = h;
            used.insert(h);
        }
        // Pins must be mutually consistent.
        for &(p, h) in pins {
            for &(q, g) in pins {
                if p < q && self.pattern.has_edge(p, q) != self.host.has_edge(h, g) {
                    return None;
                }
            }
        }
        if self.extend(pins.len(), used) {
            Some(self.map.clone())
        } else {
            None
        }
    }

    fn extend(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.within - used;
        for &q in &self.order[..depth] {
            let hq = self.map[q];
            if self.pattern.has_edge(p, q) {
                cand &= self.host.adj(hq);
            } else {
                cand -= self.host.adj(hq);
            }
        }
        let need = self.pattern.degree(p);
        for h in cand {
            if (self.host.adj(h) & self.within).len() < need {
                continue;
            }
            self.map[p] = h;
            if self.extend(depth + 1, used.with(h)) {
                return true;
            }
        }
        self.map[p] = usize::MAX;
        false
    }
}

/// Convenience wrapper around [`InducedMatcher`].
pub fn find_induced(host: &Graph, pattern: &Graph, pins: &[(usize, usize)]) -> Option<Vec<usize>> {
    InducedMatcher::new(host, pattern, host.vertices()).find(pins)
}
