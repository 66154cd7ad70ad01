//! Witnesses of non-membership, with re-verification and serialization.
//!
//! The verifiers recompute everything from the graph and the payload using
//! plain definitions; they share no search code with the finders.

use std::fmt::Write as _;

use crate::asteroidal::{OddSun, SDirectedTriple};
use crate::chordal::InducedCycle;
use crate::graph::Graph;
use crate::oracle::{path_oracle, PathOracle, PathOracleOptions};
use crate::set::VertexSet;
use crate::sun::{AuxEdgeReason, AuxNode, BadSunSystem, RayKind};

#[derive(Clone, Debug)]
pub enum Certificate {
    /// Chordless cycle on four or more vertices.
    InducedCycle(InducedCycle),
    AsteroidalTriple([usize; 3]),
    SDirectedTriple(SDirectedTriple),
    OddSun(OddSun),
    BadSunSystem(Box<BadSunSystem>),
    /// No clique tree is a clique-path tree.
    OracleExhaustion { cliques: usize, search_nodes: usize },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::InducedCycle(_) => "induced_cycle",
            Certificate::AsteroidalTriple(_) => "asteroidal_triple",
            Certificate::SDirectedTriple(_) => "s_directed_triple",
            Certificate::OddSun(_) => "odd_sun",
            Certificate::BadSunSystem(_) => "bad_sun_system",
            Certificate::OracleExhaustion { .. } => "oracle_exhaustion",
        }
    }

    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Certificate::InducedCycle(c) => c.verify(g),
            Certificate::AsteroidalTriple(t) => asteroidal_by_bfs(g, t.iter().collect(), g.vertices()),
            Certificate::SDirectedTriple(s) => {
                asteroidal_by_bfs(g, s.triple.iter().collect(), g.vertices())
                    && s.connections.iter().zip(s.pairs()).all(|(c, (a, b))| c.verify(g, a, b))
            }
            Certificate::OddSun(s) => s.verify(g),
            Certificate::BadSunSystem(b) => verify_bad_sun_system(g, b),
            Certificate::OracleExhaustion { .. } => {
                matches!(path_oracle(g, PathOracleOptions { prune: false, ..Default::default() }), Ok(PathOracle::Exhausted { .. }))
            }
        }
    }

    /// Human-readable rendering using vertex labels.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        let names = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
        match self {
            Certificate::InducedCycle(c) => {
                let _ = writeln!(out, "induced cycle of length {}: {}", c.0.len(), names(&c.0));
            }
            Certificate::AsteroidalTriple(t) => {
                let _ = writeln!(out, "asteroidal triple: {}", names(t));
            }
            Certificate::SDirectedTriple(s) => {
                let _ = writeln!(out, "asteroidal triple with special connections: {}", names(&s.triple));
                for (c, (a, b)) in s.connections.iter().zip(s.pairs()) {
                    let _ = writeln!(out, "  {} ~ {}: {} on {}", g.label(a), g.label(b), c.kind, g.fmt_set(c.vertices()));
                }
            }
            Certificate::OddSun(s) => {
                let _ = writeln!(out, "induced {}-sun: core {} rays {}", s.k, names(&s.core), names(&s.rays));
            }
            Certificate::BadSunSystem(b) => {
                let ss = &b.system;
                let _ = writeln!(out, "bad sun system on {}", g.fmt_set(ss.host()));
                let _ = writeln!(out, "  flower {} with core {}", g.fmt_set(ss.flower_vertices), g.fmt_set(ss.flower.core()));
                for (i, p) in ss.flower.petal_cliques().iter().enumerate() {
                    let _ = writeln!(out, "  petal clique P{i} = {}", g.fmt_set(*p));
                }
                for &(r, k) in &ss.ray_kinds {
                    let _ = writeln!(out, "  ray {}: {}", g.label(r), kind_text(k));
                }
                let _ = writeln!(out, "  odd cycle of length {} in the auxiliary graph:", b.cycle.len());
                for i in 0..b.cycle.len() {
                    let (a, c) = (b.cycle[i], b.cycle[(i + 1) % b.cycle.len()]);
                    let _ = writeln!(out, "    {} -- {} ({})", node_text(g, a), node_text(g, c), reason_text(g, b.reasons[i]));
                }
            }
            Certificate::OracleExhaustion { cliques, search_nodes } => {
                let _ = writeln!(out, "no clique-path tree among the clique trees on {cliques} cliques ({search_nodes} search nodes)");
            }
        }
        out
    }

    /// Line-oriented `key=value` rendering.
    pub fn to_key_value(&self, g: &Graph) -> String {
        let mut out = format!("certificate={}\n", self.kind());
        let list = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(",");
        match self {
            Certificate::InducedCycle(c) => {
                let _ = writeln!(out, "cycle={}", list(&c.0));
            }
            Certificate::AsteroidalTriple(t) => {
                let _ = writeln!(out, "triple={}", list(t));
            }
            Certificate::SDirectedTriple(s) => {
                let _ = writeln!(out, "triple={}", list(&s.triple));
                for (c, (a, b)) in s.connections.iter().zip(s.pairs()) {
                    let (ty, t) = c.kind.generator_args();
                    let _ = writeln!(out, "connection.{}.{}=type:{ty},t:{t},map:{}", g.label(a), g.label(b), list(&c.map));
                }
            }
            Certificate::OddSun(s) => {
                let _ = writeln!(out, "k={}\ncore={}\nrays={}", s.k, list(&s.core), list(&s.rays));
            }
            Certificate::BadSunSystem(b) => {
                let ss = &b.system;
                let _ = writeln!(out, "F={}", g.fmt_set(ss.flower_vertices));
                let _ = writeln!(out, "R={}", g.fmt_set(ss.rays));
                let _ = writeln!(out, "core={}", g.fmt_set(ss.flower.core()));
                let petals: Vec<String> = ss.flower.petal_cliques().iter().map(|&p| g.fmt_set(p)).collect();
                let _ = writeln!(out, "petals={}", petals.join(";"));
                for &(r, k) in &ss.ray_kinds {
                    let kind = match k {
                        RayKind::SplitOn(p) => format!("split:P{p}"),
                        RayKind::Intersecting => "intersecting".into(),
                        RayKind::Other => "other".into(),
                    };
                    let _ = writeln!(out, "ray.{}={kind}", g.label(r));
                }
                let _ = writeln!(out, "cycle_length={}", b.cycle.len());
                for i in 0..b.cycle.len() {
                    let (a, c) = (b.cycle[i], b.cycle[(i + 1) % b.cycle.len()]);
                    let why = match b.reasons[i] {
                        AuxEdgeReason::SharedCore(v) => format!("shared_core:{}", g.label(v)),
                        AuxEdgeReason::Split => "split".into(),
                        AuxEdgeReason::PetalPetal => "petal_petal".into(),
                    };
                    let _ = writeln!(out, "cycle.{i}={},{},{why}", node_key(g, a), node_key(g, c));
                }
            }
            Certificate::OracleExhaustion { cliques, search_nodes } => {
                let _ = writeln!(out, "cliques={cliques}\nsearch_nodes={search_nodes}");
            }
        }
        out
    }
}

fn kind_text(k: RayKind) -> String {
    match k {
        RayKind::Intersecting => "intersecting".into(),
        RayKind::SplitOn(p) => format!("split on P{p}"),
        RayKind::Other => "other".into(),
    }
}

fn node_text(g: &Graph, n: AuxNode) -> String {
    match n {
        AuxNode::Ray(r) => format!("ray {}", g.label(r)),
        AuxNode::Petal(p) => format!("petal P{p}"),
    }
}

fn node_key(g: &Graph, n: AuxNode) -> String {
    match n {
        AuxNode::Ray(r) => g.label(r),
        AuxNode::Petal(p) => format!("P{p}"),
    }
}

fn reason_text(g: &Graph, r: AuxEdgeReason) -> String {
    match r {
        AuxEdgeReason::SharedCore(v) => format!("both rays see core vertex {}", g.label(v)),
        AuxEdgeReason::Split => "ray split on petal".into(),
        AuxEdgeReason::PetalPetal => "petal vertices are adjacent".into(),
    }
}

/// Breadth-first search restricted to `allowed`.
fn bfs(g: &Graph, start: usize, allowed: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut queue = vec![start];
    while let Some(x) = queue.pop() {
        for y in g.adj(x) {
            if allowed.contains(y) && !seen.contains(y) {
                seen.insert(y);
                queue.push(y);
            }
        }
    }
    seen
}

fn asteroidal_by_bfs(g: &Graph, s: VertexSet, within: VertexSet) -> bool {
    if s.len() < 3 || !s.is_subset(within) || !g.is_independent(s) {
        return false;
    }
    s.iter().all(|v| {
        let rest = s.without(v);
        let start = rest.first().unwrap();
        rest.is_subset(bfs(g, start, within - g.closed(v)))
    })
}

/// Maximal cliques of `G[f]` by scanning every subset of `f`.
fn brute_force_maximal_cliques(g: &Graph, f: VertexSet) -> Option<Vec<VertexSet>> {
    let members = f.to_vec();
    if members.len() > 20 {
        return None;
    }
    let mut out = Vec::new();
    for mask in 1u64..(1 << members.len()) {
        let s: VertexSet = members.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        if g.is_clique(s) && (f - s).iter().all(|w| !s.is_subset(g.adj(w))) {
            out.push(s);
        }
    }
    out.sort_by_key(|c| c.to_vec());
    Some(out)
}

fn verify_bad_sun_system(g: &Graph, b: &BadSunSystem) -> bool {
    let ss = &b.system;
    let (f, r) = (ss.flower_vertices, ss.rays);
    let host = f | r;
    if f.intersects(r) || !host.is_subset(g.vertices()) || !asteroidal_by_bfs(g, r, host) {
        return false;
    }
    let Some(cliques) = brute_force_maximal_cliques(g, f) else { return false };
    if cliques != ss.flower.petal_cliques() || cliques.len() < 2 {
        return false;
    }
    let core = cliques.iter().fold(f, |a, &p| a & p);
    if core.is_empty() || core != ss.flower.core() {
        return false;
    }
    // Ray kinds from the definitions.
    let rays = r.to_vec();
    if ss.ray_kinds.iter().map(|&(x, _)| x).collect::<Vec<_>>() != rays {
        return false;
    }
    for &(x, kind) in &ss.ray_kinds {
        let nx = g.adj(x) & host;
        let expected = if nx.is_subset(core) {
            RayKind::Intersecting
        } else {
            let hosts: Vec<usize> = (0..cliques.len())
                .filter(|&i| nx.is_subset(cliques[i]) && nx.intersects(core) && nx.intersects(cliques[i] - core))
                .collect();
            if hosts.len() == 1 {
                RayKind::SplitOn(hosts[0])
            } else {
                return false;
            }
        };
        if expected != kind {
            return false;
        }
    }
    for (i, &x) in rays.iter().enumerate() {
        for &y in &rays[i + 1..] {
            let (nx, ny) = (g.adj(x) & host, g.adj(y) & host);
            if nx.is_subset(ny) || ny.is_subset(nx) {
                return false;
            }
        }
    }
    // The odd cycle.
    let len = b.cycle.len();
    if len < 3 || len % 2 == 0 || b.reasons.len() != len {
        return false;
    }
    let mut distinct = b.cycle.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != len {
        return false;
    }
    let kind_of = |x: usize| ss.ray_kinds.iter().find(|&&(y, _)| y == x).map(|&(_, k)| k);
    let split_petal = |p: usize| ss.ray_kinds.iter().any(|&(_, k)| k == RayKind::SplitOn(p));
    for node in &b.cycle {
        let ok = match *node {
            AuxNode::Ray(x) => r.contains(x),
            AuxNode::Petal(p) => p < cliques.len() && split_petal(p),
        };
        if !ok {
            return false;
        }
    }
    (0..len).all(|i| {
        let (a, c) = (b.cycle[i], b.cycle[(i + 1) % len]);
        match (a, c, b.reasons[i]) {
            (AuxNode::Ray(x), AuxNode::Ray(y), AuxEdgeReason::SharedCore(v)) => {
                core.contains(v) && g.has_edge(x, v) && g.has_edge(y, v)
            }
            (AuxNode::Ray(x), AuxNode::Petal(p), AuxEdgeReason::Split)
            | (AuxNode::Petal(p), AuxNode::Ray(x), AuxEdgeReason::Split) => kind_of(x) == Some(RayKind::SplitOn(p)),
            (AuxNode::Petal(p), AuxNode::Petal(q), AuxEdgeReason::PetalPetal) => p != q,
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::sun::{find_bad_sun_system, AuxNode};

    #[test]
    fn f11_8_certificate_verifies_and_serializes() {
        let g = families::f11_8();
        let b = find_bad_sun_system(&g).unwrap().unwrap();
        let cert = Certificate::BadSunSystem(Box::new(b));
        assert!(cert.verify(&g));
        let kv = cert.to_key_value(&g);
        assert!(kv.starts_with("certificate=bad_sun_system\nF={u,v,w,x,y}\nR={r1,r2,r3}\ncore={u,v,w}\n"), "{kv}");
        assert!(kv.contains("cycle_length=3\n"));
        assert!(cert.to_text(&g).contains("odd cycle of length 3"));
    }

    #[test]
    fn tampered_certificates_fail() {
        let g = families::f11_8();
        let b = find_bad_sun_system(&g).unwrap().unwrap();

        let mut even = b.clone();
        even.cycle.pop();
        even.reasons.pop();
        assert!(!Certificate::BadSunSystem(Box::new(even)).verify(&g));

        let mut wrong_reason = b.clone();
        wrong_reason.reasons[0] = AuxEdgeReason::SharedCore(3);
        assert!(!Certificate::BadSunSystem(Box::new(wrong_reason)).verify(&g));

        let mut bogus_node = b.clone();
        bogus_node.cycle[0] = AuxNode::Petal(0);
        assert!(!Certificate::BadSunSystem(Box::new(bogus_node)).verify(&g));

        // The same payload does not certify anything about G2.
        assert!(!Certificate::BadSunSystem(Box::new(b)).verify(&families::g2()));

        assert!(!Certificate::AsteroidalTriple([0, 1, 2]).verify(&families::g2()));
        assert!(Certificate::AsteroidalTriple([3, 4, 5]).verify(&families::g2()));
    }

    #[test]
    fn oracle_exhaustion_reverifies() {
        assert!(Certificate::OracleExhaustion { cliques: 0, search_nodes: 0 }.verify(&families::g3()));
        assert!(!Certificate::OracleExhaustion { cliques: 0, search_nodes: 0 }.verify(&families::g2()));
    }
}
