//! graph6 and edge-list text formats.
//!
//! graph6 follows the public format description: a size header, then the
//! upper triangle of the adjacency matrix in column-major order packed into
//! 6-bit groups, each stored as `byte - 63`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::MAX_VERTICES;

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 string (surrounding whitespace and the optional
/// `>>graph6<<` header are tolerated).
pub fn from_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let (bytes, base) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest.as_bytes(), GRAPH6_HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(g6_err(base, "empty input"));
    }
    let value = |i: usize| -> Result<u32> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u32),
            Some(&b) => Err(g6_err(base + i, format!("byte {b:#04x} outside 63..=126"))),
            None => Err(g6_err(base + i, "truncated size header")),
        }
    };

    let (n, mut pos) = if bytes[0] != 126 {
        (value(0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = (value(1)? << 12) | (value(2)? << 6) | value(3)?;
        (n as usize, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | value(i)? as usize;
        }
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(g6_err(base + bytes.len(), format!("expected {nbytes} adjacency bytes")));
    }
    if bytes.len() > pos + nbytes {
        return Err(g6_err(base + pos + nbytes, "trailing bytes after adjacency data"));
    }

    let mut g = Graph::empty(n)?;
    let mut word = 0u32;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                word = value(pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if word >> left & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Encodes `g` as graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn el_err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList { line, reason: reason.into() }
}

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// n 4
/// labels a b c d      (optional)
/// a b
/// 2 3
/// ```
///
/// Endpoints are vertex indices when every endpoint token is numeric and no
/// `labels` line is present; otherwise they are names, taken from the
/// `labels` line or assigned in order of first appearance.
pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_no, header) = lines.next().ok_or_else(|| el_err(1, "missing `n <count>` header"))?;
    let mut tok = header.split_whitespace();
    let n = match (tok.next(), tok.next(), tok.next()) {
        (Some("n"), Some(c), None) => {
            c.parse::<usize>().map_err(|_| el_err(first_no, format!("bad vertex count {c:?}")))?
        }
        _ => return Err(el_err(first_no, "expected `n <count>`")),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }

    let mut declared: Option<Vec<String>> = None;
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    for (no, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.first() == Some(&"labels") {
            if declared.is_some() || !pairs.is_empty() {
                return Err(el_err(no, "`labels` must directly follow the header"));
            }
            if parts.len() - 1 != n {
                return Err(el_err(no, format!("expected {n} labels, got {}", parts.len() - 1)));
            }
            declared = Some(parts[1..].iter().map(|s| s.to_string()).collect());
            continue;
        }
        if parts.len() != 2 {
            return Err(el_err(no, "expected two endpoints"));
        }
        pairs.push((no, parts[0].to_string(), parts[1].to_string()));
    }

    let numeric = declared.is_none()
        && pairs.iter().all(|(_, a, b)| a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok());

    let mut g = Graph::empty(n)?;
    if numeric {
        for (no, a, b) in &pairs {
            let (u, v) = (a.parse().unwrap(), b.parse().unwrap());
            g.try_add_edge(u, v).map_err(|e| el_err(*no, e.to_string()))?;
        }
        return Ok(g);
    }

    let mut names: Vec<String> = declared.clone().unwrap_or_default();
    let mut index: HashMap<String, usize> = names.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    if index.len() != names.len() {
        return Err(el_err(first_no, "duplicate label"));
    }
    for (no, a, b) in &pairs {
        let mut ids = [0; 2];
        for (k, name) in [a, b].into_iter().enumerate() {
            ids[k] = match index.get(name) {
                Some(&i) => i,
                None if declared.is_some() => return Err(el_err(*no, format!("unknown vertex {name:?}"))),
                None => {
                    if names.len() == n {
                        return Err(el_err(*no, format!("more than {n} distinct vertex names")));
                    }
                    index.insert(name.clone(), names.len());
                    names.push(name.clone());
                    names.len() - 1
                }
            };
        }
        g.try_add_edge(ids[0], ids[1]).map_err(|e| el_err(*no, e.to_string()))?;
    }
    while names.len() < n {
        names.push(format!("_{}", names.len()));
    }
    Ok(g.with_labels(names))
}

/// Writes the edge-list format; labels, when present, go on a `labels` line.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    if let Some(labels) = g.labels() {
        if g.n() > 0 {
            out.push_str("labels ");
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(u), g.label(v)));
    }
    out
}

/// Graphviz rendering of `g`; vertices in `marked` get a double circle.
pub fn to_dot(g: &Graph, marked: &[usize]) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..g.n() {
        let shape = if marked.contains(&v) { ", shape=doublecircle" } else { "" };
        out.push_str(&format!("  v{v} [label=\"{}\"{shape}];\n", g.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{u} -- v{v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Reads either an edge-list document (first token `n`) or one graph6 string
/// per non-empty line.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.split_whitespace().next() == Some("n") => Ok(vec![from_edge_list_text(text)?]),
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(from_graph6)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    #[test]
    fn dot_lists_vertices_then_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            to_dot(&g, &[2]),
            "graph g {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  v2 [label=\"2\", shape=doublecircle];\n  v0 -- v1;\n  v1 -- v2;\n}\n"
        );
    }

    #[test]
    fn decode_star() {
        // n = 'D' - 63 = 5; '?' = 000000, '{' = 111100: bits for (0,4),(1,4),(2,4),(3,4).
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn tiny_encodings() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn long_header() {
        let g = Graph::complete(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert!(matches!(from_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        // 5 vertices need two adjacency bytes.
        assert!(matches!(from_graph6("D?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(from_graph6("D?{{"), Err(Error::Graph6 { offset: 3, .. })));
        assert!(matches!(from_graph6("D? "), Err(Error::Graph6 { .. })));
        assert!(matches!(from_graph6("D\x10{"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(from_graph6("~?@"), Err(Error::Graph6 { offset: 3, .. })));
        assert!(matches!(from_graph6("~?@@"), Err(Error::TooManyVertices(65))));
    }

    #[test]
    fn edge_list_numeric_and_named() {
        let g = from_edge_list_text("# path\nn 3\n0 1\n1 2 # tail\n").unwrap();
        assert_eq!(g, Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap());

        let g = from_edge_list_text("n 4\na b\nb c\n").unwrap();
        assert_eq!(g.label(0), "a");
        assert_eq!(g.label(2), "c");
        assert_eq!(g.edge_count(), 2);

        let g2 = families::g2();
        let back = from_edge_list_text(&to_edge_list_text(&g2)).unwrap();
        assert_eq!(back, g2);
        assert_eq!(back.labels(), g2.labels());
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(from_edge_list_text("3\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(from_edge_list_text("n 3\n0 5\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(from_edge_list_text("n 2\n1 1\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(from_edge_list_text("n 2\na b\nc d\n"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(from_edge_list_text("n 2\n0 1 2\n"), Err(Error::EdgeList { line: 2, .. })));
    }

    #[test]
    fn read_graphs_detects_format() {
        assert!(read_graphs("").unwrap().is_empty());
        assert_eq!(read_graphs("D?{\nA_\n").unwrap().len(), 2);
        assert_eq!(read_graphs("n 2\n0 1\n").unwrap().len(), 1);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn graph6_round_trip(g in arb_graph(10)) {
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn edge_list_round_trip(g in arb_graph(12)) {
            prop_assert_eq!(from_edge_list_text(&to_edge_list_text(&g)).unwrap(), g);
        }
    }
}
