//! Inputs shared by the recognition benchmarks.

use pathgraph_core::families::{self, random_chordal};
use pathgraph_core::Graph;

/// The small named members plus two F11 instances.
pub fn named() -> Vec<(&'static str, Graph)> {
    vec![
        ("g1", families::g1()),
        ("g2", families::g2()),
        ("g3", families::g3()),
        ("f11_8", families::f11_8()),
        ("f11_12", families::f11_4k(3).expect("k = 3 is valid")),
    ]
}

/// `count` random connected chordal graphs on `n` vertices, seeded from `seed`.
pub fn random_batch(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| random_chordal(n, 4 + (i as usize % 5), seed + i).expect("valid parameters"))
        .collect()
}
