//! Recognition of interval, directed path, path and chordal graphs on up to
//! 64 vertices, with checkable certificates and brute-force oracles.
//!
//! Graphs are bitset adjacency lists ([`Graph`], [`VertexSet`]). The
//! characterization-based recognizers live in [`asteroidal`] and [`sun`];
//! the clique-tree oracles in [`oracle`] decide the same questions by
//! exhaustive search and serve as ground truth on small inputs.

pub mod asteroidal;
pub mod certificate;
pub mod chordal;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod recognize;
pub mod set;
pub mod suites;
pub mod sun;
pub mod tree;

pub use asteroidal::{
    contains_induced_odd_sun, find_asteroidal_triples, find_induced_odd_sun, find_s_directed_triple, is_asteroidal_set,
    is_directed_path, is_interval, s_connected, OddSun, PointedGraph, SDirectedTriple, SpecialConnection, SpecialType,
};
pub use certificate::Certificate;
pub use chordal::{build_clique_tree, check_chordal, is_chordal, maximal_cliques, CliqueList, InducedCycle};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use format::{from_edge_list_text, from_graph6, read_graphs, to_dot, to_edge_list_text, to_graph6};
pub use graph::Graph;
pub use iso::{canonical_code, find_induced, is_isomorphic};
pub use oracle::{enumerate_clique_trees, is_interval_oracle, is_path_graph_oracle, PathOracle};
pub use recognize::{hierarchy, recognize, recognize_oracle, Class, OracleCaps, Recognition};
pub use set::VertexSet;
pub use sun::{
    build_auxiliary_graph, find_bad_sun_system, is_path_graph_via_theorem, is_sun_system, try_flower, AuxiliaryGraph,
    BadSunSystem, Flower, PathVerdict, RayKind, SunSystem,
};
pub use tree::{is_clique_path_tree, validate_clique_tree, CliqueTree, SubtreeView};
