//! `validate`: the cross-validation suites over the exhaustive corpus and
//! seeded random samples.

use clap::{Args, ValueEnum};

use pathgraph_core::families::small_chordal_corpus;
use pathgraph_core::suites::{self, PathEngine, SuiteReport};
use pathgraph_core::{from_graph6, to_edge_list_text, Graph};

use crate::{Status, UsageError};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Hierarchy,
    Theorem,
    Lemmas,
    Prop44,
    All,
}

#[derive(Args, Debug)]
pub struct ValidateArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Exhaustive corpus: all connected chordal graphs up to this size (at most 7).
    #[arg(long = "n-max", default_value_t = 7)]
    pub n_max: usize,
    /// Random chordal graphs added to the corpus.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    /// Vertex count of the random graphs (at most 12).
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Parameters k for the F11(4k) checks.
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    pub k: Vec<usize>,
}

/// Largest number of clique trees enumerated per graph.
const TREE_CAP: usize = 100_000;

pub fn validate(a: &ValidateArgs) -> Result<Status, UsageError> {
    let mut pool = small_chordal_corpus(a.n_max)?;
    pool.extend(suites::random_sample(a.n, a.samples, a.seed)?);
    println!("corpus: {} graphs", pool.len());
    let want = |s: Suite| a.suite == s || a.suite == Suite::All;
    let mut failed = false;
    let mut show = |name: &str, r: SuiteReport| {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        println!("{name}: {verdict} checked={} skipped={} violations={}", r.checked, r.skipped, r.violations.len());
        if let Some(v) = r.violations.first() {
            failed = true;
            println!("  first violation: {} {}", v.graph, v.detail);
            if let Ok(g) = from_graph6(&v.graph) {
                print!("{}", indent(&g));
            }
        }
    };
    if want(Suite::Hierarchy) {
        show("hierarchy witnesses", suites::witness_hierarchy()?);
        show("F11 reconstruction", suites::reconstruction(&[2, 3, 4])?);
    }
    if want(Suite::Theorem) {
        show("sun systems vs oracle", suites::sun_systems_vs_oracle(&pool)?);
        show("directed path characterizations", suites::directed_path_double(&pool, PathEngine::Oracle)?);
        show("interval characterizations", suites::interval_double(&pool)?);
    }
    if want(Suite::Lemmas) {
        show("asteroidal leaves", suites::asteroidal_leaves(&pool, TREE_CAP)?);
        show("triple under one vertex", suites::at_in_neighbourhood(&pool)?);
        show("split rays", suites::split_rays(&pool, TREE_CAP)?);
    }
    if want(Suite::Prop44) {
        show("F11 clique trees", suites::prop44(&a.k)?);
    }
    Ok(if failed { Status::Violation } else { Status::Completed })
}

fn indent(g: &Graph) -> String {
    to_edge_list_text(g).lines().map(|l| format!("    {l}\n")).collect()
}
