//! `gen`: family members in graph6, edge-list or DOT.

use clap::Args;

use pathgraph_core::families::{self, small_chordal_corpus};
use pathgraph_core::{to_dot, to_edge_list_text, to_graph6, FamilySpec, Graph};

use crate::{GraphFormat, Status, UsageError};

#[derive(Args, Debug)]
pub struct GenArgs {
    /// ksun, g1, g2, g3, f11_8, f11, sdirected, random, cycle, corpus, or a
    /// complete spec such as `ksun:5`.
    pub family: String,
    /// Size parameter: k for ksun and f11, n for cycle, the type for sdirected.
    pub param: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Special-connection type (1 to 4).
    #[arg(long = "type")]
    pub ty: Option<u8>,
    /// Type 4 length parameter.
    #[arg(long)]
    pub t: Option<usize>,
    /// Vertex count for random and cycle.
    #[arg(long)]
    pub n: Option<usize>,
    /// Clique-tree size for random.
    #[arg(long, default_value_t = 6)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random graphs; seeds run from `--seed` upwards.
    #[arg(long, default_value_t = 1)]
    pub samples: usize,
    /// Largest vertex count for corpus.
    #[arg(long = "n-max", default_value_t = 7)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "g6")]
    pub format: GraphFormat,
}

/// A generated graph with its distinguished endpoints, if any.
struct Item {
    graph: Graph,
    ends: Option<(usize, usize)>,
}

fn need(v: Option<usize>, what: &str) -> Result<usize, UsageError> {
    v.ok_or_else(|| UsageError(format!("missing {what}")))
}

fn items(a: &GenArgs) -> Result<Vec<Item>, UsageError> {
    let plain = |spec: FamilySpec| -> Result<Vec<Item>, UsageError> { Ok(vec![Item { graph: spec.generate()?, ends: None }]) };
    match a.family.as_str() {
        "ksun" => plain(FamilySpec::KSun(need(a.param.or(a.k), "k")?)),
        "f11" => plain(FamilySpec::F11_4k(need(a.param.or(a.k), "k")?)),
        "cycle" => plain(FamilySpec::Cycle(need(a.param.or(a.n), "n")?)),
        "sdirected" => {
            let ty = a.ty.or(a.param.map(|p| p as u8)).ok_or_else(|| UsageError("missing --type".into()))?;
            let p = families::s_directed_pointed(ty, a.t.unwrap_or(0))?;
            Ok(vec![Item { ends: Some((p.u, p.v)), graph: p.graph }])
        }
        "random" => {
            let n = a.n.unwrap_or(10);
            (0..a.samples as u64)
                .map(|i| Ok(Item { graph: families::random_chordal(n, a.budget, a.seed + i)?, ends: None }))
                .collect()
        }
        "corpus" => Ok(small_chordal_corpus(a.n_max)?.into_iter().map(|graph| Item { graph, ends: None }).collect()),
        other => {
            let spec: FamilySpec = other.parse()?;
            if let FamilySpec::SDirected { ty, t } = spec {
                let p = families::s_directed_pointed(ty, t)?;
                return Ok(vec![Item { ends: Some((p.u, p.v)), graph: p.graph }]);
            }
            plain(spec)
        }
    }
}

pub fn gen(a: &GenArgs) -> Result<Status, UsageError> {
    for item in items(a)? {
        let g = &item.graph;
        let note = item.ends.map(|(u, v)| format!("endpoints u={} v={}", g.label(u), g.label(v)));
        match a.format {
            GraphFormat::G6 => {
                if let Some(n) = &note {
                    println!("# {n}");
                }
                println!("{}", to_graph6(g));
            }
            GraphFormat::Edges => {
                if let Some(n) = &note {
                    println!("# {n}");
                }
                print!("{}", to_edge_list_text(g));
            }
            GraphFormat::Dot => {
                let marked: Vec<usize> = item.ends.map(|(u, v)| vec![u, v]).unwrap_or_default();
                print!("{}", to_dot(g, &marked));
            }
        }
    }
    Ok(Status::Completed)
}
