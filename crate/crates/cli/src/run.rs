//! `recognize`, `certify` and `tree`.

use clap::{Args, ValueEnum};
use rayon::prelude::*;

use pathgraph_core::oracle::{path_oracle, PathOracleOptions, MAX_INTERVAL_CLIQUES, MAX_TREE_CLIQUES};
use pathgraph_core::{
    build_clique_tree, check_chordal, recognize as by_characterization, recognize_oracle,
    to_graph6, Class, Error, Graph, OracleCaps, PathOracle, Recognition,
};

use crate::input::{load, Named};
use crate::{Status, UsageError};

/// Largest input on which `--engine auto` also runs the oracles.
const AUTO_BOTH_MAX_N: usize = 7;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    Chordal,
    Interval,
    DirectedPath,
    Path,
}

impl ClassArg {
    fn classes(self) -> Vec<Class> {
        match self {
            ClassArg::All => Class::ALL.to_vec(),
            ClassArg::Chordal => vec![Class::Chordal],
            ClassArg::Interval => vec![Class::Interval],
            ClassArg::DirectedPath => vec![Class::DirectedPath],
            ClassArg::Path => vec![Class::Path],
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// `both` up to 7 vertices, `characterization` above.
    Auto,
    Characterization,
    Oracle,
    /// Run both and report any disagreement as a violation.
    Both,
}

#[derive(Args, Debug)]
pub struct CapArgs {
    /// Largest number of maximal cliques the oracles accept. The interval
    /// oracle never goes above 10.
    #[arg(long = "cap-cliques", env = "PATHGRAPH_CAP_CLIQUES", default_value_t = MAX_TREE_CLIQUES)]
    pub cap_cliques: usize,
}

impl CapArgs {
    fn caps(&self) -> OracleCaps {
        OracleCaps { tree_cliques: self.cap_cliques, interval_cliques: self.cap_cliques.min(MAX_INTERVAL_CLIQUES) }
    }
}

#[derive(Args, Debug)]
pub struct RecognizeArgs {
    /// Files (graph6 lines or one edge list), `-` for stdin, or family names.
    pub inputs: Vec<String>,
    #[arg(long, value_enum, default_value = "all")]
    pub class: ClassArg,
    #[arg(long, value_enum, default_value = "auto")]
    pub engine: Engine,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertEngine {
    Characterization,
    Oracle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CertFormat {
    Text,
    /// `key=value` lines.
    Kv,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    pub inputs: Vec<String>,
    #[arg(long, value_enum)]
    pub class: ClassArg,
    #[arg(long, value_enum, default_value = "characterization")]
    pub engine: CertEngine,
    #[arg(long, value_enum, default_value = "text")]
    pub format: CertFormat,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Args, Debug)]
pub struct TreeArgs {
    pub inputs: Vec<String>,
    #[command(flatten)]
    pub caps: CapArgs,
}

/// Text of one graph's report and whether it holds a violation.
struct Block {
    text: String,
    violation: bool,
}

fn header(n: &Named) -> String {
    format!("{}: {} n={} m={}\n", n.source, to_graph6(&n.graph), n.graph.n(), n.graph.edge_count())
}

/// Runs `f` over the inputs in parallel and prints the blocks in input order.
fn emit<F>(inputs: &[String], f: F) -> Result<Status, UsageError>
where
    F: Fn(&Named) -> Block + Sync + Send,
{
    let graphs = load(inputs)?;
    let blocks: Vec<Block> = graphs.par_iter().map(f).collect();
    let mut violation = false;
    for b in &blocks {
        print!("{}", b.text);
        violation |= b.violation;
    }
    eprintln!("{} graph(s), {} with violations", blocks.len(), blocks.iter().filter(|b| b.violation).count());
    Ok(if violation { Status::Violation } else { Status::Completed })
}

fn outcome(r: &Result<Recognition, Error>) -> String {
    match r {
        Ok(r) if r.member => "true".into(),
        Ok(Recognition { certificate: Some(c), .. }) => format!("false ({})", c.kind()),
        Ok(_) => "false".into(),
        Err(e) => format!("unsupported ({e})"),
    }
}

pub fn recognize(args: &RecognizeArgs) -> Result<Status, UsageError> {
    let caps = args.caps.caps();
    let classes = args.class.classes();
    emit(&args.inputs, |named| {
        let g = &named.graph;
        let engine = match args.engine {
            Engine::Auto if g.n() <= AUTO_BOTH_MAX_N => Engine::Both,
            Engine::Auto => Engine::Characterization,
            e => e,
        };
        let mut text = header(named);
        let mut violation = false;
        for &class in &classes {
            let line = match engine {
                Engine::Characterization => outcome(&by_characterization(g, class)),
                Engine::Oracle => outcome(&recognize_oracle(g, class, caps)),
                _ => {
                    let a = by_characterization(g, class);
                    let b = recognize_oracle(g, class, caps);
                    match (&a, &b) {
                        (Ok(x), Ok(y)) if x.member != y.member => {
                            violation = true;
                            format!("disagreement (characterization: {}, oracle: {})", outcome(&a), outcome(&b))
                        }
                        (Ok(_), Err(_)) => format!("{} (oracle over cap)", outcome(&a)),
                        _ => outcome(&a),
                    }
                }
            };
            text.push_str(&format!("  {class}: {line}\n"));
        }
        Block { text, violation }
    })
}

pub fn certify(args: &CertifyArgs) -> Result<Status, UsageError> {
    let caps = args.caps.caps();
    let classes = args.class.classes();
    emit(&args.inputs, |named| {
        let g = &named.graph;
        let mut text = header(named);
        let mut violation = false;
        for &class in &classes {
            let r = match args.engine {
                CertEngine::Characterization => by_characterization(g, class),
                CertEngine::Oracle => recognize_oracle(g, class, caps),
            };
            match r {
                Err(e) => text.push_str(&format!("  {class}: unsupported ({e})\n")),
                Ok(Recognition { member: true, .. }) => {
                    text.push_str(&format!("  {class}: no certificate: member\n"))
                }
                Ok(Recognition { certificate: None, .. }) => unreachable!("non-members carry a certificate"),
                Ok(Recognition { certificate: Some(c), .. }) => {
                    if !c.verify(g) {
                        violation = true;
                        text.push_str(&format!("  {class}: {} certificate failed re-verification\n", c.kind()));
                        continue;
                    }
                    let body = match args.format {
                        CertFormat::Text => c.to_text(g),
                        CertFormat::Kv => c.to_key_value(g),
                    };
                    text.push_str(&format!("  {class}: not a member\n"));
                    for l in body.lines() {
                        text.push_str(&format!("    {l}\n"));
                    }
                }
            }
        }
        Block { text, violation }
    })
}

pub fn tree(args: &TreeArgs) -> Result<Status, UsageError> {
    let cap = args.caps.cap_cliques;
    emit(&args.inputs, |named| {
        let g = &named.graph;
        let mut text = format!("// {}", header(named));
        text.push_str(&clique_tree_dot(g, cap));
        Block { text, violation: false }
    })
}

fn clique_tree_dot(g: &Graph, cap: usize) -> String {
    if let Err(c) = check_chordal(g) {
        return format!("// not chordal: induced cycle {:?}\n", c.0);
    }
    match path_oracle(g, PathOracleOptions { max_cliques: cap, prune: true }) {
        Ok(PathOracle::CliquePathTree(t)) => format!("// clique-path tree\n{}", t.to_dot()),
        other => {
            let why = match other {
                Err(e) => format!("oracle skipped: {e}"),
                _ => "no clique-path tree exists".into(),
            };
            let t = build_clique_tree(g).expect("chordal");
            format!("// clique tree; {why}\n{}", t.to_dot())
        }
    }
}

