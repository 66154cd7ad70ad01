//! Turning command-line inputs into graphs.
//!
//! An input is a file path, `-` for standard input, or a family name such
//! as `g2`, `ksun:5` or `c4`. With no inputs, standard input is read.

use std::io::Read;
use std::path::Path;

use pathgraph_core::{read_graphs, FamilySpec, Graph};

use crate::UsageError;

pub struct Named {
    /// Where the graph came from: `file:line`, `stdin:line` or a family name.
    pub source: String,
    pub graph: Graph,
}

pub fn load(inputs: &[String]) -> Result<Vec<Named>, UsageError> {
    if inputs.is_empty() {
        return from_stdin();
    }
    let mut out = Vec::new();
    for input in inputs {
        if input == "-" {
            out.extend(from_stdin()?);
        } else if Path::new(input).exists() {
            let text = std::fs::read_to_string(input).map_err(|e| UsageError(format!("{input}: {e}")))?;
            out.extend(from_text(input, &text)?);
        } else {
            let spec: FamilySpec = input
                .parse()
                .map_err(|_| UsageError(format!("{input}: neither a readable file nor a family name")))?;
            let graph = spec.generate().map_err(|e| UsageError(format!("{input}: {e}")))?;
            out.push(Named { source: input.clone(), graph });
        }
    }
    Ok(out)
}

fn from_stdin() -> Result<Vec<Named>, UsageError> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text).map_err(|e| UsageError(format!("stdin: {e}")))?;
    from_text("stdin", &text)
}

fn from_text(name: &str, text: &str) -> Result<Vec<Named>, UsageError> {
    let graphs = read_graphs(text).map_err(|e| UsageError(format!("{name}: {e}")))?;
    let single = graphs.len() == 1;
    Ok(graphs
        .into_iter()
        .enumerate()
        .map(|(i, graph)| Named { source: if single { name.to_string() } else { format!("{name}:{}", i + 1) }, graph })
        .collect())
}
