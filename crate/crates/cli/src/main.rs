use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod gen;
mod input;
mod run;
mod validate;

/// Recognition and certificates for interval, directed path, path and
/// chordal graphs.
#[derive(Parser, Debug)]
#[command(name = "pathgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report class memberships for each input graph.
    Recognize(run::RecognizeArgs),
    /// Print a re-verified certificate of non-membership for each input graph.
    Certify(run::CertifyArgs),
    /// Print a clique tree in DOT (a clique-path tree when one exists).
    Tree(run::TreeArgs),
    /// Generate family members.
    Gen(gen::GenArgs),
    /// Run cross-validation suites.
    Validate(validate::ValidateArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    G6,
    Edges,
    Dot,
}

/// Outcome of a command; the process exit code follows it.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Completed,
    Violation,
}

/// Input and parameter problems; always exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl From<pathgraph_core::Error> for UsageError {
    fn from(e: pathgraph_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Recognize(a) => run::recognize(&a),
        Command::Certify(a) => run::certify(&a),
        Command::Tree(a) => run::tree(&a),
        Command::Gen(a) => gen::gen(&a),
        Command::Validate(a) => validate::validate(&a),
    };
    match result {
        Ok(Status::Completed) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
