//! Class membership with certificates, through the characterizations or
//! through the brute-force oracles.

use std::fmt;
use std::str::FromStr;

use crate::asteroidal::{find_induced_odd_sun, find_s_directed_triple, first_asteroidal_triple};
use crate::certificate::Certificate;
use crate::chordal::check_chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{interval_clique_order_with, path_oracle, PathOracle, PathOracleOptions, MAX_INTERVAL_CLIQUES};
use crate::sun::{is_path_graph_via_theorem, PathVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Interval,
    DirectedPath,
    Path,
    Chordal,
}

impl Class {
    /// Smallest class first.
    pub const ALL: [Class; 4] = [Class::Interval, Class::DirectedPath, Class::Path, Class::Chordal];

    pub fn name(self) -> &'static str {
        match self {
            Class::Interval => "interval",
            Class::DirectedPath => "directed-path",
            Class::Path => "path",
            Class::Chordal => "chordal",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Class::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown class {s:?}")))
    }
}

/// Membership verdict; `certificate` is set exactly when `member` is false.
#[derive(Clone, Debug)]
pub struct Recognition {
    pub class: Class,
    pub member: bool,
    pub certificate: Option<Certificate>,
}

impl Recognition {
    fn member(class: Class) -> Self {
        Recognition { class, member: true, certificate: None }
    }

    fn not(class: Class, c: Certificate) -> Self {
        Recognition { class, member: false, certificate: Some(c) }
    }
}

/// Recognition through the structural characterizations: asteroidal
/// triples for interval, special-connection triples for directed path, bad
/// sun systems for path.
pub fn recognize(g: &Graph, class: Class) -> Result<Recognition> {
    if let Err(cycle) = check_chordal(g) {
        return Ok(Recognition::not(class, Certificate::InducedCycle(cycle)));
    }
    Ok(match class {
        Class::Chordal => Recognition::member(class),
        Class::Interval => match first_asteroidal_triple(g) {
            Some(t) => Recognition::not(class, Certificate::AsteroidalTriple(t)),
            None => Recognition::member(class),
        },
        Class::DirectedPath => match find_s_directed_triple(g)? {
            Some(t) => Recognition::not(class, Certificate::SDirectedTriple(t)),
            None => Recognition::member(class),
        },
        Class::Path => match is_path_graph_via_theorem(g)? {
            PathVerdict::Path => Recognition::member(class),
            PathVerdict::BadSunSystem(b) => Recognition::not(class, Certificate::BadSunSystem(b)),
            PathVerdict::NotChordal(c) => Recognition::not(class, Certificate::InducedCycle(c)),
        },
    })
}

/// Directed path graph as a path graph without an induced odd sun.
pub fn recognize_directed_path_via_odd_suns(g: &Graph) -> Result<Recognition> {
    let class = Class::DirectedPath;
    let path = recognize(g, Class::Path)?;
    if !path.member {
        return Ok(Recognition { class, ..path });
    }
    Ok(match find_induced_odd_sun(g)? {
        Some(s) => Recognition::not(class, Certificate::OddSun(s)),
        None => Recognition::member(class),
    })
}

/// Caps for the oracle engine.
#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    pub tree_cliques: usize,
    pub interval_cliques: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { tree_cliques: crate::oracle::MAX_TREE_CLIQUES, interval_cliques: MAX_INTERVAL_CLIQUES }
    }
}

/// Recognition through the brute-force oracles. Directed path graphs have
/// no model-building oracle here; they are decided as oracle-path graphs
/// without an induced odd sun.
pub fn recognize_oracle(g: &Graph, class: Class, caps: OracleCaps) -> Result<Recognition> {
    if let Err(cycle) = check_chordal(g) {
        return Ok(Recognition::not(class, Certificate::InducedCycle(cycle)));
    }
    let path = || -> Result<Recognition> {
        Ok(match path_oracle(g, PathOracleOptions { max_cliques: caps.tree_cliques, prune: true })? {
            PathOracle::CliquePathTree(_) => Recognition::member(Class::Path),
            PathOracle::NotChordal(c) => Recognition::not(Class::Path, Certificate::InducedCycle(c)),
            PathOracle::Exhausted { cliques, search_nodes } => {
                Recognition::not(Class::Path, Certificate::OracleExhaustion { cliques, search_nodes })
            }
        })
    };
    Ok(match class {
        Class::Chordal => Recognition::member(class),
        Class::Interval => {
            if interval_clique_order_with(g, caps.interval_cliques)?.is_some() {
                Recognition::member(class)
            } else {
                // No ordering exists, so an asteroidal triple does.
                let t = first_asteroidal_triple(g).expect("non-interval chordal graph has an asteroidal triple");
                Recognition::not(class, Certificate::AsteroidalTriple(t))
            }
        }
        Class::Path => path()?,
        Class::DirectedPath => {
            let p = path()?;
            if !p.member {
                Recognition { class, ..p }
            } else {
                match find_induced_odd_sun(g)? {
                    Some(s) => Recognition::not(class, Certificate::OddSun(s)),
                    None => Recognition::member(class),
                }
            }
        }
    })
}

/// Memberships in `Class::ALL` order through the characterizations.
pub fn hierarchy(g: &Graph) -> Result<[bool; 4]> {
    let mut out = [false; 4];
    for (i, c) in Class::ALL.into_iter().enumerate() {
        out[i] = recognize(g, c)?.member;
    }
    Ok(out)
}
