use std::fmt;
use std::io;
use std::path::PathBuf;

use treealpha::Error;

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(PathBuf, io::Error),
    Library(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(..) => EXIT_USAGE,
            CliError::Library(e) => match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                Error::InvalidDecomposition(_)
                | Error::ResidualBoundViolated { .. }
                | Error::NotCutPartition(_)
                | Error::CutsetNotClique(..)
                | Error::NoBagContainsCutset(_)
                | Error::InvalidFamily(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Library(e) => match e {
                Error::SelfLoop(v) => write!(f, "self-loop on vertex {}", v + 1),
                Error::NotAnEdge(u, v) => write!(f, "({}, {}) is not an edge", u + 1, v + 1),
                Error::CutsetNotClique(u, v) => {
                    write!(
                        f,
                        "cutset is not a clique: {} and {} are non-adjacent",
                        u + 1,
                        v + 1
                    )
                }
                Error::ResidualBoundViolated {
                    node,
                    bound,
                    witness,
                } => {
                    let shown: Vec<usize> = witness.iter().map(|v| v + 1).collect();
                    write!(
                        f,
                        "residual bound {bound} violated at nice node {}: \
                         independent set {shown:?} outside the refined set",
                        node + 1
                    )
                }
                other => write!(f, "{other}"),
            },
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}
