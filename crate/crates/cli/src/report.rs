//! The JSON document printed by every command.
//!
//! ```json
//! {
//!   "command": "mwis",
//!   "inputs": [{ "role": "graph", "path": "g.gr", "sha256": "…" }],
//!   "results": { "weight": "6/1", "set": [1, 3] },
//!   "artifacts": [{ "role": "td", "path": "out.td" }],
//!   "wall_time_ms": 0
//! }
//! ```
//! Rationals are strings `p/q`; vertex, node and member ids are 1-indexed.
//! Apart from `wall_time_ms`, identical inputs give identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs: Vec<InputDigest>,
    pub results: Value,
    pub artifacts: Vec<Artifact>,
    pub wall_time_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub role: &'static str,
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct Artifact {
    pub role: &'static str,
    pub path: String,
}

/// Reads inputs and writes artifacts, recording both for the report.
#[derive(Debug, Default)]
pub struct Session {
    pub inputs: Vec<InputDigest>,
    pub artifacts: Vec<Artifact>,
}

impl Session {
    /// Reads `path`, or standard input for `None` and `-`.
    pub fn read(&mut self, role: &'static str, path: Option<&Path>) -> Result<String, CliError> {
        let (shown, bytes) = match path {
            None => ("-".to_string(), read_stdin()?),
            Some(p) if p == Path::new("-") => ("-".to_string(), read_stdin()?),
            Some(p) => (
                p.display().to_string(),
                fs::read(p).map_err(|e| CliError::Io(p.to_path_buf(), e))?,
            ),
        };
        self.inputs.push(InputDigest {
            role,
            path: shown.clone(),
            sha256: sha256_hex(&bytes),
        });
        String::from_utf8(bytes).map_err(|_| CliError::Usage(format!("{shown}: not UTF-8 text")))
    }

    pub fn write(
        &mut self,
        role: &'static str,
        path: &Path,
        contents: &str,
    ) -> Result<(), CliError> {
        fs::write(path, contents).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        self.artifacts.push(Artifact {
            role,
            path: path.display().to_string(),
        });
        Ok(())
    }

    pub fn write_optional(
        &mut self,
        role: &'static str,
        path: Option<&PathBuf>,
        contents: impl FnOnce() -> String,
    ) -> Result<(), CliError> {
        match path {
            Some(p) => self.write(role, p, &contents()),
            None => Ok(()),
        }
    }
}

fn read_stdin() -> Result<Vec<u8>, CliError> {
    let mut bytes = Vec::new();
    io::stdin()
        .read_to_end(&mut bytes)
        .map_err(|e| CliError::Io(PathBuf::from("-"), e))?;
    Ok(bytes)
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}
