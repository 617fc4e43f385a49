//! On-disk store of user-defined umbrae.
//!
//! ```json
//! {"version": 1, "umbrae": {"myu": {"moments": ["1", "1", "2", "5"]}}}
//! ```
//!
//! Fields this version does not know about are kept and written back.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::error::Error;
use crate::registry::Registry;
use crate::scalar::{format_rational, parse_rational};
use crate::umbra::Umbra;

pub const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("cannot access workspace {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed workspace {path}: {source}")]
    Format { path: PathBuf, source: serde_json::Error },
    #[error("unsupported workspace version {0}")]
    Version(u32),
    #[error(transparent)]
    Math(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StoredUmbra {
    pub moments: Vec<String>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Workspace {
    pub version: u32,
    #[serde(default)]
    pub umbrae: BTreeMap<String, StoredUmbra>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Default for Workspace {
    fn default() -> Workspace {
        Workspace { version: VERSION, umbrae: BTreeMap::new(), extra: Map::new() }
    }
}

impl Workspace {
    /// Reads `path`; a missing file is an empty workspace.
    pub fn load(path: &Path) -> Result<Workspace, WorkspaceError> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Workspace::default()),
            Err(source) => return Err(WorkspaceError::Io { path: path.into(), source }),
        };
        let ws: Workspace =
            serde_json::from_str(&text).map_err(|source| WorkspaceError::Format { path: path.into(), source })?;
        if ws.version != VERSION {
            return Err(WorkspaceError::Version(ws.version));
        }
        Ok(ws)
    }

    /// Writes to a sibling temporary file, then renames it over `path`.
    pub fn save(&self, path: &Path) -> Result<(), WorkspaceError> {
        let io_err = |source| WorkspaceError::Io { path: path.into(), source };
        let mut text = serde_json::to_string_pretty(self).expect("workspace serializes");
        text.push('\n');
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(format!(".tmp{}", std::process::id()));
        let tmp = PathBuf::from(tmp);
        fs::write(&tmp, text).map_err(io_err)?;
        fs::rename(&tmp, path).map_err(|e| {
            let _ = fs::remove_file(&tmp);
            io_err(e)
        })
    }

    /// Stores `umbra` (rational moments only) under `name`, keeping any
    /// extra fields of a previous entry.
    pub fn insert(&mut self, name: &str, umbra: &Umbra) -> Result<(), Error> {
        Registry::new().define(name, umbra.clone())?;
        let moments = umbra.rational_moments()?.iter().map(format_rational).collect();
        let extra = self.umbrae.remove(name).map(|s| s.extra).unwrap_or_default();
        self.umbrae.insert(name.to_string(), StoredUmbra { moments, extra });
        Ok(())
    }

    pub fn registry(&self) -> Result<Registry, Error> {
        let mut reg = Registry::new();
        for (name, stored) in &self.umbrae {
            let moments = stored.moments.iter().map(|m| parse_rational(m)).collect::<Result<Vec<_>, _>>()?;
            reg.define(name, Umbra::from_rationals(&moments)?)?;
        }
        Ok(reg)
    }
}
