//! Directories of `*.spec` ring files.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{FiniteRing, RingSpec};

/// A ring loaded from a catalog, named by its file stem.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: Arc<FiniteRing>,
}

/// Name and parsed spec of every `*.spec` file directly inside `dir`, sorted by
/// name. Subdirectories are ignored.
pub fn read_specs(dir: impl AsRef<Path>) -> Result<Vec<(String, Result<RingSpec>)>> {
    let dir = dir.as_ref();
    let io = |e: std::io::Error| Error::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|e| e == "spec") {
            let name = path.file_stem().expect("has extension").to_string_lossy().into_owned();
            out.push((name, RingSpec::load(&path)));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Loads and validates every ring in `dir`; the first failure aborts.
pub fn load_dir(dir: impl AsRef<Path>) -> Result<Vec<CatalogEntry>> {
    read_specs(dir)?
        .into_iter()
        .map(|(name, spec)| {
            Ok(CatalogEntry {
                ring: spec?.build()?,
                name,
            })
        })
        .collect()
}
