//! On-disk cache of exhaustive results: `<dir>/p_<ell>_<n>.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::ExtremalResult;
use crate::error::{Error, Result};

pub(crate) const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    result: ExtremalResult,
}

pub(crate) fn path(dir: &Path, ell: usize, n: usize) -> PathBuf {
    dir.join(format!("p_{ell}_{n}.json"))
}

/// Cached result, or `None` when absent, unreadable or written by another version.
pub(crate) fn load(dir: &Path, ell: usize, n: usize) -> Option<ExtremalResult> {
    let text = fs::read_to_string(path(dir, ell, n)).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    (entry.version == CODE_VERSION && entry.result.ell == ell && entry.result.n == n)
        .then_some(entry.result)
}

pub(crate) fn store(dir: &Path, result: &ExtremalResult) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
    let entry = Entry {
        version: CODE_VERSION.to_string(),
        result: result.clone(),
    };
    let text = serde_json::to_string_pretty(&entry).map_err(|e| Error::Cache(e.to_string()))?;
    let target = path(dir, result.ell, result.n);
    fs::write(&target, text).map_err(|e| Error::Cache(format!("{}: {e}", target.display())))
}
