use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use eqdeg_core::ExtremalResult;

pub const CSV_HEADER: &str = "ell,n,value,exact,witness_count";

/// Everything a command produces. `results` is deterministic for a given
/// command line and input; timing lives only in the envelope.
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub input: Vec<u8>,
    pub results: Value,
    pub rows: Vec<ExtremalResult>,
    pub failures: Vec<String>,
    pub text: String,
}

impl Report {
    pub fn new(command: &'static str, params: Value) -> Self {
        Report {
            command,
            params,
            input: Vec::new(),
            results: Value::Null,
            rows: Vec::new(),
            failures: Vec::new(),
            text: String::new(),
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    /// SHA-256 over the explicit input, or over the parameters when the
    /// command reads no graphs.
    pub fn input_digest(&self) -> String {
        let mut h = Sha256::new();
        if self.input.is_empty() {
            h.update(self.params.to_string().as_bytes());
        } else {
            h.update(&self.input);
        }
        h.finalize().iter().fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    pub fn envelope(&self, wall_ms: u128) -> Value {
        let mut params = self.params.clone();
        if let Value::Object(map) = &mut params {
            map.insert("input_digest".into(), Value::String(self.input_digest()));
        }
        json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "params": params,
            "results": self.results,
            "wall_ms": wall_ms,
        })
    }

    pub fn csv(&self) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.ell,
                r.n,
                r.value,
                r.exact,
                witness_count(r)
            );
        }
        out
    }
}

pub fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Distinct witness classes; above graph6's order limit, named constructions.
pub fn witness_count(r: &ExtremalResult) -> usize {
    if r.witnesses.is_empty() {
        r.constructions.len()
    } else {
        r.witnesses.len()
    }
}

/// Human-readable rows for a set of extremal results.
pub fn extremal_table(rows: &[ExtremalResult]) -> String {
    let mut out = format!(
        "{:>4} {:>4} {:>6} {:>6} {:>9} {:>10}\n",
        "ell", "n", "value", "exact", "witnesses", "classes"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>6} {:>6} {:>9} {:>10}",
            r.ell,
            r.n,
            r.value,
            r.exact,
            witness_count(r),
            r.classes_enumerated
        );
    }
    out
}
