//! Persistent cache of tree expansions.
//!
//! The file is JSON lines. The first line is a header carrying
//! [`CACHE_VERSION`]; a file with any other header is discarded and started
//! over. Every later line is one expansion keyed by tree code and basis, and
//! lines are only ever appended. The whole file is read into an in-memory
//! index on open.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::csf::chromatic_symmetric_function;
use crate::error::{Error, Result};
use crate::symfunc::{Basis, SymFunc};
use crate::treegen::TreeCode;

/// Bumped whenever cached content could change meaning.
pub const CACHE_VERSION: &str = concat!("chromsym-", env!("CARGO_PKG_VERSION"), "/1");

/// Environment variable naming the cache file.
pub const CACHE_ENV: &str = "CHROMSYM_CACHE";

type Key = (String, Basis);

pub struct ExpansionCache {
    path: Option<PathBuf>,
    index: Mutex<HashMap<Key, SymFunc>>,
    writer: Mutex<Option<File>>,
}

impl std::fmt::Debug for ExpansionCache {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExpansionCache").field("path", &self.path).field("entries", &self.len()).finish()
    }
}

impl ExpansionCache {
    pub fn in_memory() -> Self {
        ExpansionCache { path: None, index: Mutex::new(HashMap::new()), writer: Mutex::new(None) }
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut index = HashMap::new();
        let mut valid = false;
        if path.exists() {
            let mut lines = BufReader::new(File::open(&path)?).lines();
            if let Some(header) = lines.next() {
                let header: Value = serde_json::from_str(&header?)?;
                valid = header["version"] == CACHE_VERSION;
            }
            if valid {
                for line in lines {
                    let line = line?;
                    if line.trim().is_empty() {
                        continue;
                    }
                    let entry: Value = serde_json::from_str(&line)?;
                    let tree = entry["tree"]
                        .as_str()
                        .ok_or_else(|| Error::Parse("cache entry without a tree code".into()))?;
                    let f = SymFunc::from_json(&entry["expansion"])?;
                    index.insert((tree.to_string(), f.basis()), f);
                }
            }
        }
        let file = if valid {
            OpenOptions::new().append(true).open(&path)?
        } else {
            let mut f = File::create(&path)?;
            writeln!(f, "{}", json!({ "version": CACHE_VERSION }))?;
            f
        };
        Ok(ExpansionCache { path: Some(path), index: Mutex::new(index), writer: Mutex::new(Some(file)) })
    }

    /// The cache named by `CHROMSYM_CACHE`, if the variable is set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CACHE_ENV) {
            Some(p) if !p.is_empty() => Ok(Some(Self::open(p)?)),
            _ => Ok(None),
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.index.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, tree: &TreeCode, basis: Basis) -> Option<SymFunc> {
        self.index.lock().expect("cache lock").get(&(tree.to_string(), basis)).cloned()
    }

    pub fn insert(&self, tree: &TreeCode, f: &SymFunc) -> Result<()> {
        let key = (tree.to_string(), f.basis());
        let mut index = self.index.lock().expect("cache lock");
        if index.contains_key(&key) {
            return Ok(());
        }
        if let Some(w) = self.writer.lock().expect("cache lock").as_mut() {
            writeln!(w, "{}", json!({ "tree": key.0, "expansion": f.to_json() }))?;
        }
        index.insert(key, f.clone());
        Ok(())
    }

    pub fn get_or_compute<F>(&self, tree: &TreeCode, basis: Basis, compute: F) -> Result<SymFunc>
    where
        F: FnOnce() -> Result<SymFunc>,
    {
        if let Some(f) = self.get(tree, basis) {
            return Ok(f);
        }
        let f = compute()?;
        self.insert(tree, &f)?;
        Ok(f)
    }
}

/// `X_T` in `basis`, through the cache when one is given.
pub fn tree_expansion(tree: &TreeCode, basis: Basis, cache: Option<&ExpansionCache>) -> Result<SymFunc> {
    let compute = || chromatic_symmetric_function(&tree.to_graph())?.to_basis(basis);
    match cache {
        Some(c) => c.get_or_compute(tree, basis, compute),
        None => compute(),
    }
}
