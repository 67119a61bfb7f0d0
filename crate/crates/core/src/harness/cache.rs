use super::{RowRelation, SweepRow, ENGINE_VERSION};
use crate::error::Result;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub n: usize,
    pub k: Option<usize>,
    pub t: usize,
    pub relation: RowRelation,
    pub engine_version: String,
}

impl CacheKey {
    pub fn new(n: usize, k: Option<usize>, t: usize, relation: RowRelation) -> Self {
        CacheKey { n, k, t, relation, engine_version: ENGINE_VERSION.to_string() }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    key: CacheKey,
    row: SweepRow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    /// Records for the current engine version (latest per key).
    pub entries: usize,
    /// Records ignored: other engine versions or unreadable lines.
    pub stale: usize,
    pub bytes: u64,
}

/// Line-delimited JSON store of sweep rows. Later records for a key win.
#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    rows: HashMap<CacheKey, SweepRow>,
    stale: usize,
}

impl Cache {
    /// Loads `path`, treating a missing file as empty.
    pub fn open(path: &Path) -> Result<Self> {
        let mut rows = HashMap::new();
        let mut stale = 0;
        if path.exists() {
            for line in BufReader::new(File::open(path)?).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Record>(&line) {
                    Ok(rec) if rec.key.engine_version == ENGINE_VERSION => {
                        rows.insert(rec.key, rec.row);
                    }
                    _ => stale += 1,
                }
            }
        }
        Ok(Cache { path: path.to_path_buf(), rows, stale })
    }

    pub fn get(&self, key: &CacheKey) -> Option<&SweepRow> {
        self.rows.get(key)
    }

    pub fn insert(&mut self, key: CacheKey, row: SweepRow) -> Result<()> {
        if let Some(parent) = self.path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)?;
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let rec = Record { key, row };
        writeln!(f, "{}", serde_json::to_string(&rec)?)?;
        self.rows.insert(rec.key, rec.row);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            entries: self.rows.len(),
            stale: self.stale,
            bytes: fs::metadata(&self.path).map(|m| m.len()).unwrap_or(0),
        }
    }

    /// Deletes the cache file.
    pub fn clear(path: &Path) -> Result<()> {
        if path.exists() {
            fs::remove_file(path)?;
        }
        Ok(())
    }
}
