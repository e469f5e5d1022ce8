//! Shared count memo with optional persistence.
//!
//! With `SCHUBLINES_CACHE_DIR` set, counts are loaded from and saved back to
//! `<dir>/kostka-cache.jsonl`: one JSON object per line mapping a sorted
//! problem to its decimal count, e.g. `{"problem":[3,2,1],"kostka":"5"}`.

use std::collections::HashMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigUint;
use schublines_core::{kostka, SchubertProblem};
use serde::{Deserialize, Serialize};

pub const CACHE_FILE: &str = "kostka-cache.jsonl";

/// Problems with sums beyond this are cheap to recount relative to the cost
/// of an unbounded cache, so they are not stored.
pub const MEMO_SUM_CUTOFF: u64 = 40;

#[derive(Serialize, Deserialize)]
struct CacheLine {
    problem: Vec<u32>,
    kostka: String,
}

/// Concurrent count memo. Writers race benignly: values are idempotent, so
/// last-writer-wins never changes an entry.
pub struct SharedMemo {
    map: RwLock<HashMap<Vec<u32>, BigUint>>,
    path: Option<PathBuf>,
}

impl SharedMemo {
    pub fn new() -> Self {
        SharedMemo {
            map: RwLock::new(HashMap::new()),
            path: None,
        }
    }

    /// Reads `SCHUBLINES_CACHE_DIR`; without it the memo is in-memory only.
    pub fn from_env() -> Self {
        match std::env::var_os("SCHUBLINES_CACHE_DIR") {
            Some(dir) => SharedMemo::with_dir(Path::new(&dir)),
            None => SharedMemo::new(),
        }
    }

    pub fn with_dir(dir: &Path) -> Self {
        let path = dir.join(CACHE_FILE);
        let mut map = HashMap::new();
        if let Ok(file) = fs::File::open(&path) {
            for line in BufReader::new(file).lines().map_while(Result::ok) {
                if line.trim().is_empty() {
                    continue;
                }
                let Ok(entry) = serde_json::from_str::<CacheLine>(&line) else {
                    eprintln!("schublines: skipping malformed cache line");
                    continue;
                };
                if let Ok(k) = BigUint::from_str(&entry.kostka) {
                    map.insert(entry.problem, k);
                }
            }
        }
        SharedMemo {
            map: RwLock::new(map),
            path: Some(path),
        }
    }

    /// Memoized exact count.
    pub fn count(&self, p: &SchubertProblem) -> BigUint {
        if p.sum() <= MEMO_SUM_CUTOFF {
            if let Some(k) = self.map.read().unwrap().get(p.conditions()) {
                return k.clone();
            }
            let k = kostka(p);
            self.map
                .write()
                .unwrap()
                .insert(p.conditions().to_vec(), k.clone());
            k
        } else {
            kostka(p)
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the memo back when it came from a cache directory. Entries are
    /// emitted in sorted key order so the file is deterministic.
    pub fn persist(&self) {
        let Some(path) = &self.path else { return };
        if let Some(dir) = path.parent() {
            if let Err(err) = fs::create_dir_all(dir) {
                eprintln!("schublines: cannot create cache dir: {err}");
                return;
            }
        }
        let map = self.map.read().unwrap();
        let mut entries: Vec<(&Vec<u32>, &BigUint)> = map.iter().collect();
        entries.sort();
        let write = || -> std::io::Result<()> {
            let mut out = BufWriter::new(fs::File::create(path)?);
            for (problem, k) in entries {
                let line = serde_json::to_string(&CacheLine {
                    problem: problem.clone(),
                    kostka: k.to_string(),
                })
                .expect("cache lines serialize");
                writeln!(out, "{line}")?;
            }
            out.flush()
        };
        if let Err(err) = write() {
            eprintln!("schublines: cannot write cache: {err}");
        }
    }
}

impl Default for SharedMemo {
    fn default() -> Self {
        SharedMemo::new()
    }
}
