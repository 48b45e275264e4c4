//! Content-addressed JSON store: one file per configuration, named by the
//! SHA-256 of the canonical command JSON and the tool version.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use satake_core::verify::Check;

use crate::{Command, Result, VERSION};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub payload: Value,
    pub checks: Vec<Check>,
}

pub fn key(command: &Command) -> Result<String> {
    let canonical = serde_json::to_string(&(VERSION, command))?;
    Ok(hex::encode(Sha256::digest(canonical.as_bytes())))
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Self {
            dir: dir.to_path_buf(),
        }
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A missing entry is a miss; an unreadable or mismatched one is
    /// reported on stderr and treated as a miss.
    pub fn lookup(&self, key: &str) -> Option<Entry> {
        let path = self.path(key);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                eprintln!("warning: cannot read cache entry {}: {e}", path.display());
                return None;
            }
        };
        match serde_json::from_slice::<Entry>(&bytes) {
            Ok(entry) if entry.key == key => Some(entry),
            Ok(_) => {
                eprintln!(
                    "warning: cache entry {} has a foreign key; recomputing",
                    path.display()
                );
                None
            }
            Err(e) => {
                eprintln!(
                    "warning: corrupt cache entry {} ({e}); recomputing",
                    path.display()
                );
                None
            }
        }
    }

    /// Written to a temporary file in the same directory, then renamed.
    pub fn store(&self, key: &str, payload: &Value, checks: &[Check]) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            key: key.to_string(),
            payload: payload.clone(),
            checks: checks.to_vec(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use satake_core::weights::Coweight;
    use serde_json::json;

    fn cmd() -> Command {
        Command::Twistor { n: 2 }
    }

    #[test]
    fn store_then_lookup_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let k = key(&cmd()).unwrap();
        assert!(cache.lookup(&k).is_none());
        let payload = json!({"b": [1, 2], "a": "q^2 + q"});
        let checks = vec![Check::new("x", true)];
        cache.store(&k, &payload, &checks).unwrap();
        let e = cache.lookup(&k).unwrap();
        assert_eq!(e.payload, payload);
        assert_eq!(
            serde_json::to_string(&e.payload).unwrap(),
            serde_json::to_string(&payload).unwrap()
        );
        assert_eq!(e.checks, checks);
    }

    #[test]
    fn corrupt_entries_are_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let k = key(&cmd()).unwrap();
        fs::write(cache.path(&k), b"{not json").unwrap();
        assert!(cache.lookup(&k).is_none());
        cache.store(&k, &json!(1), &[]).unwrap();
        assert_eq!(cache.lookup(&k).unwrap().payload, json!(1));
    }

    #[test]
    fn keys_separate_configurations() {
        let a = key(&Command::Kostka {
            n: 2,
            lam: Coweight(vec![2, 0]),
            mu: Coweight(vec![1, 1]),
        })
        .unwrap();
        let b = key(&Command::Kostka {
            n: 2,
            lam: Coweight(vec![2, 0]),
            mu: Coweight(vec![2, 0]),
        })
        .unwrap();
        assert_ne!(a, b);
        assert_eq!(a.len(), 64);
        assert_eq!(
            a,
            key(&Command::Kostka {
                n: 2,
                lam: Coweight(vec![2, 0]),
                mu: Coweight(vec![1, 1])
            })
            .unwrap()
        );
    }
}
