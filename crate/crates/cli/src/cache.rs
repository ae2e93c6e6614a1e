//! Append-only JSON-lines cache of invariant records keyed by canonical
//! form and analysis options.

use crate::fail::{io, Failure};
use crate::record::InvariantRecord;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

#[derive(Serialize, Deserialize)]
struct Entry {
    options: String,
    record: InvariantRecord,
}

pub struct Cache {
    path: PathBuf,
    map: HashMap<(String, String), InvariantRecord>,
    writer: Mutex<File>,
}

impl Cache {
    /// Opens `path`, loading its entries when `reuse` is set and starting
    /// it afresh otherwise. Unreadable entries are logged and dropped.
    pub fn open(path: &Path, reuse: bool) -> Result<Self, Failure> {
        let mut map = HashMap::new();
        if reuse && path.exists() {
            let text = std::fs::read_to_string(path).map_err(|e| io(path, e))?;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Entry>(line) {
                    Ok(e) if !e.record.key.is_empty() => {
                        map.insert((e.record.key.clone(), e.options), e.record);
                    }
                    Ok(_) => log::warn!(
                        "{}:{}: cache entry without a key, ignored",
                        path.display(),
                        i + 1
                    ),
                    Err(err) => log::warn!(
                        "{}:{}: corrupt cache entry ignored: {err}",
                        path.display(),
                        i + 1
                    ),
                }
            }
            log::info!(
                "{} cached records loaded from {}",
                map.len(),
                path.display()
            );
        }
        let mut oo = OpenOptions::new();
        oo.create(true);
        if reuse {
            oo.append(true);
        } else {
            oo.write(true).truncate(true);
        }
        let mut writer = oo.open(path).map_err(|e| io(path, e))?;
        if reuse && torn_tail(path) {
            // an interrupted write left half a line behind
            writer.write_all(b"\n").map_err(|e| io(path, e))?;
        }
        Ok(Cache {
            path: path.to_path_buf(),
            map,
            writer: Mutex::new(writer),
        })
    }

    pub fn get(&self, key: &str, options: &str) -> Option<&InvariantRecord> {
        self.map.get(&(key.to_string(), options.to_string()))
    }

    /// Appends one entry as a single write.
    pub fn put(&self, options: &str, record: &InvariantRecord) -> Result<(), Failure> {
        let mut r = record.clone();
        r.timings = None;
        let mut line = serde_json::to_string(&Entry {
            options: options.to_string(),
            record: r,
        })
        .expect("records serialize");
        line.push('\n');
        let mut w = self.writer.lock().expect("cache writer");
        w.write_all(line.as_bytes())
            .map_err(|e| io(&self.path, e))?;
        w.flush().map_err(|e| io(&self.path, e))
    }
}

fn torn_tail(path: &Path) -> bool {
    std::fs::read(path).is_ok_and(|b| b.last().is_some_and(|&c| c != b'\n'))
}
