//! Reading graph files and analysing their records, in parallel.

use crate::cache::Cache;
use crate::fail::{io, Failure};
use crate::record::{analyze, AnalyzeOptions, InvariantRecord};
use rayon::prelude::*;
use serde::Serialize;
use snarklab::canon::canonical_key;
use snarklab::io::read_any;
use snarklab::MultiGraph;
use std::io::Read;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};

pub struct Item {
    pub source: String,
    pub line: usize,
    pub graph: Result<MultiGraph, String>,
}

/// Every record of a graph6 or multi_text file; `-` is standard input.
pub fn read_items(path: &Path) -> Result<Vec<Item>, Failure> {
    let (text, source) = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io(path, e))?;
        (s, "-".to_string())
    } else {
        let s = std::fs::read_to_string(path).map_err(|e| io(path, e))?;
        (s, path.display().to_string())
    };
    Ok(read_any(&text)
        .into_iter()
        .map(|r| Item {
            source: source.clone(),
            line: r.line,
            graph: r.graph.map_err(|e| e.to_string()),
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Record(Box<InvariantRecord>),
    Error { error: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub source: String,
    pub line: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Row {
    pub fn record(&self) -> Option<&InvariantRecord> {
        match &self.outcome {
            Outcome::Record(r) => Some(r),
            Outcome::Error { .. } => None,
        }
    }
}

pub fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start {jobs} workers: {e}")))
}

/// One row per item, in input order. Records found in `cache` are reused;
/// fresh ones are appended to it as they complete.
pub fn analyze_items(
    items: &[Item],
    opts: &AnalyzeOptions,
    cache: Option<&Cache>,
    jobs: usize,
) -> Result<Vec<Row>, Failure> {
    let fp = opts.fingerprint();
    let computed = AtomicUsize::new(0);
    let one = |it: &Item| -> Result<Row, Failure> {
        let outcome = match &it.graph {
            Err(e) => Outcome::Error { error: e.clone() },
            Ok(g) if !g.is_cubic() => Outcome::Error {
                error: "graph is not cubic, skipped".into(),
            },
            Ok(g) => {
                let hit = cache.and_then(|c| c.get(&canonical_key(g), &fp));
                match hit {
                    Some(r) => Outcome::Record(Box::new(r.clone())),
                    None => match analyze(g, opts) {
                        Ok(r) => {
                            computed.fetch_add(1, Ordering::Relaxed);
                            if let Some(c) = cache {
                                c.put(&fp, &r)?;
                            }
                            Outcome::Record(Box::new(r))
                        }
                        Err(e) => Outcome::Error {
                            error: e.to_string(),
                        },
                    },
                }
            }
        };
        Ok(Row {
            source: it.source.clone(),
            line: it.line,
            outcome,
        })
    };
    let rows: Result<Vec<Row>, Failure> =
        pool(jobs)?.install(|| items.par_iter().map(one).collect());
    log::info!(
        "{} records computed, {} taken from the cache",
        computed.load(Ordering::Relaxed),
        items.len() - computed.load(Ordering::Relaxed)
    );
    rows
}

pub fn text_header() -> String {
    format!(
        "{:<24} {:>5} {:>5} {:>3} {:>7} {:>4} {:>4} {:>18} {:>7} {:>4}  {}",
        "source", "n", "girth", "ec", "zeta", "col", "rho", "omega", "n/omega", "q5", "key"
    )
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".into(), T::to_string)
}

pub fn text_row(r: &Row) -> String {
    let src = format!("{}:{}", r.source, r.line);
    match &r.outcome {
        Outcome::Error { error } => format!("{src:<24} error: {error}"),
        Outcome::Record(x) => format!(
            "{:<24} {:>5} {:>5} {:>3} {:>7} {:>4} {:>4} {:>18} {:>7} {:>4}  {}",
            src,
            x.order,
            opt(&x.girth),
            x.edge_connectivity,
            opt(&x.zeta),
            if x.colourable { "yes" } else { "no" },
            opt(&x.resistance),
            opt(&x.oddness),
            opt(&x.ratio),
            x.five_circuits,
            &x.key[..16.min(x.key.len())]
        ),
    }
}
