//! Directory-wide analysis with a ζ-class summary of the ratio n/ω.

use crate::fail::{io, Failure};
use crate::record::{ratio_string, Value};
use crate::runner::{Item, Row};
use serde::Serialize;
use snarklab::bounds::Q;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Regular, non-hidden files of `dir` in name order, JSON files excluded.
pub fn graph_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| io(dir, e))? {
        let p = entry.map_err(|e| io(dir, e))?.path();
        let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
        let skip = name.starts_with('.') || name.ends_with(".json") || name.ends_with(".jsonl");
        if p.is_file() && !skip {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

pub fn read_dir_items(dir: &Path) -> Result<Vec<Item>, Failure> {
    let mut items = Vec::new();
    for f in graph_files(dir)? {
        let mut it = crate::runner::read_items(&f)?;
        for i in &mut it {
            i.source = f
                .file_name()
                .and_then(|n| n.to_str())
                .unwrap_or("?")
                .to_string();
        }
        items.extend(it);
    }
    Ok(items)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub graphs: usize,
    /// Records with a defined, nonzero oddness.
    pub with_ratio: usize,
    pub min_ratio: Option<String>,
    pub max_ratio: Option<String>,
    pub mean_ratio: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub errors: usize,
    /// Keyed by cyclic connectivity (`"skipped"` when not computed).
    pub zeta_classes: BTreeMap<String, ClassSummary>,
}

pub fn summarize(rows: &[Row]) -> Summary {
    let mut s = Summary::default();
    let mut ratios: BTreeMap<String, Vec<Q>> = BTreeMap::new();
    for r in rows {
        let Some(x) = r.record() else {
            s.errors += 1;
            continue;
        };
        s.records += 1;
        let class = x
            .zeta
            .as_ref()
            .map_or("skipped".to_string(), Value::to_string);
        s.zeta_classes.entry(class.clone()).or_default().graphs += 1;
        if let Some(w) = x.oddness.as_ref().and_then(Value::exact).filter(|&w| w > 0) {
            ratios
                .entry(class)
                .or_default()
                .push(Q::new(x.order as u64, w as u64));
        }
    }
    for (class, qs) in ratios {
        let c = s.zeta_classes.get_mut(&class).expect("class seen");
        c.with_ratio = qs.len();
        let sum = qs.iter().fold(Q::from_integer(0), |a, &b| a + b);
        c.min_ratio = qs.iter().min().map(|&q| ratio_string(q));
        c.max_ratio = qs.iter().max().map(|&q| ratio_string(q));
        c.mean_ratio = Some(ratio_string(sum / Q::from_integer(qs.len() as u64)));
    }
    s
}

pub fn summary_text(s: &Summary) -> String {
    let mut out = format!("{} records, {} errors\n", s.records, s.errors);
    out.push_str(&format!(
        "{:>8} {:>7} {:>7} {:>10} {:>10} {:>10}\n",
        "zeta", "graphs", "ratios", "min n/w", "max n/w", "mean n/w"
    ));
    let d = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
    for (k, c) in &s.zeta_classes {
        out.push_str(&format!(
            "{:>8} {:>7} {:>7} {:>10} {:>10} {:>10}\n",
            k,
            c.graphs,
            c.with_ratio,
            d(&c.min_ratio),
            d(&c.max_ratio),
            d(&c.mean_ratio)
        ));
    }
    out
}
