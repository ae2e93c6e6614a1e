//! Per-graph invariant records and their computation.

use serde::{Deserialize, Serialize};
use snarklab::bounds::{oddness_upper_bound, ratio_check, RatioCheck, RatioClass, Q};
use snarklab::canon::canonical_key;
use snarklab::circuits::{five_circuit_incidence, girth};
use snarklab::colouring::{is_colourable, resistance, DeletionMode};
use snarklab::connectivity::{cyclic_connectivity, ZetaResult};
use snarklab::factors::oddness;
use snarklab::structure::{edge_connectivity, is_bridgeless};
use snarklab::MultiGraph;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(
    Clone,
    Copy,
    Debug,
    PartialEq,
    Eq,
    PartialOrd,
    Ord,
    Hash,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Skip {
    Omega,
    Rho,
    Zeta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub max_zeta: usize,
    pub skip: Vec<Skip>,
    pub timings: bool,
}

impl AnalyzeOptions {
    pub fn skips(&self, s: Skip) -> bool {
        self.skip.contains(&s)
    }

    /// Identifies the options that change a record; cache entries only
    /// match under the same fingerprint.
    pub fn fingerprint(&self) -> String {
        let mut s = self.skip.clone();
        s.sort();
        s.dedup();
        let names: Vec<&str> = s
            .iter()
            .map(|x| match x {
                Skip::Omega => "omega",
                Skip::Rho => "rho",
                Skip::Zeta => "zeta",
            })
            .collect();
        format!("max_zeta={};skip={}", self.max_zeta, names.join(","))
    }
}

/// Number, or a sentinel such as `">=8"`, `"acyclic"` or
/// `"undefined: bridge"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Exact(usize),
    Note(String),
}

impl Value {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Value::Exact(k) => Some(*k),
            Value::Note(_) => None,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(k) => write!(f, "{k}"),
            Value::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioBound {
    pub class: String,
    pub bound: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddnessBound {
    pub bound: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// `"exempt"` for the Petersen graph, otherwise the class bound on n/ω.
    pub ratio: Option<serde_json::Value>,
    /// (3n+q)/21, for snarks of girth at least 4.
    pub oddness: Option<OddnessBound>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub key: String,
    pub order: usize,
    pub girth: Option<usize>,
    pub edge_connectivity: usize,
    pub zeta: Option<Value>,
    pub colourable: bool,
    pub resistance: Option<usize>,
    pub oddness: Option<Value>,
    pub five_circuits: usize,
    pub five_circuit_profile: [usize; 7],
    pub ratio: Option<String>,
    pub bounds: Bounds,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<BTreeMap<String, f64>>,
}

fn q_str(q: Q) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn ratio_string(q: Q) -> String {
    q_str(q)
}

fn class_name(c: RatioClass) -> &'static str {
    match c {
        RatioClass::Any => "any",
        RatioClass::Cyclically3Connected => "cyclically 3-connected",
        RatioClass::Cyclically5Connected => "cyclically 5-connected",
    }
}

struct Clock {
    on: bool,
    t: BTreeMap<String, f64>,
}

impl Clock {
    fn time<R>(&mut self, name: &str, f: impl FnOnce() -> R) -> R {
        let s = Instant::now();
        let r = f();
        if self.on {
            self.t.insert(name.to_string(), s.elapsed().as_secs_f64());
        }
        r
    }
}

/// Computes every invariant of a cubic graph not excluded by `opts`.
pub fn analyze(g: &MultiGraph, opts: &AnalyzeOptions) -> snarklab::Result<InvariantRecord> {
    if !g.is_cubic() {
        let v = g.vertices().find(|&v| g.degree(v) != 3).unwrap_or(0);
        return Err(snarklab::Error::Degree {
            vertex: v,
            degree: g.degree(v),
            expected: "3",
        });
    }
    let mut clock = Clock {
        on: opts.timings,
        t: BTreeMap::new(),
    };
    let key = clock.time("canonical", || canonical_key(g));
    let gi = girth(g);
    let lambda = clock.time("edge_connectivity", || edge_connectivity(g));
    let zr = if opts.skips(Skip::Zeta) {
        None
    } else {
        Some(clock.time("zeta", || cyclic_connectivity(g, opts.max_zeta))?)
    };
    let zeta = zr.as_ref().map(|z| match z {
        ZetaResult::Exact(k, _) => Value::Exact(*k),
        ZetaResult::AtLeast(k) => Value::Note(format!(">={k}")),
        ZetaResult::NoCycleSeparatingCut => Value::Note("acyclic".into()),
    });
    let colourable = clock.time("colourable", || is_colourable(g));
    let bridgeless = is_bridgeless(g);
    let rho = if opts.skips(Skip::Rho) {
        None
    } else if colourable {
        Some(0)
    } else {
        Some(
            clock
                .time("resistance", || resistance(g, DeletionMode::Vertex))?
                .value,
        )
    };
    let omega = if opts.skips(Skip::Omega) {
        None
    } else if !bridgeless {
        Some(Value::Note("undefined: bridge".into()))
    } else if colourable {
        Some(Value::Exact(0))
    } else {
        Some(Value::Exact(clock.time("oddness", || oddness(g))?.value))
    };
    let prof = clock.time("five_circuits", || five_circuit_incidence(g));
    let w = omega.as_ref().and_then(Value::exact).filter(|&w| w > 0);
    let ratio = w.map(|w| q_str(Q::new(g.order() as u64, w as u64)));
    let mut bounds = Bounds::default();
    if let Some(w) = w {
        if let Some(z) = &zr {
            bounds.ratio = Some(match ratio_check(g, w, z) {
                RatioCheck::Exempt => serde_json::Value::String("exempt".into()),
                RatioCheck::Checked {
                    class,
                    bound,
                    holds,
                    ..
                } => serde_json::to_value(RatioBound {
                    class: class_name(class).into(),
                    bound: q_str(bound),
                    holds,
                })
                .expect("plain struct"),
            });
        }
        if gi.is_some_and(|x| x >= 4) {
            let b = oddness_upper_bound(g.order(), prof.circuit_count);
            bounds.oddness = Some(OddnessBound {
                bound: q_str(b),
                holds: Q::from_integer(w as u64) <= b,
            });
        }
    }
    Ok(InvariantRecord {
        key,
        order: g.order(),
        girth: gi,
        edge_connectivity: lambda,
        zeta,
        colourable,
        resistance: rho,
        oddness: omega,
        five_circuits: prof.circuit_count,
        five_circuit_profile: prof.profile,
        ratio,
        bounds,
        timings: opts.timings.then_some(clock.t),
    })
}

/// Consistency of the fields among themselves.
pub fn consistent(r: &InvariantRecord) -> bool {
    let w = r.oddness.as_ref().and_then(Value::exact);
    let rho_ok = match (r.resistance, w) {
        (Some(p), Some(w)) => p <= w && (p == 2) == (w == 2) && p != 1,
        _ => true,
    };
    rho_ok && w.is_none_or(|w| w % 2 == 0) && r.resistance.is_none_or(|p| (p == 0) == r.colourable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use snarklab::constructions::petersen;

    fn opts() -> AnalyzeOptions {
        AnalyzeOptions {
            max_zeta: 7,
            skip: vec![],
            timings: false,
        }
    }

    #[test]
    fn petersen_record() {
        let r = analyze(&petersen(), &opts()).unwrap();
        assert_eq!(r.order, 10);
        assert_eq!(r.girth, Some(5));
        assert_eq!(r.zeta, Some(Value::Exact(5)));
        assert_eq!(r.resistance, Some(2));
        assert_eq!(r.oddness, Some(Value::Exact(2)));
        assert_eq!(r.ratio.as_deref(), Some("5"));
        assert_eq!(r.five_circuits, 12);
        assert_eq!(
            r.bounds.ratio,
            Some(serde_json::Value::String("exempt".into()))
        );
        assert_eq!(
            r.bounds.oddness.as_ref().map(|b| b.bound.as_str()),
            Some("2")
        );
        assert!(consistent(&r));
    }

    #[test]
    fn fingerprint_ignores_skip_order() {
        let mut a = opts();
        a.skip = vec![Skip::Zeta, Skip::Rho];
        let mut b = opts();
        b.skip = vec![Skip::Rho, Skip::Zeta, Skip::Rho];
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), opts().fingerprint());
    }

    #[test]
    fn non_cubic_rejected() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(analyze(&g, &opts()).is_err());
    }
}
