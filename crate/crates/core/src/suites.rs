//! Verification suites. Each numbered criterion runs a list of named checks
//! and has a wall-clock budget; the claims, property and oracle suites group
//! them for the command line.

use crate::bounds::{is_petersen, oddness_upper_bound, profile_check, ratio_check, Q};
use crate::canon::{are_isomorphic, canonical_form, canonical_key};
use crate::catalogue;
use crate::circuits::{enumerate_circuits, girth, Circuit};
use crate::colouring::{
    boundary_colourings, find_colouring, find_network_colouring, is_colourable, resistance,
    resistance_at_least, verify_parity, Colour, DeletionMode,
};
use crate::connectivity::{cyclic_connectivity, is_cyclically_k_connected, ZetaResult};
use crate::constructions::families::{
    build_h_candidates, build_n1, build_n2, build_r, build_z, chain_z, double_p3, gv_extension, h1,
    h2, m_plan, ring_join,
};
use crate::constructions::superposition::check_superposition_resistance;
use crate::constructions::{
    build_p2, build_p3, build_p4e, build_p4v, build_p5ev, build_p5vvv, flower_snark, petersen,
    superpose,
};
use crate::error::{Error, Result};
use crate::factors::{
    enumerate_perfect_matchings, enumerate_two_factors, max_selected_edges, min_selected_5circuits,
    oddness, oddness_unpruned, special_edges,
};
use crate::graph::{delete_vertices, EdgeId, MultiGraph, Network, Vertex};
use crate::oracles::{colourable_brute, oddness_brute, perfect_matchings_brute, zeta_brute};
use crate::par;
use crate::reductions::{
    cut_sides_uncolourable, expand_edge_pair, expand_vertex, reduce, replace_edge, replace_vertex,
    replay, RuleSet,
};
use crate::structure::{is_bridgeless, is_two_connected};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Debug;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub seconds: f64,
    pub budget_seconds: Option<f64>,
}

impl CriterionReport {
    pub fn within_budget(&self) -> bool {
        self.budget_seconds.is_none_or(|b| self.seconds <= b)
    }

    pub fn passed(&self) -> bool {
        self.within_budget() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Claims,
    Properties,
    Oracles,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "claims" => Ok(Suite::Claims),
            "properties" => Ok(Suite::Properties),
            "oracles" => Ok(Suite::Oracles),
            _ => Err(Error::Param(format!(
                "unknown suite {s:?}; expected claims, properties or oracles"
            ))),
        }
    }
}

impl Suite {
    pub fn criteria(self) -> &'static [usize] {
        match self {
            Suite::Claims => &[1, 2, 3, 4, 5, 6, 7, 10],
            Suite::Properties => &[8],
            Suite::Oracles => &[9],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Largest catalogue order used; `None` keeps each criterion's default
    /// (12 for properties and oddness, 16 for cyclic connectivity).
    pub size_cap: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 1,
            size_cap: None,
        }
    }
}

impl SuiteOptions {
    fn cap(&self, default: usize) -> usize {
        self.size_cap.map_or(default, |c| c.min(default))
    }
}

pub const CRITERIA: [(usize, &str, Option<f64>); 10] = [
    (1, "Petersen graph baseline", Some(1.0)),
    (2, "Petersen networks and their boundary laws", Some(5.0)),
    (3, "order-28 snarks of oddness 4", Some(300.0)),
    (4, "oddness grows by 4 per extension", Some(300.0)),
    (5, "ring snarks from N1 and N2", Some(600.0)),
    (6, "7-pole Z and its chain", Some(300.0)),
    (7, "superposition M2", Some(1800.0)),
    (
        8,
        "property suite over small bridgeless graphs",
        Some(900.0),
    ),
    (9, "solvers agree with brute-force oracles", None),
    (10, "reductions preserve oddness", Some(300.0)),
];

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let passed = got == want;
        self.check(name, passed, format!("got {got:?}, expected {want:?}"));
    }

    fn all(&mut self, name: impl Into<String>, total: usize, failures: Vec<String>) {
        let detail = if failures.is_empty() {
            format!("{total} cases")
        } else {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            format!("{} of {total} failed: {}", failures.len(), shown.join("; "))
        };
        self.check(name, failures.is_empty(), detail);
    }
}

pub fn run_criterion(id: usize, opts: &SuiteOptions) -> Result<CriterionReport> {
    let &(_, title, budget) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::Param(format!("no criterion {id}; they run from 1 to 10")))?;
    let start = Instant::now();
    let mut c = Checks::default();
    match id {
        1 => petersen_baseline(&mut c)?,
        2 => network_laws(&mut c),
        3 => order_28(&mut c)?,
        4 => extensions(&mut c)?,
        5 => rings(&mut c)?,
        6 => z_chain(&mut c)?,
        7 => m2(&mut c)?,
        8 => properties(&mut c, opts)?,
        9 => oracles(&mut c, opts)?,
        _ => reductions(&mut c)?,
    }
    Ok(CriterionReport {
        id,
        title,
        checks: c.0,
        seconds: start.elapsed().as_secs_f64(),
        budget_seconds: budget,
    })
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<CriterionReport>> {
    suite
        .criteria()
        .iter()
        .map(|&id| run_criterion(id, opts))
        .collect()
}

fn zeta(g: &MultiGraph) -> Result<ZetaResult> {
    cyclic_connectivity(g, crate::connectivity::DEFAULT_CAP)
}

fn five_circuits(g: &MultiGraph) -> Vec<Circuit> {
    enumerate_circuits(g, 5)
        .into_iter()
        .filter(|c| c.len() == 5)
        .collect()
}

fn is_snark(g: &MultiGraph) -> bool {
    g.is_cubic() && is_two_connected(g) && !is_colourable(g)
}

fn petersen_baseline(c: &mut Checks) -> Result<()> {
    let p = petersen();
    c.eq("order", p.order(), 10);
    c.eq("girth", girth(&p), Some(5));
    c.eq("cyclic connectivity", zeta(&p)?.exact(), Some(5));
    c.eq("resistance", resistance(&p, DeletionMode::Vertex)?.value, 2);
    c.eq("oddness", oddness(&p)?.value, 2);
    let short = enumerate_circuits(&p, 5);
    c.eq("circuits of length at most 5", short.len(), 12);
    c.check("all of length 5", short.iter().all(|x| x.len() == 5), "");
    let fs = enumerate_two_factors(&p);
    c.eq("2-factors", fs.len(), 6);
    let shapes: Vec<Vec<usize>> = fs
        .iter()
        .map(|f| f.circuits.iter().map(Circuit::len).collect())
        .collect();
    c.check(
        "each 2-factor is two 5-circuits",
        shapes.iter().all(|s| s == &[5, 5]),
        format!("{shapes:?}"),
    );
    Ok(())
}

fn tuples(n: &Network) -> Vec<Vec<Colour>> {
    boundary_colourings(n).into_iter().collect()
}

fn network_laws(c: &mut Checks) {
    let nets = [
        ("P2", build_p2()),
        ("P3", build_p3()),
        ("P4v", build_p4v()),
        ("P4e", build_p4e()),
        ("P5vvv", build_p5vvv()),
        ("P5ev", build_p5ev()),
    ];
    let counts: Vec<usize> = nets.iter().map(|(_, n)| n.nonterminal_count()).collect();
    c.eq("nonterminal counts", counts, vec![10, 9, 8, 10, 7, 9]);
    for (name, n) in &nets[..2] {
        c.check(
            format!("{name} has no colouring"),
            find_network_colouring(n).is_none() && tuples(n).is_empty(),
            "",
        );
    }
    let law = |c: &mut Checks, name: &str, n: &Network, f: &dyn Fn(&[Colour]) -> bool| {
        let ts = tuples(n);
        let bad: Vec<String> = ts
            .iter()
            .filter(|t| !f(t))
            .map(|t| format!("{t:?}"))
            .collect();
        c.check(
            format!("{name} has boundary colourings"),
            !ts.is_empty(),
            format!("{}", ts.len()),
        );
        c.all(format!("{name} law"), ts.len(), bad);
    };
    law(c, "P4v", &nets[2].1, &|t| t[0] == t[1] && t[2] == t[3]);
    law(c, "P4e", &nets[3].1, &|t| t[0] != t[1] && t[2] != t[3]);
    law(c, "P5vvv", &nets[4].1, &|t| {
        let mut k = [0; 4];
        for &x in t {
            k[x as usize] += 1;
        }
        let mut m = [k[1], k[2], k[3]];
        m.sort_unstable();
        m == [1, 1, 3] && ((t[0] == t[1]) != (t[2] == t[3]))
    });
    law(c, "P5ev", &nets[5].1, &|t| t[0] != t[1]);
}

fn order_28(c: &mut Checks) -> Result<()> {
    let hs = build_h_candidates()?;
    c.check("candidates found", !hs.is_empty(), format!("{}", hs.len()));
    let distinct: std::collections::BTreeSet<Vec<u8>> = hs.iter().map(canonical_form).collect();
    c.eq("pairwise non-isomorphic", distinct.len(), hs.len());
    let mut zetas = Vec::new();
    for (i, h) in hs.iter().enumerate() {
        c.eq(format!("H[{i}] order"), h.order(), 28);
        c.check(format!("H[{i}] is a snark"), is_snark(h), "");
        c.eq(format!("H[{i}] oddness"), oddness(h)?.value, 4);
        c.check(
            format!("H[{i}] girth >= 5"),
            girth(h).is_some_and(|g| g >= 5),
            format!("{:?}", girth(h)),
        );
        c.eq(
            format!("H[{i}] resistance"),
            resistance(h, DeletionMode::Vertex)?.value,
            3,
        );
        zetas.push(zeta(h)?.exact());
    }
    c.check(
        "one with cyclic connectivity 2",
        zetas.contains(&Some(2)),
        format!("{zetas:?}"),
    );
    c.check(
        "one with cyclic connectivity 3",
        zetas.contains(&Some(3)),
        format!("{zetas:?}"),
    );
    Ok(())
}

fn extensions(c: &mut Checks) -> Result<()> {
    let mut rows = Vec::new();
    for i in 0..5 {
        let g = build_r(i)?;
        if i >= 1 {
            c.check(format!("R{i} is a snark"), is_snark(&g), "");
        }
        rows.push((i, g.order(), oddness(&g)?.value));
    }
    c.eq("R1 order and oddness", (rows[1].1, rows[1].2), (28, 4));
    c.eq("R1 ratio", Q::new(28, rows[1].2 as u64), Q::from_integer(7));
    c.eq("R2 order and oddness", (rows[2].1, rows[2].2), (40, 6));
    c.eq("R2 ratio", Q::new(40, rows[2].2 as u64), Q::new(20, 3));
    for i in 3..5 {
        c.eq(
            format!("R{i} adds (+30, +4) to R{}", i - 2),
            (
                rows[i].1 - rows[i - 2].1,
                rows[i].2 as i64 - rows[i - 2].2 as i64,
            ),
            (30, 4),
        );
    }
    let p = petersen();
    let r2 = build_r(2)?;
    let same = p
        .vertices()
        .all(|v| gv_extension(&p, v).is_ok_and(|g| are_isomorphic(&g, &r2)));
    c.check("R2 does not depend on the chosen vertex", same, "");
    Ok(())
}

fn rings(c: &mut Checks) -> Result<()> {
    let n1 = build_n1();
    let n2 = build_n2();
    c.check("N1 uncolourable", find_network_colouring(&n1).is_none(), "");
    c.eq("N2 nonterminal vertices", n2.nonterminal_count(), 26);
    c.check("N2 uncolourable", find_network_colouring(&n2).is_none(), "");
    let inner: Vec<Vertex> = n2
        .graph()
        .vertices()
        .filter(|&v| !n2.is_terminal(v))
        .collect();
    let bad: Vec<String> = par::map(&inner, |&v| {
        let g = delete_vertices(n2.graph(), &[v])
            .expect("vertex exists")
            .graph;
        (v, find_colouring(&g).expect("subcubic").is_some())
    })
    .into_iter()
    .filter(|&(_, col)| col)
    .map(|(v, _)| format!("N2 - {v} colourable"))
    .collect();
    c.all(
        "N2 minus any nonterminal vertex uncolourable",
        inner.len(),
        bad,
    );

    let g44 = ring_join(&[n2.clone(), n1])?;
    c.eq("44-vertex ring order", g44.order(), 44);
    c.check("44-vertex ring is a snark", is_snark(&g44), "");
    c.eq(
        "44-vertex ring resistance",
        resistance(&g44, DeletionMode::Vertex)?.value,
        3,
    );
    c.eq("44-vertex ring oddness", oddness(&g44)?.value, 4);
    c.eq(
        "44-vertex ring cyclic connectivity",
        zeta(&g44)?.exact(),
        Some(4),
    );
    c.eq("44-vertex ring girth", girth(&g44), Some(5));

    let g52 = ring_join(&[n2.clone(), n2])?;
    c.eq("52-vertex ring order", g52.order(), 52);
    c.eq(
        "52-vertex ring resistance",
        resistance(&g52, DeletionMode::Vertex)?.value,
        4,
    );
    Ok(())
}

fn z_chain(c: &mut Checks) -> Result<()> {
    let z = build_z();
    c.eq("Z nonterminal vertices", z.nonterminal_count(), 25);
    c.eq("Z terminals", z.terminals().len(), 7);
    c.check("Z uncolourable", find_network_colouring(&z).is_none(), "");
    let g = chain_z(2)?;
    c.eq("chain of two order", g.order(), 50);
    c.check("chain of two is a snark", is_snark(&g), "");
    c.check(
        "chain of two resistance >= 2",
        resistance_at_least(&g, DeletionMode::Vertex, 2),
        "",
    );
    c.eq(
        "chain of two cyclic connectivity",
        zeta(&g)?.exact(),
        Some(5),
    );
    Ok(())
}

fn m2(c: &mut Checks) -> Result<()> {
    let mp = m_plan(2)?;
    let sup = superpose(&mp.plan)?;
    let g = &sup.graph;
    c.eq("M2 order", g.order(), 198);
    c.check("M2 cubic", g.is_cubic(), "");
    c.check("M2 uncolourable", !is_colourable(g), "");
    let vs: Vec<Vertex> = g.vertices().collect();
    let runs = par::map(&vs, |&v| {
        let t = Instant::now();
        let h = delete_vertices(g, &[v]).expect("vertex exists").graph;
        let col = is_colourable(&h);
        (v, col, t.elapsed().as_secs_f64())
    });
    let bad: Vec<String> = runs
        .iter()
        .filter(|r| r.1)
        .map(|r| format!("M2 - {} colourable", r.0))
        .collect();
    c.all("M2 minus any vertex uncolourable", vs.len(), bad);
    let slowest = runs.iter().map(|r| r.2).fold(0.0, f64::max);
    c.check(
        "each deletion check under 2 s",
        slowest < 2.0,
        format!("slowest {slowest:.2} s"),
    );
    let d = is_cyclically_k_connected(g, 6)?;
    c.check(
        "M2 cyclically 6-connected",
        d.holds,
        format!("{:?}", d.counterexample.map(|x| x.cut)),
    );
    let cmp = check_superposition_resistance(&mp.plan)?;
    c.eq("L2 resistance", cmp.base_resistance, 2);
    c.check(
        "M2 at least as resistant as L2",
        cmp.holds(),
        format!("{cmp:?}"),
    );
    Ok(())
}

/// Vertex sets containing vertex 0 whose boundary has at most `k` edges.
fn small_cuts(g: &MultiGraph, k: usize) -> Vec<Vec<EdgeId>> {
    let n = g.order();
    let mut out = Vec::new();
    for mask in (1u32..(1 << n)).step_by(2) {
        if mask == (1 << n) - 1 {
            continue;
        }
        let cut: Vec<EdgeId> = g
            .edges()
            .filter(|&(_, [a, b])| (mask >> a & 1) != (mask >> b & 1))
            .map(|(e, _)| e)
            .collect();
        if cut.len() <= k {
            out.push(cut);
        }
    }
    out
}

fn properties(c: &mut Checks, opts: &SuiteOptions) -> Result<()> {
    let cap = opts.cap(12);
    let graphs = catalogue::bridgeless_up_to(cap);
    let idx: Vec<usize> = (0..graphs.len()).collect();
    // (name, failure) pairs per graph
    let results: Vec<Result<Vec<(&'static str, String)>>> = par::map(&idx, |&i| {
        let g = graphs[i];
        let mut bad = Vec::new();
        let w = oddness(g)?;
        let rv = resistance(g, DeletionMode::Vertex)?;
        let re = resistance(g, DeletionMode::Edge)?;
        let (w, r) = (w.value, rv.value);
        let tag = |s: &str| format!("graph {i} ({} vertices): {s}", g.order());
        if r > w {
            bad.push(("resistance <= oddness", tag(&format!("{r} > {w}"))));
        }
        if w % 2 == 1 {
            bad.push(("oddness even", tag(&format!("{w}"))));
        }
        if r == 1 {
            bad.push(("resistance never 1", tag("1")));
        }
        if (r == 2) != (w == 2) {
            bad.push(("resistance 2 iff oddness 2", tag(&format!("{r} vs {w}"))));
        }
        if r != re.value {
            bad.push((
                "vertex and edge resistance agree",
                tag(&format!("{r} vs {}", re.value)),
            ));
        }
        if !rv.witness.verify(g) || !re.witness.verify(g) {
            bad.push(("deletion witnesses verify", tag("bad witness")));
        }
        if enumerate_perfect_matchings(g).len() != enumerate_two_factors(g).len() {
            bad.push(("matchings and 2-factors correspond", tag("count mismatch")));
        }
        if let Some(col) = find_colouring(g)? {
            for cut in small_cuts(g, 4) {
                if !verify_parity(&col, &cut).holds {
                    bad.push(("parity on cuts of size <= 4", tag(&format!("{cut:?}"))));
                }
            }
        }
        let mut rng =
            ChaCha8Rng::seed_from_u64(opts.seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let fives = five_circuits(g);
        let subsets: Vec<Vec<Circuit>> = if fives.len() <= 8 {
            (0u32..1 << fives.len())
                .map(|m| {
                    fives
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| m >> j & 1 == 1)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect()
        } else {
            (0..100)
                .map(|_| {
                    fives
                        .iter()
                        .filter(|_| rng.random_bool(0.5))
                        .cloned()
                        .collect()
                })
                .collect()
        };
        for s in subsets {
            let (k, f) = min_selected_5circuits(g, &s)?;
            if 6 * k > s.len() || !f.is_valid_in(g) {
                bad.push((
                    "2-factor avoiding 5/6 of chosen 5-circuits",
                    tag(&format!("{k} of {}", s.len())),
                ));
            }
        }
        for _ in 0..100 {
            let s: Vec<EdgeId> = (0..g.size() as EdgeId)
                .filter(|_| rng.random_bool(0.5))
                .collect();
            let (k, f) = max_selected_edges(g, &s)?;
            if 3 * k < 2 * s.len() || !f.is_valid_in(g) {
                bad.push((
                    "2-factor holding 2/3 of chosen edges",
                    tag(&format!("{k} of {}", s.len())),
                ));
            }
        }
        Ok(bad)
    });
    let mut fails: Vec<(&str, String)> = Vec::new();
    for r in results {
        fails.extend(r?);
    }
    for name in [
        "resistance <= oddness",
        "oddness even",
        "resistance never 1",
        "resistance 2 iff oddness 2",
        "vertex and edge resistance agree",
        "deletion witnesses verify",
        "matchings and 2-factors correspond",
        "parity on cuts of size <= 4",
        "2-factor avoiding 5/6 of chosen 5-circuits",
        "2-factor holding 2/3 of chosen edges",
    ] {
        let mine: Vec<String> = fails
            .iter()
            .filter(|f| f.0 == name)
            .map(|f| f.1.clone())
            .collect();
        c.all(name, graphs.len(), mine);
    }
    snark_claims(c, opts)
}

/// Five-circuit, oddness-bound and ratio claims on every snark of the
/// catalogue plus a few constructed ones.
fn snark_claims(c: &mut Checks, opts: &SuiteOptions) -> Result<()> {
    let mut snarks: Vec<(String, MultiGraph)> = catalogue::snarks_up_to(opts.cap(16))
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("catalogue snark {i}"), g.clone()))
        .collect();
    c.check(
        "catalogue has snarks",
        !snarks.is_empty(),
        format!("{}", snarks.len()),
    );
    if opts.size_cap.is_none() {
        snarks.push(("J5".into(), flower_snark(5)?));
        snarks.push(("H1".into(), h1()));
        snarks.push(("H2".into(), h2()));
        snarks.push(("R2".into(), build_r(2)?));
        snarks.push((
            "44-vertex ring".into(),
            ring_join(&[build_n2(), build_n1()])?,
        ));
    }
    let results: Vec<Result<[Option<String>; 4]>> = par::map(&snarks, |(name, g)| {
        let z = zeta(g)?;
        let w = oddness(g)?.value;
        let exempt = is_petersen(g);
        let mut out: [Option<String>; 4] = Default::default();
        if !exempt {
            let pc = profile_check(g, &z);
            if !pc.holds() {
                out[0] = Some(format!("{name}: profile {:?}", pc.profile.profile));
            }
            let cv = ratio_check(g, w, &z);
            if !cv.holds() {
                out[2] = Some(format!("{name}: {cv:?}"));
            }
            let fives = five_circuits(g);
            for v in g.vertices() {
                let through: Vec<Circuit> = fives
                    .iter()
                    .filter(|x| x.vertices.contains(&v))
                    .cloned()
                    .collect();
                let (k, _) = min_selected_5circuits(g, &through)?;
                if k != 0 {
                    out[3] = Some(format!("{name}: vertex {v}"));
                    break;
                }
            }
        }
        if girth(g).is_some_and(|x| x >= 4) {
            let q = five_circuits(g).len();
            if Q::from_integer(w as u64) > oddness_upper_bound(g.order(), q) {
                out[1] = Some(format!("{name}: oddness {w}, n {}, q {q}", g.order()));
            }
        }
        Ok(out)
    });
    let mut cols: [Vec<String>; 4] = Default::default();
    for r in results {
        for (j, x) in r?.into_iter().enumerate() {
            cols[j].extend(x);
        }
    }
    let names = [
        "5-circuit profile claims",
        "oddness at most (3n+q)/21",
        "order/oddness ratio bounds",
        "some 2-factor avoids the 5-circuits at each vertex",
    ];
    for (name, col) in names.iter().zip(cols) {
        c.all(*name, snarks.len(), col);
    }
    let small: Vec<&MultiGraph> = catalogue::snarks_up_to(opts.cap(16));
    let with_special: Vec<Result<Option<String>>> = par::map(&small, |g| {
        Ok((!special_edges(g)?.is_empty()).then(|| canonical_key(g)))
    });
    let mut bad = Vec::new();
    for r in with_special {
        bad.extend(r?);
    }
    c.all(
        "no snark of order at most 16 has a special edge",
        small.len(),
        bad,
    );
    if opts.size_cap.is_none() {
        let d = double_p3();
        let sp = special_edges(&d)?;
        c.check(
            "two P3 copies joined: 18-vertex snark with a special edge",
            d.order() == 18 && !is_colourable(&d) && is_bridgeless(&d) && !sp.is_empty(),
            format!("special {sp:?}"),
        );
    }
    Ok(())
}

fn oracles(c: &mut Checks, opts: &SuiteOptions) -> Result<()> {
    let zg: Vec<&MultiGraph> = catalogue::up_to(opts.cap(16)).collect();
    let zr: Vec<Result<Option<String>>> = par::map(&zg, |g| {
        let z = cyclic_connectivity(g, 4)?;
        let b = zeta_brute(g, 4);
        let cert_ok = match &z {
            ZetaResult::Exact(_, cert) => cert.validate(g).is_ok(),
            _ => true,
        };
        Ok((z.exact() != b || !cert_ok).then(|| format!("{} vs {b:?}", z)))
    });
    let mut bad = Vec::new();
    for r in zr {
        bad.extend(r?);
    }
    c.all("cyclic connectivity up to 4", zg.len(), bad);

    let og: Vec<&MultiGraph> = catalogue::up_to(opts.cap(12)).collect();
    let or: Vec<Result<[Option<String>; 3]>> = par::map(&og, |g| {
        let mut out: [Option<String>; 3] = Default::default();
        if is_colourable(g) != colourable_brute(g) {
            out[0] = Some(format!("{} vertices", g.order()));
        }
        if is_bridgeless(g) {
            let a = oddness(g)?.value;
            let b = oddness_unpruned(g)?;
            let x = oddness_brute(g);
            if a != b || Some(a) != x {
                out[1] = Some(format!("{a} / {b} / {x:?}"));
            }
        }
        let pm: Vec<Vec<EdgeId>> = enumerate_perfect_matchings(g)
            .into_iter()
            .map(|m| {
                let mut v = m.0;
                v.sort_unstable();
                v
            })
            .collect();
        let mut pm = pm;
        pm.sort();
        let mut bm = perfect_matchings_brute(g);
        bm.sort();
        if pm != bm {
            out[2] = Some(format!("{} vs {}", pm.len(), bm.len()));
        }
        Ok(out)
    });
    let mut cols: [Vec<String>; 3] = Default::default();
    for r in or {
        for (j, x) in r?.into_iter().enumerate() {
            cols[j].extend(x);
        }
    }
    let names = [
        "colourability",
        "oddness (pruned, unpruned, brute force)",
        "perfect matchings",
    ];
    for (name, col) in names.iter().zip(cols) {
        c.all(*name, og.len(), col);
    }
    Ok(())
}

fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4")
}

fn k33() -> MultiGraph {
    let es: Vec<(Vertex, Vertex)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    MultiGraph::from_edges(6, &es).expect("K33")
}

fn prism() -> MultiGraph {
    MultiGraph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("prism")
}

fn cube() -> MultiGraph {
    let es: Vec<(Vertex, Vertex)> = (0..8u32)
        .flat_map(|v| [1, 2, 4].into_iter().map(move |b| (v, v ^ b)))
        .filter(|&(a, b)| a < b)
        .collect();
    MultiGraph::from_edges(8, &es).expect("cube")
}

fn theta() -> MultiGraph {
    MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).expect("theta")
}

/// First pair of adjacent edges whose 4-circuit expansion stays a snark.
fn four_circuit_snark(g: &MultiGraph) -> Result<MultiGraph> {
    for e in 0..g.size() as EdgeId {
        for f in e + 1..g.size() as EdgeId {
            let [a, b] = g.ends(e);
            let [x, y] = g.ends(f);
            if a == x || a == y || b == x || b == y {
                let h = expand_edge_pair(g, e, f)?;
                if is_snark(&h) {
                    return Ok(h);
                }
            }
        }
    }
    Err(Error::Construction(
        "no adjacent edge pair expands to a snark".into(),
    ))
}

/// The twenty reduction inputs: name, graph, rules, and whether the result
/// must be the Petersen graph.
pub fn reduction_inputs() -> Result<Vec<(String, MultiGraph, RuleSet, bool)>> {
    let p = petersen();
    let j5 = flower_snark(5)?;
    let t = expand_vertex(&p, 0)?;
    Ok(vec![
        (
            "Petersen, one triangle".into(),
            t.clone(),
            RuleSet::Girth4,
            true,
        ),
        (
            "Petersen, two triangles".into(),
            expand_vertex(&t, 5)?,
            RuleSet::Girth4,
            true,
        ),
        (
            "J5, one triangle".into(),
            expand_vertex(&j5, 0)?,
            RuleSet::Girth4,
            false,
        ),
        (
            "H2, one triangle".into(),
            expand_vertex(&h2(), 0)?,
            RuleSet::Girth4,
            false,
        ),
        (
            "Petersen, one digon".into(),
            replace_edge(&p, 0, &theta(), 0)?,
            RuleSet::Girth4,
            true,
        ),
        (
            "Petersen, 4-circuit on edges 0, 1".into(),
            expand_edge_pair(&p, 0, 1)?,
            RuleSet::Girth5,
            true,
        ),
        (
            "Petersen, 4-circuit on edges 0, 5".into(),
            expand_edge_pair(&p, 0, 5)?,
            RuleSet::Girth5,
            true,
        ),
        (
            "J5, 4-circuit".into(),
            four_circuit_snark(&j5)?,
            RuleSet::Girth5,
            false,
        ),
        (
            "Petersen, vertex to K33".into(),
            replace_vertex(&p, 0, &k33(), 0)?,
            RuleSet::Girth5,
            true,
        ),
        (
            "Petersen, vertex to cube".into(),
            replace_vertex(&p, 0, &cube(), 0)?,
            RuleSet::Girth5,
            true,
        ),
        (
            "Petersen, edge to K4".into(),
            replace_edge(&p, 0, &k4(), 0)?,
            RuleSet::Cut2,
            true,
        ),
        (
            "Petersen, edge to K33".into(),
            replace_edge(&p, 4, &k33(), 0)?,
            RuleSet::Cut2,
            true,
        ),
        (
            "Petersen, edge to prism".into(),
            replace_edge(&p, 7, &prism(), 0)?,
            RuleSet::Cut2,
            true,
        ),
        (
            "Petersen, edge to cube".into(),
            replace_edge(&p, 0, &cube(), 0)?,
            RuleSet::Cut2,
            true,
        ),
        (
            "two Petersen graphs across a 2-cut".into(),
            replace_edge(&p, 0, &p, 0)?,
            RuleSet::Cut2,
            false,
        ),
        (
            "Petersen, vertex to K33, 3-cut".into(),
            replace_vertex(&p, 0, &k33(), 0)?,
            RuleSet::Cut3,
            true,
        ),
        (
            "Petersen, vertex to prism".into(),
            replace_vertex(&p, 0, &prism(), 0)?,
            RuleSet::Cut3,
            true,
        ),
        (
            "Petersen, vertex to cube, 3-cut".into(),
            replace_vertex(&p, 0, &cube(), 0)?,
            RuleSet::Cut3,
            true,
        ),
        (
            "two Petersen graphs across a 3-cut".into(),
            replace_vertex(&p, 0, &p, 0)?,
            RuleSet::Cut3,
            false,
        ),
        (
            "triangle and K33 2-pole, all rules".into(),
            replace_edge(&t, 3, &k33(), 0)?,
            RuleSet::All,
            true,
        ),
    ])
}

fn reductions(c: &mut Checks) -> Result<()> {
    let inputs = reduction_inputs()?;
    c.eq("inputs", inputs.len(), 20);
    let results = par::map(&inputs, |(name, g, rules, to_p)| -> Result<Vec<String>> {
        let mut bad = Vec::new();
        if !is_snark(g) {
            return Ok(vec![format!("{name}: input is not a snark")]);
        }
        let r = match reduce(g, *rules) {
            Ok(r) => r,
            Err(e) => return Ok(vec![format!("{name}: {e}")]),
        };
        let h = &r.graph;
        let w0 = oddness(g)?.value;
        let w1 = oddness(h)?.value;
        if w0 != w1 {
            bad.push(format!("{name}: oddness {w0} -> {w1}"));
        }
        if h.order() > g.order() || !is_two_connected(h) || !h.is_cubic() {
            bad.push(format!("{name}: not a smaller 2-connected cubic graph"));
        }
        let gi = girth(h).unwrap_or(usize::MAX);
        let ok = match rules {
            RuleSet::Girth4 => gi >= 4 && zeta(h)?.at_least(zeta(g)?.exact().unwrap_or(0)),
            RuleSet::Girth5 => gi >= 5,
            RuleSet::Cut2 => cut_sides_uncolourable(h, 2)?,
            RuleSet::Cut3 => cut_sides_uncolourable(h, 3)?,
            RuleSet::All => {
                gi >= 5 && cut_sides_uncolourable(h, 2)? && cut_sides_uncolourable(h, 3)?
            }
        };
        if !ok {
            bad.push(format!("{name}: postcondition of {rules:?} fails"));
        }
        if *to_p && !is_petersen(h) {
            bad.push(format!(
                "{name}: expected the Petersen graph, got order {}",
                h.order()
            ));
        }
        if replay(g, &r.trace)? != *h || reduce(g, *rules)?.trace != r.trace {
            bad.push(format!("{name}: trace does not replay"));
        }
        Ok(bad)
    });
    let mut bad = Vec::new();
    for r in results {
        bad.extend(r?);
    }
    c.all(
        "every reduction preserves oddness and meets its postcondition",
        inputs.len(),
        bad,
    );
    Ok(())
}
