//! Perfect matchings, 2-factors and searches over them.
//!
//! All searches share one engine: a perfect matching is grown by covering
//! the lowest uncovered vertex, and the complementary 2-factor edges are
//! tracked as path fragments so that circuits are noticed the moment they
//! close. Objectives are evaluated incrementally and used to prune.

use crate::circuits::Circuit;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Vertex};
use crate::structure::bridges;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching(pub Vec<EdgeId>);

impl PerfectMatching {
    pub fn is_valid_in(&self, g: &MultiGraph) -> bool {
        let mut hit = vec![0u8; g.order()];
        for &e in &self.0 {
            if e as usize >= g.size() {
                return false;
            }
            for v in g.ends(e) {
                hit[v as usize] += 1;
            }
        }
        hit.iter().all(|&h| h == 1)
    }
}

/// Spanning 2-regular subgraph with its circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    pub edges: Vec<EdgeId>,
    pub circuits: Vec<Circuit>,
}

impl TwoFactor {
    /// Complement of a perfect matching of a cubic graph.
    pub fn from_matching(g: &MultiGraph, m: &PerfectMatching) -> TwoFactor {
        let mut in_m = vec![false; g.size()];
        for &e in &m.0 {
            in_m[e as usize] = true;
        }
        let edges: Vec<EdgeId> = (0..g.size() as EdgeId)
            .filter(|&e| !in_m[e as usize])
            .collect();
        Self::from_edges(g, edges)
    }

    /// Decomposes a 2-regular edge set into circuits, each starting at its
    /// smallest vertex.
    pub fn from_edges(g: &MultiGraph, mut edges: Vec<EdgeId>) -> TwoFactor {
        edges.sort_unstable();
        let mut in_f = vec![false; g.size()];
        for &e in &edges {
            in_f[e as usize] = true;
        }
        let mut done = vec![false; g.order()];
        let mut circuits = Vec::new();
        for s in g.vertices() {
            if done[s as usize] {
                continue;
            }
            let mut vs = vec![s];
            let mut es = Vec::new();
            done[s as usize] = true;
            let mut cur = s;
            let mut last = EdgeId::MAX;
            loop {
                let next = g
                    .incident(cur)
                    .iter()
                    .filter(|&&(_, e)| in_f[e as usize] && e != last)
                    .min_by_key(|&&(_, e)| e)
                    .copied();
                let Some((w, e)) = next else { break };
                es.push(e);
                last = e;
                if w == s {
                    break;
                }
                if done[w as usize] {
                    break;
                }
                done[w as usize] = true;
                vs.push(w);
                cur = w;
            }
            circuits.push(Circuit {
                vertices: vs,
                edges: es,
            });
        }
        TwoFactor { edges, circuits }
    }

    pub fn odd_count(&self) -> usize {
        self.circuits.iter().filter(|c| c.is_odd()).count()
    }

    /// `p_i`: number of circuits of each length.
    pub fn length_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in &self.circuits {
            *m.entry(c.len()).or_insert(0) += 1;
        }
        m
    }

    pub fn is_valid_in(&self, g: &MultiGraph) -> bool {
        let mut deg = vec![0u8; g.order()];
        for &e in &self.edges {
            if e as usize >= g.size() {
                return false;
            }
            for v in g.ends(e) {
                deg[v as usize] += 1;
            }
        }
        if deg.iter().any(|&d| d != 2) {
            return false;
        }
        let mut covered: Vec<EdgeId> = self
            .circuits
            .iter()
            .flat_map(|c| c.edges.iter().copied())
            .collect();
        covered.sort_unstable();
        covered == self.edges && self.circuits.iter().all(|c| c.is_valid_in(g))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddnessCertificate {
    pub value: usize,
    pub factor: TwoFactor,
}

impl OddnessCertificate {
    pub fn is_valid_in(&self, g: &MultiGraph) -> bool {
        self.factor.is_valid_in(g) && self.factor.odd_count() == self.value && self.value % 2 == 0
    }
}

#[derive(Clone, Copy)]
enum Goal<'a> {
    /// Every matching, no pruning.
    All,
    Oddness {
        floor: usize,
    },
    /// Fewest listed circuits present; `lists[e]` are the circuits through `e`.
    FewestCircuits {
        lists: &'a [Vec<u32>],
        sizes: &'a [u8],
    },
    /// Fewest matching edges inside a marked set.
    FewestMarked {
        marked: &'a [bool],
    },
}

enum Undo {
    Frag(Vertex, Vertex, u32),
    InF(EdgeId),
    Hit(u32),
}

struct Engine<'a, 'b> {
    g: &'a MultiGraph,
    goal: Goal<'b>,
    prune: bool,
    covered: Vec<bool>,
    in_f: Vec<bool>,
    /// path-fragment partner and length, valid at fragment ends
    other: Vec<Vertex>,
    len: Vec<u32>,
    hits: Vec<u8>,
    log: Vec<Undo>,
    matching: Vec<EdgeId>,
    score: usize,
    best: usize,
    best_matching: Option<Vec<EdgeId>>,
    visit: Option<&'a mut dyn FnMut(&[EdgeId])>,
    pub nodes: u64,
}

impl<'a, 'b> Engine<'a, 'b> {
    fn new(g: &'a MultiGraph, goal: Goal<'b>, prune: bool) -> Self {
        let n = g.order();
        Engine {
            g,
            goal,
            prune,
            covered: vec![false; n],
            in_f: vec![false; g.size()],
            other: (0..n as Vertex).collect(),
            len: vec![0; n],
            hits: match goal {
                Goal::FewestCircuits { sizes, .. } => vec![0; sizes.len()],
                _ => Vec::new(),
            },
            log: Vec::new(),
            matching: Vec::new(),
            score: 0,
            best: usize::MAX,
            best_matching: None,
            visit: None,
            nodes: 0,
        }
    }

    /// Lower bound on the final objective given the current partial state.
    fn bound(&self) -> usize {
        match self.goal {
            // the total number of odd circuits is even
            Goal::Oddness { .. } => self.score + self.score % 2,
            _ => self.score,
        }
    }

    fn add_f_edge(&mut self, e: EdgeId) {
        self.in_f[e as usize] = true;
        self.log.push(Undo::InF(e));
        if let Goal::FewestCircuits { lists, sizes } = self.goal {
            for &c in &lists[e as usize] {
                self.hits[c as usize] += 1;
                self.log.push(Undo::Hit(c));
                if self.hits[c as usize] == sizes[c as usize] {
                    self.score += 1;
                }
            }
        }
        let [u, w] = self.g.ends(e);
        let (ou, ow) = (self.other[u as usize], self.other[w as usize]);
        if ou == w {
            // closes a circuit
            let length = self.len[u as usize] + 1;
            if let Goal::Oddness { .. } = self.goal {
                if length % 2 == 1 {
                    self.score += 1;
                }
            }
            self.log.push(Undo::Frag(u, ou, self.len[u as usize]));
            self.log.push(Undo::Frag(w, ow, self.len[w as usize]));
            return;
        }
        let total = self.len[u as usize] + self.len[w as usize] + 1;
        for x in [u, w, ou, ow] {
            self.log
                .push(Undo::Frag(x, self.other[x as usize], self.len[x as usize]));
        }
        self.other[ou as usize] = ow;
        self.other[ow as usize] = ou;
        self.len[ou as usize] = total;
        self.len[ow as usize] = total;
    }

    fn undo_to(&mut self, mark: usize, score: usize) {
        while self.log.len() > mark {
            match self.log.pop().unwrap() {
                Undo::Frag(x, o, l) => {
                    self.other[x as usize] = o;
                    self.len[x as usize] = l;
                }
                Undo::InF(e) => self.in_f[e as usize] = false,
                Undo::Hit(c) => self.hits[c as usize] -= 1,
            }
        }
        self.score = score;
    }

    fn cover(&mut self, v: Vertex, e: EdgeId) {
        self.covered[v as usize] = true;
        for i in 0..self.g.incident(v).len() {
            let f = self.g.incident(v)[i].1;
            if f != e && !self.in_f[f as usize] {
                self.add_f_edge(f);
            }
        }
    }

    fn run(&mut self, start: Vertex) -> bool {
        let n = self.g.order();
        let mut v = start;
        while (v as usize) < n && self.covered[v as usize] {
            v += 1;
        }
        if v as usize == n {
            if let Some(f) = self.visit.as_mut() {
                f(&self.matching);
            }
            if self.score < self.best {
                self.best = self.score;
                self.best_matching = Some(self.matching.clone());
            }
            return matches!(self.goal, Goal::Oddness { floor } if self.best <= floor);
        }
        self.nodes += 1;
        for i in 0..self.g.incident(v).len() {
            let (w, e) = self.g.incident(v)[i];
            if self.covered[w as usize] || self.in_f[e as usize] {
                continue;
            }
            let mark = self.log.len();
            let score = self.score;
            self.matching.push(e);
            if let Goal::FewestMarked { marked } = self.goal {
                if marked[e as usize] {
                    self.score += 1;
                }
            }
            self.cover(v, e);
            self.cover(w, e);
            let keep = !self.prune || self.bound() < self.best;
            if keep && self.run(v + 1) {
                return true;
            }
            self.covered[v as usize] = false;
            self.covered[w as usize] = false;
            self.matching.pop();
            self.undo_to(mark, score);
        }
        false
    }
}

fn check_cubic(g: &MultiGraph) -> Result<()> {
    for v in g.vertices() {
        if g.degree(v) != 3 {
            return Err(Error::Degree {
                vertex: v,
                degree: g.degree(v),
                expected: "3",
            });
        }
    }
    Ok(())
}

fn check_bridgeless(g: &MultiGraph) -> Result<()> {
    check_cubic(g)?;
    match bridges(g).first() {
        Some(&b) => Err(Error::Bridge(b)),
        None => Ok(()),
    }
}

/// Calls `f` with every perfect matching (sorted edge ids), in the order of
/// the lowest-uncovered-vertex search.
pub fn for_each_perfect_matching(g: &MultiGraph, mut f: impl FnMut(&[EdgeId])) {
    let mut sorted = Vec::new();
    let mut cb = |m: &[EdgeId]| {
        sorted.clear();
        sorted.extend_from_slice(m);
        sorted.sort_unstable();
        f(&sorted);
    };
    let mut eng = Engine::new(g, Goal::All, false);
    eng.visit = Some(&mut cb);
    eng.run(0);
}

pub fn enumerate_perfect_matchings(g: &MultiGraph) -> Vec<PerfectMatching> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, |m| out.push(PerfectMatching(m.to_vec())));
    out
}

pub fn enumerate_two_factors(g: &MultiGraph) -> Vec<TwoFactor> {
    enumerate_perfect_matchings(g)
        .iter()
        .map(|m| TwoFactor::from_matching(g, m))
        .collect()
}

/// Minimum number of odd circuits in a 2-factor, with a 2-factor attaining it.
pub fn oddness(g: &MultiGraph) -> Result<OddnessCertificate> {
    oddness_with_floor(g, 0)
}

/// Like [`oddness`], but stops as soon as a 2-factor with at most `floor`
/// odd circuits is found. Pass a proven lower bound to skip the proof of
/// optimality; the result is exact only when that bound is valid.
pub fn oddness_with_floor(g: &MultiGraph, floor: usize) -> Result<OddnessCertificate> {
    check_bridgeless(g)?;
    let mut eng = Engine::new(g, Goal::Oddness { floor }, true);
    eng.run(0);
    let m = eng
        .best_matching
        .expect("bridgeless cubic graphs have perfect matchings");
    Ok(OddnessCertificate {
        value: eng.best,
        factor: TwoFactor::from_matching(g, &PerfectMatching(m)),
    })
}

/// Whether some 2-factor has at most `k` odd circuits; a witness if so.
pub fn oddness_at_most(g: &MultiGraph, k: usize) -> Result<Option<TwoFactor>> {
    check_bridgeless(g)?;
    let mut eng = Engine::new(g, Goal::Oddness { floor: k }, true);
    eng.best = k + 1;
    eng.run(0);
    Ok(eng
        .best_matching
        .map(|m| TwoFactor::from_matching(g, &PerfectMatching(m))))
}

/// Exhaustive oddness over every perfect matching; reference for tests.
pub fn oddness_unpruned(g: &MultiGraph) -> Result<usize> {
    check_bridgeless(g)?;
    let mut best = usize::MAX;
    for_each_perfect_matching(g, |m| {
        let f = TwoFactor::from_matching(g, &PerfectMatching(m.to_vec()));
        best = best.min(f.odd_count());
    });
    Ok(best)
}

/// Fewest members of `cs` (5-circuits of `g`) that occur as circuits of a
/// single 2-factor, with that 2-factor.
pub fn min_selected_5circuits(g: &MultiGraph, cs: &[Circuit]) -> Result<(usize, TwoFactor)> {
    check_bridgeless(g)?;
    for c in cs {
        if c.len() != 5 || !c.is_valid_in(g) {
            return Err(Error::pre(format!(
                "{:?} is not a 5-circuit of the graph",
                c.vertices
            )));
        }
    }
    let mut lists = vec![Vec::new(); g.size()];
    for (i, c) in cs.iter().enumerate() {
        for &e in &c.edges {
            lists[e as usize].push(i as u32);
        }
    }
    let sizes = vec![5u8; cs.len()];
    let mut eng = Engine::new(
        g,
        Goal::FewestCircuits {
            lists: &lists,
            sizes: &sizes,
        },
        true,
    );
    eng.run(0);
    let m = eng
        .best_matching
        .expect("bridgeless cubic graphs have perfect matchings");
    Ok((eng.best, TwoFactor::from_matching(g, &PerfectMatching(m))))
}

/// Most edges of `s` that a single 2-factor can contain, with that 2-factor.
pub fn max_selected_edges(g: &MultiGraph, s: &[EdgeId]) -> Result<(usize, TwoFactor)> {
    check_bridgeless(g)?;
    let mut marked = vec![false; g.size()];
    for &e in s {
        g.check_edge(e)?;
        marked[e as usize] = true;
    }
    let mut eng = Engine::new(g, Goal::FewestMarked { marked: &marked }, true);
    eng.run(0);
    let m = eng
        .best_matching
        .expect("bridgeless cubic graphs have perfect matchings");
    let distinct = marked.iter().filter(|&&b| b).count();
    Ok((
        distinct - eng.best,
        TwoFactor::from_matching(g, &PerfectMatching(m)),
    ))
}

/// Edges lying on no odd circuit of any 2-factor.
pub fn special_edges(g: &MultiGraph) -> Result<Vec<EdgeId>> {
    check_bridgeless(g)?;
    let mut on_odd = vec![false; g.size()];
    for_each_perfect_matching(g, |m| {
        let f = TwoFactor::from_matching(g, &PerfectMatching(m.to_vec()));
        for c in f.circuits.iter().filter(|c| c.is_odd()) {
            for &e in &c.edges {
                on_odd[e as usize] = true;
            }
        }
    });
    Ok((0..g.size() as EdgeId)
        .filter(|&e| !on_odd[e as usize])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_matchings() {
        let ms = enumerate_perfect_matchings(&k4());
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|m| m.is_valid_in(&k4())));
        for f in enumerate_two_factors(&k4()) {
            assert!(f.is_valid_in(&k4()));
            assert_eq!(f.circuits.len(), 1);
        }
        assert_eq!(oddness(&k4()).unwrap().value, 0);
        assert_eq!(max_selected_edges(&k4(), &[0, 1, 2, 3, 4, 5]).unwrap().0, 4);
    }

    #[test]
    fn theta() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(enumerate_perfect_matchings(&g).len(), 3);
        let f = enumerate_two_factors(&g);
        assert!(f
            .iter()
            .all(|f| f.circuits[0].len() == 2 && f.is_valid_in(&g)));
    }

    #[test]
    fn bridge_refused() {
        // two K4s with one edge subdivided, subdivision vertices joined
        let mut es = Vec::new();
        for o in [0, 5] {
            es.extend([
                (o, o + 4),
                (o + 4, o + 1),
                (o, o + 2),
                (o, o + 3),
                (o + 1, o + 2),
                (o + 1, o + 3),
                (o + 2, o + 3),
            ]);
        }
        es.push((4, 9));
        let g = MultiGraph::from_edges(10, &es).unwrap();
        assert!(g.is_cubic());
        assert_eq!(oddness(&g), Err(Error::Bridge(14)));
    }

    #[test]
    fn k33_all_special() {
        let g = MultiGraph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(special_edges(&g).unwrap().len(), 9);
    }
}
