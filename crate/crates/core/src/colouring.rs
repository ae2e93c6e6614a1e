//! Exact 3-edge-colouring over the nonzero elements of Z2 x Z2.
//!
//! Colours are 1, 2, 3 and the group sum is XOR, so a vertex of degree 3 is
//! properly coloured exactly when its three colours XOR to zero.
//!
//! The solver is a depth-first search over a static edge order with
//! - an edge order chosen to keep few vertices half-coloured at any time,
//! - parity checks on small cuts: across a 2- or 3-edge cut whose one side
//!   has only degree-3 vertices the colours must XOR to zero,
//! - memoised dead ends keyed, for every half-coloured vertex, by the XOR of
//!   its coloured edges, up to renaming of colours. That value fixes which
//!   colours its remaining edges may take, so it is all the future depends
//!   on.

use crate::error::{Error, Result};
use crate::graph::{delete_edges, delete_vertices, EdgeId, MultiGraph, Network, Vertex};
use crate::structure::bridges_masked;
use std::collections::{BTreeSet, HashSet};

pub type Colour = u8;

/// Colour per edge id; 0 marks an edge that is absent (deleted).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColouring(pub Vec<Colour>);

impl EdgeColouring {
    pub fn colour(&self, e: EdgeId) -> Colour {
        self.0[e as usize]
    }

    /// Proper at every vertex: the coloured edges at a vertex get distinct
    /// colours, and every edge of `g` is coloured.
    pub fn is_proper(&self, g: &MultiGraph) -> bool {
        if self.0.len() != g.size() || self.0.iter().any(|&c| !(1..=3).contains(&c)) {
            return false;
        }
        g.vertices().all(|v| {
            let mut seen = 0u8;
            g.incident(v).iter().all(|&(_, e)| {
                let bit = 1 << self.0[e as usize];
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
    }
}

/// Colour multiplicities across a cut and whether they satisfy the parity
/// condition `m1 = m2 = m3 = |cut| (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub counts: [usize; 3],
    pub holds: bool,
}

pub fn verify_parity(c: &EdgeColouring, cut: &[EdgeId]) -> ParityReport {
    let mut counts = [0; 3];
    for &e in cut {
        let x = c.colour(e);
        if (1..=3).contains(&x) {
            counts[x as usize - 1] += 1;
        }
    }
    let m = cut.len() % 2;
    ParityReport {
        counts,
        holds: counts.iter().all(|&k| k % 2 == m),
    }
}

/// Search knobs; defaults are what every public entry point uses.
#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    pub parity_cuts: bool,
    pub memo: bool,
    /// Cap on memoised states, to bound memory.
    pub memo_limit: usize,
    /// Give up after this many search nodes; see [`Solver::gave_up`].
    pub node_limit: Option<u64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            parity_cuts: true,
            memo: true,
            memo_limit: 8_000_000,
            node_limit: None,
        }
    }
}

/// Search statistics, mainly for benchmarks.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolverStats {
    pub nodes: u64,
    pub memo_hits: u64,
    pub cut_prunes: u64,
    pub max_frontier: usize,
}

fn check_subcubic(g: &MultiGraph) -> Result<()> {
    for v in g.vertices() {
        if g.degree(v) > 3 {
            return Err(Error::Degree {
                vertex: v,
                degree: g.degree(v),
                expected: "at most 3",
            });
        }
    }
    Ok(())
}

/// Above this many edges only 2-edge cuts are collected; the cubic search
/// over all edge pairs gets too slow to pay for itself.
const THREE_CUT_LIMIT: usize = 150;

/// 2-edge cuts and nontrivial 3-edge cuts along which the colour sum is
/// forced to be zero: one side must consist of degree-3 vertices only.
pub fn parity_cuts(g: &MultiGraph) -> Vec<Vec<EdgeId>> {
    let m = g.size();
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let mut dead = vec![false; m];
    let side_ok = |dead: &[bool], cut: &[EdgeId]| -> bool {
        // component of one endpoint of cut[0] in G - cut
        let (comp, count) = crate::structure::components_masked(g, Some(dead));
        if count < 2 {
            return false;
        }
        let [a, b] = g.ends(cut[0]);
        let (ca, cb) = (comp[a as usize], comp[b as usize]);
        if ca == cb {
            return false;
        }
        // every cut edge must cross between exactly these two components
        for &e in cut {
            let [x, y] = g.ends(e);
            let (cx, cy) = (comp[x as usize], comp[y as usize]);
            if !((cx == ca && cy == cb) || (cx == cb && cy == ca)) {
                return false;
            }
        }
        let mut full = [true, true];
        let mut size = [0usize, 0];
        for v in g.vertices() {
            let c = comp[v as usize];
            let s = if c == ca {
                0
            } else if c == cb {
                1
            } else {
                return false;
            };
            size[s] += 1;
            if g.degree(v) != 3 {
                full[s] = false;
            }
        }
        // skip trivial cuts around a single vertex
        if cut.len() == 3 && (size[0] == 1 || size[1] == 1) {
            return false;
        }
        full[0] || full[1]
    };
    let mut seen = HashSet::new();
    for e in 0..m {
        dead[e] = true;
        for f in bridges_masked(g, Some(&dead)) {
            if (f as usize) > e {
                let cut = vec![e as EdgeId, f];
                dead[f as usize] = true;
                if side_ok(&dead, &cut) && seen.insert(cut.clone()) {
                    out.push(cut);
                }
                dead[f as usize] = false;
            }
        }
        dead[e] = false;
    }
    if m <= THREE_CUT_LIMIT {
        for e in 0..m {
            dead[e] = true;
            for f in e + 1..m {
                dead[f] = true;
                let bs = bridges_masked(g, Some(&dead));
                for h in bs {
                    if (h as usize) > f {
                        let cut = vec![e as EdgeId, f as EdgeId, h];
                        dead[h as usize] = true;
                        if side_ok(&dead, &cut) && seen.insert(cut.clone()) {
                            out.push(cut);
                        }
                        dead[h as usize] = false;
                    }
                }
                dead[f] = false;
            }
            dead[e] = false;
        }
    }
    out
}

/// Saturation order: repeatedly take the edge with the most already-ordered
/// edges around its ends; ties go to the edge touching the most recently
/// ordered edge, then to the lowest id. `first` edges lead, in the given order.
fn saturation_order(g: &MultiGraph, first: &[EdgeId]) -> Vec<EdgeId> {
    let m = g.size();
    let mut placed = vec![false; m];
    let mut score = vec![0u32; m];
    let mut recent = vec![0u32; m];
    let mut order = Vec::with_capacity(m);
    let place = |e: EdgeId,
                 order: &mut Vec<EdgeId>,
                 placed: &mut Vec<bool>,
                 score: &mut Vec<u32>,
                 recent: &mut Vec<u32>| {
        placed[e as usize] = true;
        order.push(e);
        let stamp = order.len() as u32;
        for v in g.ends(e) {
            for &(_, f) in g.incident(v) {
                if !placed[f as usize] {
                    score[f as usize] += 1;
                    recent[f as usize] = stamp;
                }
            }
        }
    };
    for &e in first {
        if !placed[e as usize] {
            place(e, &mut order, &mut placed, &mut score, &mut recent);
        }
    }
    while order.len() < m {
        let mut best: Option<EdgeId> = None;
        for e in 0..m {
            if placed[e] {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => (score[e], recent[e]) > (score[b as usize], recent[b as usize]),
            };
            if better {
                best = Some(e as EdgeId);
            }
        }
        let e = best.unwrap();
        place(e, &mut order, &mut placed, &mut score, &mut recent);
    }
    order
}

/// Most vertices that are half-coloured at once along `order`.
pub fn order_width(g: &MultiGraph, order: &[EdgeId]) -> usize {
    let mut cnt = vec![0usize; g.order()];
    let mut active = 0usize;
    let mut width = 0;
    for &e in order {
        for v in g.ends(e) {
            let d = g.degree(v);
            cnt[v as usize] += 1;
            if cnt[v as usize] == 1 && d > 1 {
                active += 1;
            }
            if cnt[v as usize] == d && d > 1 {
                active -= 1;
            }
        }
        width = width.max(active);
    }
    width
}

/// Greedy order that places, among edges at half-coloured vertices, the one
/// leaving the fewest half-coloured vertices; `seed` starts it (after the
/// `first` edges), and a new component restarts at its lowest edge.
fn greedy_order(g: &MultiGraph, first: &[EdgeId], seed: EdgeId) -> Vec<EdgeId> {
    let m = g.size();
    let mut placed = vec![false; m];
    let mut cnt = vec![0usize; g.order()];
    let mut active: Vec<Vertex> = Vec::new();
    let mut order = Vec::with_capacity(m);
    let place = |e: EdgeId,
                 placed: &mut Vec<bool>,
                 cnt: &mut Vec<usize>,
                 active: &mut Vec<Vertex>,
                 order: &mut Vec<EdgeId>| {
        placed[e as usize] = true;
        order.push(e);
        for v in g.ends(e) {
            cnt[v as usize] += 1;
            let d = g.degree(v);
            if cnt[v as usize] == 1 && d > 1 {
                active.push(v);
            }
            if cnt[v as usize] == d {
                active.retain(|&x| x != v);
            }
        }
    };
    for &e in first {
        if !placed[e as usize] {
            place(e, &mut placed, &mut cnt, &mut active, &mut order);
        }
    }
    if !placed[seed as usize] {
        place(seed, &mut placed, &mut cnt, &mut active, &mut order);
    }
    let mut low = 0usize;
    while order.len() < m {
        let mut best: Option<(i32, i32, EdgeId)> = None;
        for &v in &active {
            for &(_, e) in g.incident(v) {
                if placed[e as usize] {
                    continue;
                }
                let mut delta = 0i32;
                let mut touching = 0i32;
                for x in g.ends(e) {
                    let (c, d) = (cnt[x as usize], g.degree(x));
                    if c == 0 && d > 1 {
                        delta += 1;
                    }
                    if c + 1 == d && d > 1 {
                        delta -= 1;
                    }
                    if c > 0 {
                        touching += 1;
                    }
                }
                let key = (delta, -touching, e);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
        let e = match best {
            Some((_, _, e)) => e,
            None => {
                while placed[low] {
                    low += 1;
                }
                low as EdgeId
            }
        };
        place(e, &mut placed, &mut cnt, &mut active, &mut order);
    }
    order
}

/// Vertices in BFS order from `root` (neighbours by id), edges sorted by
/// the position of their later end, then their earlier end.
fn bfs_order(g: &MultiGraph, first: &[EdgeId], root: Vertex) -> Vec<EdgeId> {
    let n = g.order();
    let mut pos = vec![usize::MAX; n];
    let mut next = 0;
    let mut q = std::collections::VecDeque::new();
    let mut starts = std::iter::once(root).chain(g.vertices());
    while next < n {
        let s = starts.find(|&v| pos[v as usize] == usize::MAX).unwrap();
        pos[s as usize] = next;
        next += 1;
        q.push_back(s);
        while let Some(u) = q.pop_front() {
            for &(w, _) in g.incident(u) {
                if pos[w as usize] == usize::MAX {
                    pos[w as usize] = next;
                    next += 1;
                    q.push_back(w);
                }
            }
        }
    }
    let mut is_first = vec![false; g.size()];
    for &e in first {
        is_first[e as usize] = true;
    }
    let mut rest: Vec<EdgeId> = (0..g.size() as EdgeId)
        .filter(|&e| !is_first[e as usize])
        .collect();
    rest.sort_by_key(|&e| {
        let [a, b] = g.ends(e);
        let (x, y) = (pos[a as usize], pos[b as usize]);
        (x.max(y), x.min(y), e)
    });
    first.iter().copied().chain(rest).collect()
}

/// Narrowest of the saturation order and greedy orders from a spread of
/// seeds.
fn best_order(g: &MultiGraph, first: &[EdgeId]) -> Vec<EdgeId> {
    let m = g.size();
    let mut best = saturation_order(g, first);
    if m == 0 {
        return best;
    }
    let mut width = order_width(g, &best);
    let seeds: Vec<EdgeId> = if !first.is_empty() {
        vec![first[0]]
    } else {
        let step = m.div_ceil(64).max(1);
        (0..m).step_by(step).map(|e| e as EdgeId).collect()
    };
    for s in seeds {
        let o = greedy_order(g, first, s);
        let w = order_width(g, &o);
        if w < width {
            best = o;
            width = w;
        }
    }
    let roots: Vec<Vertex> = if let Some(&e) = first.first() {
        g.ends(e).to_vec()
    } else {
        let step = g.order().div_ceil(64).max(1);
        g.vertices().step_by(step).collect()
    };
    for r in roots {
        let o = bfs_order(g, first, r);
        let w = order_width(g, &o);
        if w < width {
            best = o;
            width = w;
        }
    }
    best
}

enum Memo {
    Small(HashSet<u128>),
    Large(HashSet<Vec<u64>>),
}

/// Exact colouring search over one graph.
pub struct Solver<'a> {
    g: &'a MultiGraph,
    order: Vec<EdgeId>,
    /// positions of earlier edges sharing an endpoint, per position
    prev_adj: Vec<Vec<u32>>,
    /// per `p`: for each half-coloured vertex once positions `0..p` are
    /// coloured, the positions of its coloured edges
    frontier: Vec<Vec<Vec<u32>>>,
    /// cuts completed at each position, as lists of positions
    cut_at: Vec<Vec<Vec<u32>>>,
    colour: Vec<Colour>,
    pins: usize,
    memo: Vec<Memo>,
    memo_size: usize,
    opts: SolverOptions,
    aborted: bool,
    node_base: u64,
    pub stats: SolverStats,
}

impl<'a> Solver<'a> {
    pub fn new(g: &'a MultiGraph, pinned: &[EdgeId], opts: SolverOptions) -> Result<Self> {
        check_subcubic(g)?;
        let cuts = if opts.parity_cuts {
            parity_cuts(g)
        } else {
            Vec::new()
        };
        Ok(Self::with_cuts(g, pinned, opts, &cuts))
    }

    pub fn with_cuts(
        g: &'a MultiGraph,
        pinned: &[EdgeId],
        opts: SolverOptions,
        cuts: &[Vec<EdgeId>],
    ) -> Self {
        let m = g.size();
        let order = best_order(g, pinned);
        let mut pos = vec![0u32; m];
        for (i, &e) in order.iter().enumerate() {
            pos[e as usize] = i as u32;
        }
        let prev_adj = order
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let mut v: Vec<u32> = g
                    .ends(e)
                    .iter()
                    .flat_map(|&x| g.incident(x).iter().map(|&(_, f)| pos[f as usize]))
                    .filter(|&p| (p as usize) < i)
                    .collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        let mut frontier = Vec::with_capacity(m + 1);
        for p in 0..=m as u32 {
            let f: Vec<Vec<u32>> = g
                .vertices()
                .filter_map(|v| {
                    let ps: Vec<u32> = g
                        .incident(v)
                        .iter()
                        .map(|&(_, f)| pos[f as usize])
                        .collect();
                    let done: Vec<u32> = ps.iter().copied().filter(|&q| q < p).collect();
                    (!done.is_empty() && done.len() < ps.len()).then_some(done)
                })
                .collect();
            frontier.push(f);
        }
        let mut cut_at = vec![Vec::new(); m];
        for c in cuts {
            let ps: Vec<u32> = c.iter().map(|&e| pos[e as usize]).collect();
            let mx = *ps.iter().max().unwrap();
            cut_at[mx as usize].push(ps);
        }
        let memo = frontier
            .iter()
            .map(|f| {
                if f.len() <= 64 {
                    Memo::Small(HashSet::new())
                } else {
                    Memo::Large(HashSet::new())
                }
            })
            .collect();
        let max_frontier = frontier.iter().map(Vec::len).max().unwrap_or(0);
        Solver {
            g,
            order,
            prev_adj,
            frontier,
            cut_at,
            colour: vec![0; m],
            pins: pinned.len(),
            memo,
            memo_size: 0,
            opts,
            aborted: false,
            node_base: 0,
            stats: SolverStats {
                max_frontier,
                ..Default::default()
            },
        }
    }

    pub fn max_frontier(&self) -> usize {
        self.stats.max_frontier
    }

    /// The last [`Solver::solve`] hit the node limit; its `None` means
    /// nothing.
    pub fn gave_up(&self) -> bool {
        self.aborted
    }

    /// Colouring with the pinned edges (given at construction, in the same
    /// order) fixed to `pin_colours`, if one exists.
    pub fn solve(&mut self, pin_colours: &[Colour]) -> Option<EdgeColouring> {
        assert_eq!(pin_colours.len(), self.pins);
        for slot in &mut self.colour {
            *slot = 0;
        }
        self.aborted = false;
        self.node_base = self.stats.nodes;
        if self.order.is_empty() {
            return Some(EdgeColouring(Vec::new()));
        }
        if self.dfs(0, pin_colours) {
            let mut out = vec![0; self.g.size()];
            for (p, &e) in self.order.iter().enumerate() {
                out[e as usize] = self.colour[p];
            }
            Some(EdgeColouring(out))
        } else {
            None
        }
    }

    /// Clears memoised states; needed between solves with different pins.
    pub fn reset_memo(&mut self) {
        for m in &mut self.memo {
            match m {
                Memo::Small(s) => s.clear(),
                Memo::Large(s) => s.clear(),
            }
        }
        self.memo_size = 0;
    }

    fn key_small(&self, p: usize) -> u128 {
        let mut map = [0u8; 4];
        let mut next = 1;
        let mut key = 0u128;
        for qs in &self.frontier[p] {
            let c = qs.iter().fold(0, |a, &q| a ^ self.colour[q as usize]) as usize;
            if map[c] == 0 {
                map[c] = next;
                next += 1;
            }
            key = (key << 2) | map[c] as u128;
        }
        key
    }

    fn key_large(&self, p: usize) -> Vec<u64> {
        let mut map = [0u8; 4];
        let mut next = 1;
        let mut out = vec![0u64; self.frontier[p].len().div_ceil(32)];
        for (i, qs) in self.frontier[p].iter().enumerate() {
            let c = qs.iter().fold(0, |a, &q| a ^ self.colour[q as usize]) as usize;
            if map[c] == 0 {
                map[c] = next;
                next += 1;
            }
            out[i / 32] |= (map[c] as u64) << (2 * (i % 32));
        }
        out
    }

    fn seen_dead(&mut self, p: usize) -> bool {
        if !self.opts.memo || p <= self.pins {
            return false;
        }
        let hit = match &self.memo[p] {
            Memo::Small(s) => s.contains(&self.key_small(p)),
            Memo::Large(s) => s.contains(&self.key_large(p)),
        };
        if hit {
            self.stats.memo_hits += 1;
        }
        hit
    }

    fn mark_dead(&mut self, p: usize) {
        if !self.opts.memo || p <= self.pins || self.memo_size >= self.opts.memo_limit {
            return;
        }
        self.memo_size += 1;
        match &self.memo[p] {
            Memo::Small(_) => {
                let k = self.key_small(p);
                if let Memo::Small(s) = &mut self.memo[p] {
                    s.insert(k);
                }
            }
            Memo::Large(_) => {
                let k = self.key_large(p);
                if let Memo::Large(s) = &mut self.memo[p] {
                    s.insert(k);
                }
            }
        }
    }

    fn dfs(&mut self, p: usize, pins: &[Colour]) -> bool {
        if p == self.order.len() {
            return true;
        }
        if self.seen_dead(p) {
            return false;
        }
        self.stats.nodes += 1;
        if self
            .opts
            .node_limit
            .is_some_and(|l| self.stats.nodes - self.node_base > l)
        {
            self.aborted = true;
            return false;
        }
        let mut used = 0u8;
        for &q in &self.prev_adj[p] {
            used |= 1 << self.colour[q as usize];
        }
        let choices: &[Colour] = if p < pins.len() {
            std::slice::from_ref(&pins[p])
        } else if p == 0 {
            &[1]
        } else {
            &[1, 2, 3]
        };
        for &c in choices {
            if used & (1 << c) != 0 {
                continue;
            }
            self.colour[p] = c;
            let cuts_ok = self.cut_at[p]
                .iter()
                .all(|cut| cut.iter().fold(0u8, |a, &q| a ^ self.colour[q as usize]) == 0);
            if !cuts_ok {
                self.stats.cut_prunes += 1;
                continue;
            }
            if self.dfs(p + 1, pins) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        self.colour[p] = 0;
        self.mark_dead(p);
        false
    }
}

/// A proper 3-edge-colouring, or `None` when the graph is uncolourable.
/// Vertices of degree 1 and 2 are allowed; degree above 3 is an error.
pub fn find_colouring(g: &MultiGraph) -> Result<Option<EdgeColouring>> {
    find_colouring_with(g, SolverOptions::default())
}

pub fn find_colouring_with(g: &MultiGraph, opts: SolverOptions) -> Result<Option<EdgeColouring>> {
    let mut s = Solver::new(g, &[], opts)?;
    if s.max_frontier() <= NARROW || opts.node_limit.is_some() {
        return Ok(s.solve(&[]));
    }
    // wide orders: a short search finds most colourings, elimination
    // settles the rest
    s.opts.node_limit = Some(PROBE_NODES);
    if let Some(c) = s.solve(&[]) {
        return Ok(Some(c));
    }
    if !s.gave_up() {
        return Ok(None);
    }
    if let Some(answer) = crate::elimination::colour(g) {
        return Ok(answer);
    }
    s.opts.node_limit = None;
    Ok(s.solve(&[]))
}

/// Orders at most this wide go straight to search.
const NARROW: usize = 12;
const PROBE_NODES: u64 = 200_000;

pub fn is_colourable(g: &MultiGraph) -> bool {
    find_colouring(g).expect("subcubic input").is_some()
}

/// Colouring of a network; terminal edges are unconstrained at the terminal.
pub fn find_network_colouring(n: &Network) -> Option<EdgeColouring> {
    find_colouring(n.graph()).expect("networks are subcubic")
}

/// Every colour tuple the terminal edges can receive, in terminal order.
pub fn boundary_colourings(n: &Network) -> BTreeSet<Vec<Colour>> {
    let tedges = n.terminal_edges();
    let t = tedges.len();
    let mut out = BTreeSet::new();
    if t == 0 {
        if find_network_colouring(n).is_some() {
            out.insert(Vec::new());
        }
        return out;
    }
    let mut distinct = tedges.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut first_order = Vec::new();
    for &e in &tedges {
        if !first_order.contains(&e) {
            first_order.push(e);
        }
    }
    let g = n.graph();
    let cuts = parity_cuts(g);
    let mut solver = Solver::with_cuts(g, &first_order, SolverOptions::default(), &cuts);
    for tuple in restricted_growth(t) {
        // consistent colours where two terminals share one edge
        let mut pin = Vec::with_capacity(first_order.len());
        let mut ok = true;
        for &e in &first_order {
            let cs: Vec<Colour> = tedges
                .iter()
                .zip(&tuple)
                .filter(|(&f, _)| f == e)
                .map(|(_, &c)| c)
                .collect();
            if cs.iter().any(|&c| c != cs[0]) {
                ok = false;
                break;
            }
            pin.push(cs[0]);
        }
        if !ok {
            continue;
        }
        solver.reset_memo();
        if solver.solve(&pin).is_some() {
            for perm in PERMS {
                out.insert(tuple.iter().map(|&c| perm[c as usize - 1]).collect());
            }
        }
    }
    out
}

const PERMS: [[Colour; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

/// Colour tuples of length `t` in which colours first appear in the order
/// 1, 2, 3; one representative per orbit of colour renaming.
fn restricted_growth(t: usize) -> Vec<Vec<Colour>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(t: usize, cur: &mut Vec<Colour>, max: Colour, out: &mut Vec<Vec<Colour>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for c in 1..=(max + 1).min(3) {
            cur.push(c);
            rec(t, cur, max.max(c), out);
            cur.pop();
        }
    }
    rec(t, &mut cur, 0, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeletionMode {
    Vertex,
    Edge,
}

/// Deleted vertices or edges plus a colouring of what remains, expressed in
/// the original edge ids (deleted edges carry colour 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionWitness {
    pub mode: DeletionMode,
    pub deleted: Vec<u32>,
    pub colouring: EdgeColouring,
}

impl DeletionWitness {
    /// The colouring is proper on `g` minus the deleted elements.
    pub fn verify(&self, g: &MultiGraph) -> bool {
        let gone: Vec<bool> = match self.mode {
            DeletionMode::Vertex => {
                let mut dv = vec![false; g.order()];
                for &v in &self.deleted {
                    if v as usize >= g.order() {
                        return false;
                    }
                    dv[v as usize] = true;
                }
                g.edges()
                    .map(|(_, [a, b])| dv[a as usize] || dv[b as usize])
                    .collect()
            }
            DeletionMode::Edge => {
                let mut de = vec![false; g.size()];
                for &e in &self.deleted {
                    if e as usize >= g.size() {
                        return false;
                    }
                    de[e as usize] = true;
                }
                de
            }
        };
        let c = &self.colouring.0;
        if c.len() != g.size() {
            return false;
        }
        for (e, &dead) in gone.iter().enumerate() {
            if dead != (c[e] == 0) || c[e] > 3 {
                return false;
            }
        }
        g.vertices().all(|v| {
            let mut seen = 0u8;
            g.incident(v).iter().all(|&(_, e)| {
                let x = c[e as usize];
                if x == 0 {
                    return true;
                }
                let fresh = seen & (1 << x) == 0;
                seen |= 1 << x;
                fresh
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resistance {
    pub value: usize,
    pub witness: DeletionWitness,
}

fn remainder(g: &MultiGraph, mode: DeletionMode, set: &[u32]) -> crate::graph::Edit {
    match mode {
        DeletionMode::Vertex => delete_vertices(g, set),
        DeletionMode::Edge => delete_edges(g, set),
    }
    .expect("ids in range")
}

/// Colouring of `g` minus `set`, lifted back to `g`'s edge ids.
pub fn colour_after_deletion(
    g: &MultiGraph,
    mode: DeletionMode,
    set: &[u32],
) -> Option<EdgeColouring> {
    let ed = remainder(g, mode, set);
    let c = find_colouring(&ed.graph).expect("subcubic")?;
    let mut out = vec![0; g.size()];
    for (e, m) in ed.edge_map.iter().enumerate() {
        if let Some(f) = m {
            out[e] = c.colour(*f);
        }
    }
    Some(EdgeColouring(out))
}

/// Next k-subset of `0..n` in lexicographic order.
pub(crate) fn next_subset(s: &mut [u32], n: u32) -> bool {
    let k = s.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if s[i] < n - (k - i) as u32 {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

const BATCH: usize = 512;

/// Lexicographically least `k`-subset whose removal leaves a colourable
/// graph, if any.
pub fn deletion_witness_of_size(
    g: &MultiGraph,
    mode: DeletionMode,
    k: usize,
) -> Option<DeletionWitness> {
    let n = match mode {
        DeletionMode::Vertex => g.order(),
        DeletionMode::Edge => g.size(),
    } as u32;
    if k as u32 > n {
        return None;
    }
    let found = |set: &Vec<u32>| {
        colour_after_deletion(g, mode, set).map(|c| DeletionWitness {
            mode,
            deleted: set.clone(),
            colouring: c,
        })
    };
    if k == 0 {
        return found(&Vec::new());
    }
    if k <= 2 {
        // one test per isomorphism class of the remainder
        let mut all = Vec::new();
        let mut s: Vec<u32> = (0..k as u32).collect();
        loop {
            all.push(s.clone());
            if !next_subset(&mut s, n) {
                break;
            }
        }
        let keys = crate::par::map(&all, |s| {
            crate::canon::canonical_form(&remainder(g, mode, s).graph)
        });
        let mut first_of: std::collections::HashMap<&[u8], usize> = Default::default();
        let mut reps = Vec::new();
        for (i, key) in keys.iter().enumerate() {
            first_of.entry(key.as_slice()).or_insert_with(|| {
                reps.push(i);
                i
            });
        }
        let good: Vec<bool> = crate::par::map(&reps, |&i| {
            colour_after_deletion(g, mode, &all[i]).is_some()
        });
        let good_keys: HashSet<&[u8]> = reps
            .iter()
            .zip(&good)
            .filter(|(_, &ok)| ok)
            .map(|(&i, _)| keys[i].as_slice())
            .collect();
        let first = (0..all.len()).find(|&i| good_keys.contains(keys[i].as_slice()))?;
        return found(&all[first]);
    }
    let mut s: Vec<u32> = (0..k as u32).collect();
    let mut more = true;
    while more {
        let mut batch = Vec::with_capacity(BATCH);
        while more && batch.len() < BATCH {
            batch.push(s.clone());
            more = next_subset(&mut s, n);
        }
        if let Some(w) = crate::par::find_first(&batch, found) {
            return Some(w);
        }
    }
    None
}

/// Least number of vertices (or edges) whose deletion leaves a colourable
/// graph, with the lexicographically least witness of that size.
pub fn resistance(g: &MultiGraph, mode: DeletionMode) -> Result<Resistance> {
    resistance_from(g, mode, 0)
}

/// Same as [`resistance`] but skips sizes below `floor`; the caller vouches
/// that no smaller witness exists.
pub fn resistance_from(g: &MultiGraph, mode: DeletionMode, floor: usize) -> Result<Resistance> {
    check_subcubic(g)?;
    let mut k = floor;
    loop {
        if let Some(w) = deletion_witness_of_size(g, mode, k) {
            return Ok(Resistance {
                value: k,
                witness: w,
            });
        }
        k += 1;
    }
}

/// True when no deletion of fewer than `k` elements makes `g` colourable.
pub fn resistance_at_least(g: &MultiGraph, mode: DeletionMode, k: usize) -> bool {
    (0..k).all(|j| deletion_witness_of_size(g, mode, j).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_colourable() {
        let c = find_colouring(&k4()).unwrap().unwrap();
        assert!(c.is_proper(&k4()));
        let r = verify_parity(&c, &[0, 1, 2]);
        assert_eq!(r.counts, [1, 1, 1]);
        assert!(r.holds);
    }

    #[test]
    fn k4_matching_cut() {
        let g = k4();
        let c = find_colouring(&g).unwrap().unwrap();
        // edges 0 (01) and 5 (23) form a perfect matching; the cut
        // {02,03,12,13} separates {0,1} from {2,3}
        let cut = [1, 2, 3, 4];
        assert!(verify_parity(&c, &cut).holds);
        let same = (c.colour(0), c.colour(5));
        assert_eq!(same.0, same.1);
    }

    #[test]
    fn theta_colourable() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(is_colourable(&g));
    }

    #[test]
    fn growth_strings() {
        assert_eq!(restricted_growth(3).len(), 5);
        assert_eq!(restricted_growth(4).len(), 14);
    }

    #[test]
    fn subsets_in_order() {
        let mut s = vec![0, 1];
        let mut n = 1;
        while next_subset(&mut s, 4) {
            n += 1;
        }
        assert_eq!(n, 6);
        assert_eq!(s, vec![2, 3]);
    }

    #[test]
    fn degree_four_rejected() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(find_colouring(&g).is_err());
    }
}
