//! Oddness-preserving reductions of snarks: short circuits, 4-circuits and
//! 2- and 3-edge cuts with a colourable side.
//!
//! Every reduction finds one step at a time and hands it to [`apply`], so a
//! recorded [`Trace`] replays exactly. Oddness is computed before and after
//! each run; a mismatch is an error, not a silent result.

use crate::circuits::{enumerate_circuits, girth, Circuit};
use crate::colouring::is_colourable;
use crate::error::{Error, Result};
use crate::factors::oddness;
use crate::graph::{contract_circuit, rebuild, suppress_degree2, EdgeId, MultiGraph, Vertex};
use crate::structure::{bridges_masked, components_masked, is_two_connected};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Contract a 2- or 3-circuit, suppressing a vertex of degree 2.
    ShortCircuit,
    /// Remove two opposite edges of a 4-circuit and suppress the four
    /// vertices of degree 2.
    FourCircuit,
    /// Replace the colourable side of a 2-edge cut by an edge.
    TwoCut,
    /// Replace the colourable side of a 3-edge cut by a vertex.
    ThreeCut,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::ShortCircuit => "short-circuit",
            Rule::FourCircuit => "4-circuit",
            Rule::TwoCut => "2-cut",
            Rule::ThreeCut => "3-cut",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One reduction step in the labelling of the graph it applies to.
///
/// - `ShortCircuit`: `vertices`/`edges` are the circuit.
/// - `FourCircuit`: the circuit, rotated so that `vertices[0]-vertices[1]`
///   and `vertices[2]-vertices[3]` are the removed edges.
/// - cuts: `edges` is the cut, `vertices` the side that is replaced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub order_before: usize,
    pub order_after: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug)]
pub struct Reduced {
    pub graph: MultiGraph,
    pub trace: Trace,
    /// Oddness of both the input and the output.
    pub oddness: usize,
}

/// Which reductions to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleSet {
    Girth4,
    Girth5,
    Cut2,
    Cut3,
    /// All four, to a fixpoint.
    All,
}

impl FromStr for RuleSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "girth4" => RuleSet::Girth4,
            "girth5" => RuleSet::Girth5,
            "cut2" => RuleSet::Cut2,
            "cut3" => RuleSet::Cut3,
            "all" => RuleSet::All,
            _ => {
                return Err(Error::Param(format!(
                    "unknown rule {s:?}; expected girth4, girth5, cut2, cut3 or all"
                )))
            }
        })
    }
}

/// Applies one step. Used both while reducing and for replay.
pub fn apply(g: &MultiGraph, step: &Step) -> Result<MultiGraph> {
    match step.rule {
        Rule::ShortCircuit => {
            let c = Circuit {
                vertices: step.vertices.clone(),
                edges: step.edges.clone(),
            };
            let keep = *c
                .vertices
                .iter()
                .min()
                .ok_or_else(|| Error::pre("empty circuit"))?;
            let ed = contract_circuit(g, &c)?;
            let v = ed.vertex_map[keep as usize].expect("contracted vertex survives");
            if ed.graph.degree(v) == 2 {
                Ok(suppress_degree2(&ed.graph, v)?.graph)
            } else {
                Ok(ed.graph)
            }
        }
        Rule::FourCircuit => {
            let w = &step.vertices;
            if w.len() != 4 {
                return Err(Error::pre("a 4-circuit step names four vertices"));
            }
            let c = Circuit {
                vertices: w.clone(),
                edges: step.edges.clone(),
            };
            if !c.is_valid_in(g) {
                return Err(Error::pre("not a 4-circuit of the graph"));
            }
            let outside = |v: Vertex| -> Result<Vertex> {
                let mut it = g
                    .incident(v)
                    .iter()
                    .filter(|&&(_, e)| !c.edges.contains(&e));
                match (it.next(), it.next()) {
                    (Some(&(x, _)), None) if !w.contains(&x) => Ok(x),
                    _ => Err(Error::Reduction(format!(
                        "vertex {v} of the 4-circuit has a chord or wrong degree"
                    ))),
                }
            };
            let a: Vec<Vertex> = w.iter().map(|&v| outside(v)).collect::<Result<_>>()?;
            let mut drop = vec![false; g.order()];
            for &v in w {
                drop[v as usize] = true;
            }
            Ok(rebuild(g, &drop, &[], &[(a[0], a[3]), (a[1], a[2])])?.graph)
        }
        Rule::TwoCut | Rule::ThreeCut => {
            let mut gone = vec![false; g.order()];
            for &v in &step.vertices {
                g.check_vertex(v)?;
                gone[v as usize] = true;
            }
            let keep: Vec<bool> = gone.iter().map(|&x| !x).collect();
            close_side(g, &keep, &step.edges)
        }
    }
}

/// The side `side` of cut `cut`, with its stubs closed by an edge (two
/// stubs) or a new last vertex (three stubs).
fn close_side(g: &MultiGraph, side: &[bool], cut: &[EdgeId]) -> Result<MultiGraph> {
    let mut id = vec![Vertex::MAX; g.order()];
    let mut n = 0;
    for v in g.vertices() {
        if side[v as usize] {
            id[v as usize] = n;
            n += 1;
        }
    }
    let mut stubs = Vec::new();
    for &e in cut {
        g.check_edge(e)?;
        let [a, b] = g.ends(e);
        match (side[a as usize], side[b as usize]) {
            (true, false) => stubs.push(id[a as usize]),
            (false, true) => stubs.push(id[b as usize]),
            _ => return Err(Error::pre(format!("edge {e} does not cross the cut"))),
        }
    }
    let extra = usize::from(stubs.len() == 3);
    let mut out = MultiGraph::new(n as usize + extra);
    for (_, [a, b]) in g.edges() {
        if side[a as usize] && side[b as usize] {
            out.add_edge(id[a as usize], id[b as usize])?;
        }
    }
    match stubs.len() {
        2 => {
            out.add_edge(stubs[0], stubs[1])?;
        }
        3 => {
            for &s in &stubs {
                out.add_edge(n, s)?;
            }
        }
        k => return Err(Error::pre(format!("cannot close a side with {k} stubs"))),
    }
    Ok(out)
}

fn sorted(vs: &[Vertex]) -> Vec<Vertex> {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s
}

fn find_short(g: &MultiGraph) -> Option<Step> {
    let c = enumerate_circuits(g, 3)
        .into_iter()
        .min_by_key(|c| sorted(&c.vertices))?;
    Some(Step {
        rule: Rule::ShortCircuit,
        vertices: c.vertices,
        edges: c.edges,
        order_before: g.order(),
        order_after: 0,
    })
}

fn find_four(g: &MultiGraph) -> Result<Option<Step>> {
    let Some(c) = enumerate_circuits(g, 4)
        .into_iter()
        .filter(|c| c.len() == 4)
        .min_by_key(|c| sorted(&c.vertices))
    else {
        return Ok(None);
    };
    // start at the least vertex, towards its smaller circuit neighbour
    let i = (0..4).min_by_key(|&i| c.vertices[i]).unwrap();
    let fwd = c.vertices[(i + 1) % 4] < c.vertices[(i + 3) % 4];
    let walk = |k: usize| if fwd { (i + k) % 4 } else { (i + 4 - k) % 4 };
    let vs: Vec<Vertex> = (0..4).map(|k| c.vertices[walk(k)]).collect();
    let es: Vec<EdgeId> = (0..4)
        .map(|k| {
            if fwd {
                c.edges[(i + k) % 4]
            } else {
                c.edges[(i + 3 - k + 4) % 4]
            }
        })
        .collect();
    for shift in 0..2 {
        let step = Step {
            rule: Rule::FourCircuit,
            vertices: (0..4).map(|k| vs[(k + shift) % 4]).collect(),
            edges: (0..4).map(|k| es[(k + shift) % 4]).collect(),
            order_before: g.order(),
            order_after: 0,
        };
        if let Ok(h) = apply(g, &step) {
            if h.is_cubic() && is_two_connected(&h) {
                return Ok(Some(step));
            }
        }
    }
    Err(Error::Reduction(format!(
        "neither pair of opposite edges of the 4-circuit {vs:?} leaves a 2-connected graph"
    )))
}

/// Edge cuts of size `k` (2 or 3) splitting `g` into exactly two parts, both
/// with at least two vertices, in lexicographic order of their edge ids.
fn cuts(g: &MultiGraph, k: usize) -> Vec<(Vec<EdgeId>, Vec<bool>)> {
    let m = g.size();
    let mut dead = vec![false; m];
    let mut out = Vec::new();
    let check = |dead: &[bool], cut: Vec<EdgeId>, out: &mut Vec<(Vec<EdgeId>, Vec<bool>)>| {
        let (comp, count) = components_masked(g, Some(dead));
        if count != 2 {
            return;
        }
        let crosses = cut.iter().all(|&e| {
            let [a, b] = g.ends(e);
            comp[a as usize] != comp[b as usize]
        });
        let side: Vec<bool> = comp.iter().map(|&c| c == comp[0]).collect();
        let small = side
            .iter()
            .filter(|&&x| x)
            .count()
            .min(g.order() - side.iter().filter(|&&x| x).count());
        if crosses && small >= 2 {
            out.push((cut, side));
        }
    };
    for e in 0..m {
        dead[e] = true;
        if k == 2 {
            for f in bridges_masked(g, Some(&dead)) {
                if f as usize > e {
                    dead[f as usize] = true;
                    check(&dead, vec![e as EdgeId, f], &mut out);
                    dead[f as usize] = false;
                }
            }
        } else {
            for f in e + 1..m {
                dead[f] = true;
                for h in bridges_masked(g, Some(&dead)) {
                    if h as usize > f {
                        dead[h as usize] = true;
                        check(&dead, vec![e as EdgeId, f as EdgeId, h], &mut out);
                        dead[h as usize] = false;
                    }
                }
                dead[f] = false;
            }
        }
        dead[e] = false;
    }
    out.sort();
    out
}

fn find_cut(g: &MultiGraph, k: usize) -> Result<Option<Step>> {
    for (cut, side) in cuts(g, k) {
        let other: Vec<bool> = side.iter().map(|&x| !x).collect();
        let a = is_colourable(&close_side(g, &side, &cut)?);
        let b = is_colourable(&close_side(g, &other, &cut)?);
        let gone = match (a, b) {
            (false, false) => continue,
            (true, true) => {
                return Err(Error::Reduction(format!(
                    "both sides of cut {cut:?} are colourable, so the graph is not a snark"
                )))
            }
            (true, false) => &side,
            (false, true) => &other,
        };
        return Ok(Some(Step {
            rule: if k == 2 { Rule::TwoCut } else { Rule::ThreeCut },
            vertices: g.vertices().filter(|&v| gone[v as usize]).collect(),
            edges: cut,
            order_before: g.order(),
            order_after: 0,
        }));
    }
    Ok(None)
}

/// Cubic, 2-connected and not colourable.
pub fn check_snark(g: &MultiGraph) -> Result<()> {
    for v in g.vertices() {
        if g.degree(v) != 3 {
            return Err(Error::Degree {
                vertex: v,
                degree: g.degree(v),
                expected: "3",
            });
        }
    }
    if let Some(&e) = crate::structure::bridges(g).first() {
        return Err(Error::Bridge(e));
    }
    if !is_two_connected(g) {
        return Err(Error::pre("graph is not 2-connected"));
    }
    if is_colourable(g) {
        return Err(Error::Colourable);
    }
    Ok(())
}

type Finder = fn(&MultiGraph) -> Result<Option<Step>>;

fn drive(g: &MultiGraph, finders: &[Finder]) -> Result<Reduced> {
    check_snark(g)?;
    let before = oddness(g)?.value;
    let mut cur = g.clone();
    let mut trace = Trace::default();
    'outer: loop {
        for f in finders {
            if let Some(mut step) = f(&cur)? {
                let next = apply(&cur, &step)?;
                step.order_after = next.order();
                trace.steps.push(step);
                cur = next;
                continue 'outer;
            }
        }
        break;
    }
    let after = oddness(&cur)?.value;
    if after != before {
        return Err(Error::Reduction(format!(
            "oddness changed from {before} to {after}"
        )));
    }
    if !is_two_connected(&cur) || !cur.is_cubic() {
        return Err(Error::Reduction(
            "reduced graph is not a 2-connected cubic graph".into(),
        ));
    }
    Ok(Reduced {
        graph: cur,
        trace,
        oddness: before,
    })
}

fn short(g: &MultiGraph) -> Result<Option<Step>> {
    Ok(find_short(g))
}

fn cut2(g: &MultiGraph) -> Result<Option<Step>> {
    find_cut(g, 2)
}

fn cut3(g: &MultiGraph) -> Result<Option<Step>> {
    find_cut(g, 3)
}

pub fn reduce_to_girth4(g: &MultiGraph) -> Result<Reduced> {
    let r = drive(g, &[short])?;
    debug_assert!(girth(&r.graph).is_none_or(|x| x >= 4));
    Ok(r)
}

pub fn reduce_to_girth5(g: &MultiGraph) -> Result<Reduced> {
    drive(g, &[short, find_four])
}

pub fn reduce_2cuts(g: &MultiGraph) -> Result<Reduced> {
    drive(g, &[cut2])
}

/// Only cycle-separating 3-cuts; the cut around a single vertex is exempt.
pub fn reduce_3cuts(g: &MultiGraph) -> Result<Reduced> {
    drive(g, &[cut3])
}

/// Girth 4, girth 5, 2-cuts, 3-cuts, earlier rules first, until none applies.
pub fn reduce_all(g: &MultiGraph) -> Result<Reduced> {
    drive(g, &[short, find_four, cut2, cut3])
}

pub fn reduce(g: &MultiGraph, rules: RuleSet) -> Result<Reduced> {
    match rules {
        RuleSet::Girth4 => reduce_to_girth4(g),
        RuleSet::Girth5 => reduce_to_girth5(g),
        RuleSet::Cut2 => reduce_2cuts(g),
        RuleSet::Cut3 => reduce_3cuts(g),
        RuleSet::All => reduce_all(g),
    }
}

/// Reapplies every step of `trace` to `g`.
pub fn replay(g: &MultiGraph, trace: &Trace) -> Result<MultiGraph> {
    let mut cur = g.clone();
    for s in &trace.steps {
        if s.order_before != cur.order() {
            return Err(Error::pre("trace does not match the graph"));
        }
        cur = apply(&cur, s)?;
    }
    Ok(cur)
}

/// Replaces vertex `v` by a triangle.
pub fn expand_vertex(g: &MultiGraph, v: Vertex) -> Result<MultiGraph> {
    g.check_vertex(v)?;
    if g.degree(v) != 3 {
        return Err(Error::pre("only a degree-3 vertex expands into a triangle"));
    }
    let n = g.order() as Vertex;
    let mut out = MultiGraph::new(g.order() + 2);
    let corner = [v, n, n + 1];
    let mut k = 0;
    for (_, [a, b]) in g.edges() {
        let (mut x, mut y) = (a, b);
        if a == v {
            x = corner[k];
            k += 1;
        }
        if b == v {
            y = corner[k];
            k += 1;
        }
        out.add_edge(x, y)?;
    }
    out.add_edge(v, n)?;
    out.add_edge(n, n + 1)?;
    out.add_edge(n + 1, v)?;
    Ok(out)
}

/// Replaces the edges `e` and `f` by a 4-circuit: both are subdivided twice
/// and the new vertices are joined crosswise, `e`'s first to `f`'s first,
/// `e`'s second to `f`'s second.
pub fn expand_edge_pair(g: &MultiGraph, e: EdgeId, f: EdgeId) -> Result<MultiGraph> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    if e == f {
        return Err(Error::pre("two distinct edges are needed"));
    }
    let n = g.order() as Vertex;
    let mut out = MultiGraph::new(g.order() + 4);
    for (i, [a, b]) in g.edges() {
        let base = if i == e {
            n
        } else if i == f {
            n + 2
        } else {
            out.add_edge(a, b)?;
            continue;
        };
        out.add_edge(a, base)?;
        out.add_edge(base, base + 1)?;
        out.add_edge(base + 1, b)?;
    }
    out.add_edge(n, n + 2)?;
    out.add_edge(n + 1, n + 3)?;
    Ok(out)
}

/// `g` with edge `e = ab` replaced by the 2-pole `h - xy`: edges `a-x` and
/// `y-b` join the two parts. `h`'s vertices follow `g`'s.
pub fn replace_edge(g: &MultiGraph, e: EdgeId, h: &MultiGraph, xy: EdgeId) -> Result<MultiGraph> {
    g.check_edge(e)?;
    h.check_edge(xy)?;
    let [a, b] = g.ends(e);
    let [x, y] = h.ends(xy);
    let u = g.disjoint_union(h);
    let off = g.order() as Vertex;
    let drop_e: Vec<bool> = (0..u.size())
        .map(|i| i == e as usize || i == g.size() + xy as usize)
        .collect();
    Ok(rebuild(&u, &[], &drop_e, &[(a, x + off), (y + off, b)])?.graph)
}

/// `g` with vertex `v` replaced by the 3-pole `h - w`, the neighbours of `v`
/// joined to those of `w` in incidence order.
pub fn replace_vertex(g: &MultiGraph, v: Vertex, h: &MultiGraph, w: Vertex) -> Result<MultiGraph> {
    g.check_vertex(v)?;
    h.check_vertex(w)?;
    if g.degree(v) != 3 || h.degree(w) != 3 {
        return Err(Error::pre("both replaced vertices must have degree 3"));
    }
    let n = g.order() as Vertex;
    let u = g.disjoint_union(h);
    let mut drop = vec![false; u.order()];
    drop[v as usize] = true;
    drop[(w + n) as usize] = true;
    let extra: Vec<(Vertex, Vertex)> = g
        .incident(v)
        .iter()
        .zip(h.incident(w))
        .map(|(&(p, _), &(q, _))| (p, q + n))
        .collect();
    Ok(rebuild(&u, &drop, &[], &extra)?.graph)
}

/// Whether both sides of every `k`-edge cut (2 or 3; for 3 only
/// cycle-separating cuts) are uncolourable once closed up.
pub fn cut_sides_uncolourable(g: &MultiGraph, k: usize) -> Result<bool> {
    for (cut, side) in cuts(g, k) {
        let other: Vec<bool> = side.iter().map(|&x| !x).collect();
        if is_colourable(&close_side(g, &side, &cut)?)
            || is_colourable(&close_side(g, &other, &cut)?)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::circuits::girth;
    use crate::constructions::petersen;

    #[test]
    fn petersen_is_fixed() {
        let r = reduce_all(&petersen()).unwrap();
        assert!(r.trace.steps.is_empty());
        assert_eq!(r.oddness, 2);
    }

    #[test]
    fn triangle_contracts_back() {
        let g = expand_vertex(&petersen(), 3).unwrap();
        assert_eq!(g.order(), 12);
        let r = reduce_to_girth4(&g).unwrap();
        assert_eq!(r.trace.steps.len(), 1);
        assert!(are_isomorphic(&r.graph, &petersen()));
        assert_eq!(replay(&g, &r.trace).unwrap(), r.graph);
    }

    fn k33() -> MultiGraph {
        let es: Vec<(Vertex, Vertex)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        MultiGraph::from_edges(6, &es).unwrap()
    }

    #[test]
    fn four_circuit_reduces_to_petersen() {
        let g = expand_edge_pair(&petersen(), 0, 1).unwrap();
        assert_eq!(girth(&g), Some(4));
        let r = reduce_to_girth5(&g).unwrap();
        assert!(are_isomorphic(&r.graph, &petersen()));
        assert_eq!(r.trace.steps[0].rule, Rule::FourCircuit);
        assert_eq!(r.oddness, 2);
    }

    #[test]
    fn colourable_two_pole_is_cut_away() {
        let g = replace_edge(&petersen(), 4, &k33(), 0).unwrap();
        assert_eq!(g.order(), 16);
        let r = reduce_2cuts(&g).unwrap();
        assert_eq!(r.trace.steps.len(), 1);
        assert_eq!(r.trace.steps[0].vertices.len(), 6);
        assert!(are_isomorphic(&r.graph, &petersen()));
    }

    #[test]
    fn colourable_three_pole_is_cut_away() {
        let side = replace_vertex(&petersen(), 0, &k33(), 0).unwrap();
        let r = reduce_3cuts(&side).unwrap();
        assert_eq!(r.trace.steps.len(), 1);
        assert!(are_isomorphic(&r.graph, &petersen()));
        assert_eq!(replay(&side, &r.trace).unwrap(), r.graph);
    }

    #[test]
    fn colourable_rejected() {
        let k4 =
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(reduce_all(&k4), Err(Error::Colourable)));
    }

    #[test]
    fn rule_names_parse() {
        assert_eq!("cut3".parse::<RuleSet>().unwrap(), RuleSet::Cut3);
        assert!("girth6".parse::<RuleSet>().is_err());
    }
}
