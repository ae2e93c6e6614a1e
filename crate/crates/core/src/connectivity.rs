//! Cyclic edge connectivity with checkable certificates.
//!
//! In a cubic graph a connected vertex set `A` with `|δ(A)| = k` contains a
//! circuit iff `|A| >= k - 1`: a tree on `|A|` vertices leaves exactly
//! `|A| + 2` edges hanging out of it. Hence, once every size below `c` has been
//! ruled out, a cycle-separating cut of size `c` exists iff two disjoint
//! connected sets of `c - 1` vertices are joined by at most `c` edge-disjoint
//! paths. Sizes are tried in increasing order; a girth-based upper bound
//! cuts the search short for well-connected graphs.

use crate::circuits::{circuit_within, enumerate_circuits, shortest_circuit, Circuit};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Vertex};
use crate::structure::{boundary, bridges, components, components_masked, FlowWorkspace};

pub use crate::structure::edge_connectivity;

pub const DEFAULT_CAP: usize = 7;

/// A cycle-separating cut together with a circuit on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCutCertificate {
    pub cut: Vec<EdgeId>,
    /// `sides[0][v]` is true for vertices on the first side.
    pub sides: [Vec<Vertex>; 2],
    pub circuits: [Circuit; 2],
}

impl CyclicCutCertificate {
    /// Checks the certificate against `g` without trusting the solver.
    pub fn validate(&self, g: &MultiGraph) -> std::result::Result<(), String> {
        let n = g.order();
        let mut side = vec![2u8; n];
        for (s, vs) in self.sides.iter().enumerate() {
            for &v in vs {
                if v as usize >= n || side[v as usize] != 2 {
                    return Err(format!("vertex {v} misplaced in sides"));
                }
                side[v as usize] = s as u8;
            }
        }
        if side.contains(&2) {
            return Err("sides do not cover the graph".into());
        }
        let mut cut = self.cut.clone();
        cut.sort_unstable();
        let a: Vec<bool> = side.iter().map(|&s| s == 0).collect();
        if boundary(g, &a) != cut {
            return Err("cut is not the boundary of the first side".into());
        }
        for (s, c) in self.circuits.iter().enumerate() {
            if !c.is_valid_in(g) {
                return Err(format!("circuit {s} is not a circuit"));
            }
            if c.vertices.iter().any(|&v| side[v as usize] != s as u8) {
                return Err(format!("circuit {s} leaves its side"));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.cut.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZetaResult {
    Exact(usize, CyclicCutCertificate),
    /// No cycle-separating cut of size at most the cap; the value is cap + 1.
    AtLeast(usize),
    /// The graph does not have two vertex-disjoint circuits.
    NoCycleSeparatingCut,
}

impl ZetaResult {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ZetaResult::Exact(k, _) => Some(*k),
            _ => None,
        }
    }

    /// Whether every cycle-separating cut has at least `k` edges.
    pub fn at_least(&self, k: usize) -> bool {
        match self {
            ZetaResult::Exact(v, _) => *v >= k,
            ZetaResult::AtLeast(v) => *v >= k,
            ZetaResult::NoCycleSeparatingCut => true,
        }
    }
}

impl std::fmt::Display for ZetaResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZetaResult::Exact(k, _) => write!(f, "{k}"),
            ZetaResult::AtLeast(k) => write!(f, ">={k}"),
            ZetaResult::NoCycleSeparatingCut => write!(f, "none"),
        }
    }
}

fn to_list(side: &[bool], want: bool) -> Vec<Vertex> {
    (0..side.len() as Vertex)
        .filter(|&v| side[v as usize] == want)
        .collect()
}

/// Builds a certificate from a vertex set separating `anchor_a` from
/// `anchor_b`, shrinking the first side to the component holding `anchor_a`.
fn certify(g: &MultiGraph, side: &[bool], anchor_a: Vertex) -> Option<CyclicCutCertificate> {
    // component of anchor_a inside side
    let dead: Vec<bool> = g
        .edges()
        .map(|(_, [x, y])| side[x as usize] != side[y as usize])
        .collect();
    let (comp, _) = components_masked(g, Some(&dead));
    let ca = comp[anchor_a as usize];
    let a: Vec<bool> = g
        .vertices()
        .map(|v| side[v as usize] && comp[v as usize] == ca)
        .collect();
    let b: Vec<bool> = a.iter().map(|x| !x).collect();
    let c0 = circuit_within(g, &a)?;
    let c1 = circuit_within(g, &b)?;
    Some(CyclicCutCertificate {
        cut: boundary(g, &a),
        sides: [to_list(&a, true), to_list(&a, false)],
        circuits: [c0, c1],
    })
}

/// Every connected vertex set of size `s`, each once, sorted ascending.
pub fn connected_subsets(g: &MultiGraph, s: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if s == 0 {
        return out;
    }
    let n = g.order();
    let mut in_sub = vec![false; n];
    let mut excluded = vec![0u32; n];
    for r in g.vertices() {
        let mut sub = vec![r];
        in_sub[r as usize] = true;
        let ext: Vec<Vertex> = nbrs_above(g, r, r, &in_sub, &excluded);
        grow(g, r, s, &mut sub, ext, &mut in_sub, &mut excluded, &mut out);
        in_sub[r as usize] = false;
    }
    for v in &mut out {
        v.sort_unstable();
    }
    out
}

fn nbrs_above(
    g: &MultiGraph,
    v: Vertex,
    root: Vertex,
    in_sub: &[bool],
    excluded: &[u32],
) -> Vec<Vertex> {
    let mut w: Vec<Vertex> = g
        .incident(v)
        .iter()
        .map(|&(w, _)| w)
        .filter(|&w| w > root && !in_sub[w as usize] && excluded[w as usize] == 0)
        .collect();
    w.sort_unstable();
    w.dedup();
    w
}

// Extension-set enumeration: each connected set is produced once, from its
// smallest vertex, by only ever adding candidates not yet tried.
#[allow(clippy::too_many_arguments)]
fn grow(
    g: &MultiGraph,
    root: Vertex,
    s: usize,
    sub: &mut Vec<Vertex>,
    mut ext: Vec<Vertex>,
    in_sub: &mut [bool],
    excluded: &mut [u32],
    out: &mut Vec<Vec<Vertex>>,
) {
    if sub.len() == s {
        out.push(sub.clone());
        return;
    }
    // vertices already in ext or adjacent to sub must not be re-added as
    // "new" neighbours of later picks
    let mut marked = Vec::new();
    for &x in &ext {
        excluded[x as usize] += 1;
        marked.push(x);
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        let fresh = nbrs_above(g, w, root, in_sub, excluded);
        for &x in &fresh {
            excluded[x as usize] += 1;
        }
        next.extend(&fresh);
        in_sub[w as usize] = true;
        sub.push(w);
        grow(g, root, s, sub, next, in_sub, excluded, out);
        sub.pop();
        in_sub[w as usize] = false;
        for &x in &fresh {
            excluded[x as usize] -= 1;
        }
    }
    for x in marked {
        excluded[x as usize] -= 1;
    }
}

fn disjoint(a: &[Vertex], b: &[Vertex]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// A cycle-separating cut of size `c`, assuming none smaller exists.
fn cut_of_size(g: &MultiGraph, c: usize) -> Option<CyclicCutCertificate> {
    debug_assert!(c >= 2);
    let sets = connected_subsets(g, c - 1);
    let idx: Vec<usize> = (0..sets.len()).collect();
    crate::par::find_first(&idx, |&i| {
        let mut ws = FlowWorkspace::new(g);
        let x = &sets[i];
        for y in &sets[i + 1..] {
            if !disjoint(x, y) {
                continue;
            }
            if let Some((_, side)) = ws.min_cut(x, y, c) {
                let cert = certify(g, &side, x[0]);
                debug_assert!(cert.as_ref().is_some_and(|k| k.size() == c));
                if cert.is_some() {
                    return cert;
                }
            }
        }
        None
    })
}

/// Cheap upper bound: the cut around a shortest circuit, then flows between
/// disjoint short circuits.
fn upper_bound(g: &MultiGraph) -> Option<CyclicCutCertificate> {
    let c = shortest_circuit(g)?;
    let mut best: Option<CyclicCutCertificate> = None;
    let mut on_c = vec![false; g.order()];
    for &v in &c.vertices {
        on_c[v as usize] = true;
    }
    if let Some(cert) = certify(g, &on_c, c.vertices[0]) {
        best = Some(cert);
    }
    let girth = c.len();
    let short = enumerate_circuits(g, girth + 1);
    let mut ws = FlowWorkspace::new(g);
    let mut tried = 0;
    'outer: for i in 0..short.len() {
        let mut a = short[i].vertices.clone();
        a.sort_unstable();
        for other in &short[i + 1..] {
            let mut b = other.vertices.clone();
            b.sort_unstable();
            if !disjoint(&a, &b) {
                continue;
            }
            tried += 1;
            if tried > 4000 {
                break 'outer;
            }
            let limit = best.as_ref().map_or(usize::MAX - 1, |k| k.size() - 1);
            if let Some((_, side)) = ws.min_cut(&a, &b, limit) {
                if let Some(cert) = certify(g, &side, a[0]) {
                    if best.as_ref().is_none_or(|k| cert.size() < k.size()) {
                        best = Some(cert);
                    }
                }
            }
        }
    }
    if best.is_none() && g.order() <= 24 {
        // small graphs: look for any two disjoint circuits
        let all = enumerate_circuits(g, g.order());
        'pairs: for (i, x) in all.iter().enumerate() {
            let mut a = x.vertices.clone();
            a.sort_unstable();
            for y in &all[i + 1..] {
                let mut b = y.vertices.clone();
                b.sort_unstable();
                if disjoint(&a, &b) {
                    if let Some((_, side)) = ws.min_cut(&a, &b, usize::MAX - 1) {
                        best = certify(g, &side, a[0]);
                        if best.is_some() {
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }
    best
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

/// Exact cyclic connectivity when it is at most `cap`.
pub fn cyclic_connectivity(g: &MultiGraph, cap: usize) -> Result<ZetaResult> {
    check_cubic(g)?;
    if g.order() == 0 {
        return Ok(ZetaResult::NoCycleSeparatingCut);
    }
    let (comp, count) = components(g);
    if count > 1 {
        let side: Vec<bool> = comp.iter().map(|&c| c == 0).collect();
        // every component of a cubic graph has a circuit
        let cert = certify(g, &side, 0).expect("cubic components contain circuits");
        return Ok(ZetaResult::Exact(0, cert));
    }
    for b in bridges(g) {
        let mut dead = vec![false; g.size()];
        dead[b as usize] = true;
        let (comp, _) = components_masked(g, Some(&dead));
        let [x, _] = g.ends(b);
        let side: Vec<bool> = comp.iter().map(|&c| c == comp[x as usize]).collect();
        if let Some(cert) = certify(g, &side, x) {
            return Ok(ZetaResult::Exact(1, cert));
        }
    }
    let upper = upper_bound(g);
    let u = upper.as_ref().map_or(usize::MAX, |k| k.size());
    for c in 2..u.min(cap + 1) {
        if let Some(cert) = cut_of_size(g, c) {
            return Ok(ZetaResult::Exact(c, cert));
        }
    }
    Ok(match upper {
        Some(cert) if u <= cap => ZetaResult::Exact(u, cert),
        Some(_) => ZetaResult::AtLeast(cap + 1),
        None => {
            if g.order() <= 24 {
                ZetaResult::NoCycleSeparatingCut
            } else {
                // large cubic graphs always have two disjoint circuits, so the
                // heuristics above cannot have missed them
                return Err(Error::pre("no cycle-separating cut found in a large graph"));
            }
        }
    })
}

/// Decision form; a counterexample cut is returned when the answer is no.
/// Graphs without a cycle-separating cut count as cyclically k-connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    pub counterexample: Option<CyclicCutCertificate>,
    pub no_separating_cut: bool,
}

pub fn is_cyclically_k_connected(g: &MultiGraph, k: usize) -> Result<Decision> {
    let r = cyclic_connectivity(g, k.saturating_sub(1))?;
    Ok(match r {
        ZetaResult::Exact(v, cert) if v < k => Decision {
            holds: false,
            counterexample: Some(cert),
            no_separating_cut: false,
        },
        ZetaResult::NoCycleSeparatingCut => Decision {
            holds: true,
            counterexample: None,
            no_separating_cut: true,
        },
        _ => Decision {
            holds: true,
            counterexample: None,
            no_separating_cut: false,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_subsets_of_k4() {
        let g =
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(connected_subsets(&g, 2).len(), 6);
        assert_eq!(connected_subsets(&g, 3).len(), 4);
        assert_eq!(
            cyclic_connectivity(&g, 7).unwrap(),
            ZetaResult::NoCycleSeparatingCut
        );
    }

    #[test]
    fn subsets_of_path_are_unique() {
        let g = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut s = connected_subsets(&g, 3);
        let n = s.len();
        s.sort();
        s.dedup();
        assert_eq!((n, s.len()), (3, 3));
    }

    #[test]
    fn prism_is_three() {
        let g = MultiGraph::from_edges(
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
        .unwrap();
        let r = cyclic_connectivity(&g, 7).unwrap();
        assert_eq!(r.exact(), Some(3));
        if let ZetaResult::Exact(_, cert) = r {
            cert.validate(&g).unwrap();
        }
    }
}
