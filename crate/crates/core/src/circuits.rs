//! Circuits: shortest ones, bounded enumeration and 5-circuit incidence.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, Vertex};
use std::collections::VecDeque;

/// A closed walk without repeated vertices. `edges[i]` joins `vertices[i]`
/// and `vertices[i + 1]` (cyclically), so a 2-circuit names both parallel
/// edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circuit {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Picks the first available edge between consecutive vertices.
    pub fn from_vertices(g: &MultiGraph, vs: &[Vertex]) -> Result<Circuit> {
        if vs.len() < 2 {
            return Err(Error::pre("a circuit needs at least two vertices"));
        }
        let mut used: Vec<EdgeId> = Vec::with_capacity(vs.len());
        for i in 0..vs.len() {
            let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
            g.check_vertex(a)?;
            let e = g
                .incident(a)
                .iter()
                .find(|&&(w, e)| w == b && !used.contains(&e))
                .map(|&(_, e)| e)
                .ok_or_else(|| Error::pre(format!("no free edge between {a} and {b}")))?;
            used.push(e);
        }
        let c = Circuit {
            vertices: vs.to_vec(),
            edges: used,
        };
        if c.is_valid_in(g) {
            Ok(c)
        } else {
            Err(Error::pre("vertex sequence is not a circuit"))
        }
    }

    pub fn is_valid_in(&self, g: &MultiGraph) -> bool {
        let k = self.vertices.len();
        if k < 2 || self.edges.len() != k {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != k || es.len() != k {
            return false;
        }
        (0..k).all(|i| {
            let e = self.edges[i];
            if e as usize >= g.size() {
                return false;
            }
            let [a, b] = g.ends(e);
            let (x, y) = (self.vertices[i], self.vertices[(i + 1) % k]);
            (a == x && b == y) || (a == y && b == x)
        })
    }
}

/// Shortest circuit length, or `None` for a forest.
pub fn girth(g: &MultiGraph) -> Option<usize> {
    shortest_circuit(g).map(|c| c.len())
}

pub fn shortest_circuit(g: &MultiGraph) -> Option<Circuit> {
    shortest_circuit_within(g, None)
}

/// Shortest circuit of the subgraph induced by `allowed` (all vertices when
/// `None`). Ties go to the smallest BFS root.
pub fn shortest_circuit_within(g: &MultiGraph, allowed: Option<&[bool]>) -> Option<Circuit> {
    let n = g.order();
    let ok = |v: Vertex| allowed.is_none_or(|a| a[v as usize]);
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![(u32::MAX, u32::MAX); n];
    let mut best: Option<(u32, Vertex, Vertex, Vertex, EdgeId)> = None;
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for r in g.vertices().filter(|&r| ok(r)) {
        for &v in &touched {
            dist[v as usize] = u32::MAX;
        }
        touched.clear();
        dist[r as usize] = 0;
        touched.push(r);
        queue.clear();
        queue.push_back(r);
        'bfs: while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if let Some((b, ..)) = best {
                if 2 * du + 1 >= b {
                    break;
                }
            }
            for &(w, e) in g.incident(u) {
                if !ok(w) || parent[u as usize].1 == e && u != r {
                    continue;
                }
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    parent[w as usize] = (u, e);
                    touched.push(w);
                    queue.push_back(w);
                } else {
                    let len = du + dist[w as usize] + 1;
                    if best.is_none_or(|b| len < b.0) {
                        best = Some((len, r, u, w, e));
                        if len == 2 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best.is_some_and(|b| b.0 == 2) {
            break;
        }
    }
    best.map(|b| reconstruct(g, ok, b))
}

fn reconstruct(
    g: &MultiGraph,
    ok: impl Fn(Vertex) -> bool,
    (_, r, u, w, e): (u32, Vertex, Vertex, Vertex, EdgeId),
) -> Circuit {
    // BFS again from r to get parents deterministically.
    let n = g.order();
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![(u32::MAX, u32::MAX); n];
    let mut queue = VecDeque::from([r]);
    dist[r as usize] = 0;
    while let Some(x) = queue.pop_front() {
        for &(y, f) in g.incident(x) {
            if ok(y) && dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                parent[y as usize] = (x, f);
                queue.push_back(y);
            }
        }
    }
    let path = |mut x: Vertex| {
        let mut vs = vec![x];
        let mut es = Vec::new();
        while x != r {
            let (p, f) = parent[x as usize];
            es.push(f);
            vs.push(p);
            x = p;
        }
        vs.reverse();
        es.reverse();
        (vs, es)
    };
    let (pu, eu) = path(u);
    let (pw, ew) = path(w);
    // r .. u, then e to w, then w .. back to r (excluding r)
    let mut vertices = pu;
    let mut edges = eu;
    edges.push(e);
    for i in (1..pw.len()).rev() {
        vertices.push(pw[i]);
        edges.push(ew[i - 1]);
    }
    let c = Circuit { vertices, edges };
    debug_assert!(c.is_valid_in(g), "{c:?}");
    c
}

/// Every circuit of length at most `max_len`, each once up to rotation and
/// reflection. Circuits start at their smallest vertex; the first edge id is
/// smaller than the closing edge id.
pub fn enumerate_circuits(g: &MultiGraph, max_len: usize) -> Vec<Circuit> {
    let mut out = Vec::new();
    if max_len < 2 {
        return out;
    }
    let n = g.order();
    let mut on_path = vec![false; n];
    for s in g.vertices() {
        let mut vs = vec![s];
        let mut es = Vec::new();
        on_path[s as usize] = true;
        extend(g, s, max_len, &mut vs, &mut es, &mut on_path, &mut out);
        on_path[s as usize] = false;
    }
    out
}

fn extend(
    g: &MultiGraph,
    s: Vertex,
    max_len: usize,
    vs: &mut Vec<Vertex>,
    es: &mut Vec<EdgeId>,
    on_path: &mut [bool],
    out: &mut Vec<Circuit>,
) {
    let u = *vs.last().unwrap();
    for &(w, e) in g.incident(u) {
        if es.last() == Some(&e) {
            continue;
        }
        if w == s {
            if vs.len() >= 2 && es[0] < e {
                let mut edges = es.clone();
                edges.push(e);
                out.push(Circuit {
                    vertices: vs.clone(),
                    edges,
                });
            }
            continue;
        }
        if w < s || on_path[w as usize] || vs.len() == max_len {
            continue;
        }
        on_path[w as usize] = true;
        vs.push(w);
        es.push(e);
        extend(g, s, max_len, vs, es, on_path, out);
        vs.pop();
        es.pop();
        on_path[w as usize] = false;
    }
}

/// Number of 5-circuits through each vertex, with the profile
/// `(n_0, ..., n_6)` where `n_i` counts vertices on exactly `i` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveCircuitProfile {
    pub per_vertex: Vec<usize>,
    pub profile: [usize; 7],
    /// Vertices on more than six 5-circuits; impossible in a cubic graph,
    /// so a nonempty list signals an internal inconsistency.
    pub overflow: Vec<Vertex>,
    pub circuit_count: usize,
}

impl FiveCircuitProfile {
    /// `sum i * n_i`, which must equal five times the circuit count.
    pub fn weighted_sum(&self) -> usize {
        self.profile
            .iter()
            .enumerate()
            .map(|(i, &c)| i * c)
            .sum::<usize>()
            + self
                .overflow
                .iter()
                .map(|&v| self.per_vertex[v as usize])
                .sum::<usize>()
    }
}

pub fn five_circuit_incidence(g: &MultiGraph) -> FiveCircuitProfile {
    let cs: Vec<Circuit> = enumerate_circuits(g, 5)
        .into_iter()
        .filter(|c| c.len() == 5)
        .collect();
    let mut per_vertex = vec![0; g.order()];
    for c in &cs {
        for &v in &c.vertices {
            per_vertex[v as usize] += 1;
        }
    }
    let mut profile = [0; 7];
    let mut overflow = Vec::new();
    for (v, &k) in per_vertex.iter().enumerate() {
        if k <= 6 {
            profile[k] += 1;
        } else {
            overflow.push(v as Vertex);
        }
    }
    FiveCircuitProfile {
        per_vertex,
        profile,
        overflow,
        circuit_count: cs.len(),
    }
}

/// Any circuit inside the vertex set `allowed`, preferring short ones.
pub fn circuit_within(g: &MultiGraph, allowed: &[bool]) -> Option<Circuit> {
    shortest_circuit_within(g, Some(allowed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn k4_circuits() {
        let cs = enumerate_circuits(&k4(), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
        assert!(cs.iter().all(|c| c.is_valid_in(&k4())));
        assert_eq!(girth(&k4()), Some(3));
    }

    #[test]
    fn theta_girth_two() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(girth(&g), Some(2));
        assert_eq!(enumerate_circuits(&g, 2).len(), 3);
        let c = shortest_circuit(&g).unwrap();
        assert!(c.is_valid_in(&g));
    }

    #[test]
    fn forest_has_no_girth() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(girth(&g), None);
    }
}
