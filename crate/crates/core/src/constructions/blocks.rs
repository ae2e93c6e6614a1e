//! Petersen graph, flower snarks and the networks cut out of the Petersen
//! graph that everything else is assembled from.

use crate::error::{Error, Result};
use crate::graph::{subdivide, EdgeId, MultiGraph, Network, Vertex};

/// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram
/// `(5+i) - (5+(i+2)%5)`. Edge ids follow that order.
pub fn petersen() -> MultiGraph {
    let mut es = Vec::with_capacity(15);
    for i in 0..5 {
        es.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        es.push((i, i + 5));
    }
    for i in 0..5 {
        es.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::from_edges(10, &es).expect("valid edge list")
}

/// Flower snark `J_k` for odd `k >= 3`. Vertex `a_i = i` is the centre of
/// claw `i` with leaves `b_i = k+i`, `c_i = 2k+i`, `d_i = 3k+i`; the `b_i`
/// form a k-cycle and the `c_i`, `d_i` one 2k-cycle.
pub fn flower_snark(k: usize) -> Result<MultiGraph> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::Param(format!(
            "flower snark needs odd k >= 3, got {k}"
        )));
    }
    let k32 = k as Vertex;
    let (a, b, c, d) = (|i| i, |i| k32 + i, |i| 2 * k32 + i, |i| 3 * k32 + i);
    let mut es = Vec::new();
    for i in 0..k32 {
        es.push((a(i), b(i)));
        es.push((a(i), c(i)));
        es.push((a(i), d(i)));
    }
    for i in 0..k32 {
        es.push((b(i), b((i + 1) % k32)));
    }
    for i in 0..k32 - 1 {
        es.push((c(i), c(i + 1)));
        es.push((d(i), d(i + 1)));
    }
    es.push((c(k32 - 1), d(0)));
    es.push((d(k32 - 1), c(0)));
    MultiGraph::from_edges(4 * k, &es)
}

/// Splits off every vertex in `vs` at once. Each split vertex yields one
/// terminal per incident edge, grouped into a connector in incidence order;
/// connectors follow the order of `vs`. Other vertices keep their relative
/// order. An edge between two split vertices becomes a terminal-terminal
/// edge.
pub fn split_vertices(g: &MultiGraph, vs: &[Vertex]) -> Result<Network> {
    let (out, connectors) = split_raw(g, vs)?;
    let terminals = connectors.iter().flatten().copied().collect();
    Network::new(out, terminals, connectors)
}

fn split_raw(g: &MultiGraph, vs: &[Vertex]) -> Result<(MultiGraph, Vec<Vec<Vertex>>)> {
    let mut split = vec![false; g.order()];
    for &v in vs {
        g.check_vertex(v)?;
        if split[v as usize] {
            return Err(Error::pre(format!("vertex {v} split twice")));
        }
        split[v as usize] = true;
    }
    let mut id = vec![0 as Vertex; g.order()];
    let mut next = 0;
    for v in g.vertices() {
        if !split[v as usize] {
            id[v as usize] = next;
            next += 1;
        }
    }
    // terminal created for (edge, side)
    let mut term = vec![[Vertex::MAX; 2]; g.size()];
    let mut connectors = Vec::new();
    for &v in vs {
        let mut group = Vec::new();
        for &(_, e) in g.incident(v) {
            let [a, _] = g.ends(e);
            let side = if a == v { 0 } else { 1 };
            term[e as usize][side] = next;
            group.push(next);
            next += 1;
        }
        connectors.push(group);
    }
    let mut out = MultiGraph::new(next as usize);
    for (e, [a, b]) in g.edges() {
        let x = if split[a as usize] {
            term[e as usize][0]
        } else {
            id[a as usize]
        };
        let y = if split[b as usize] {
            term[e as usize][1]
        } else {
            id[b as usize]
        };
        out.add_edge(x, y)?;
    }
    Ok((out, connectors))
}

/// Subdivides each edge in `es` once; returns the graph and the new vertices.
pub fn subdivide_all(g: &MultiGraph, es: &[EdgeId]) -> Result<(MultiGraph, Vec<Vertex>)> {
    let mut g = g.clone();
    let mut vs = Vec::new();
    for &e in es {
        let s = subdivide(&g, e)?;
        vs.push(s.vertex);
        g = s.graph;
    }
    Ok((g, vs))
}

/// Two terminals; in any colouring of a graph containing it, both terminal
/// edges get the same colour.
pub fn build_p2() -> Network {
    p2_at(0).expect("edge 0 exists")
}

pub fn p2_at(e: EdgeId) -> Result<Network> {
    let (g, vs) = subdivide_all(&petersen(), &[e])?;
    let n = split_vertices(&g, &vs)?;
    let ts = n.terminals().to_vec();
    n.with_connectors(ts.iter().map(|&t| vec![t]).collect())
}

pub fn build_p3() -> Network {
    p3_at(0).expect("vertex 0 exists")
}

pub fn p3_at(v: Vertex) -> Result<Network> {
    let n = split_vertices(&petersen(), &[v])?;
    let ts = n.terminals().to_vec();
    n.with_connectors(ts.iter().map(|&t| vec![t]).collect())
}

/// Connectors are the two pairs, one per end of the deleted edge.
pub fn build_p4v() -> Network {
    p4v_at(0).expect("edge 0 exists")
}

pub fn p4v_at(e: EdgeId) -> Result<Network> {
    let p = petersen();
    p.check_edge(e)?;
    let [a, b] = p.ends(e);
    let g = crate::graph::delete_edges(&p, &[e])?.graph;
    split_vertices(&g, &[a, b])
}

/// Subdivides two edges at distance one; one pair per subdivision vertex.
pub fn build_p4e() -> Network {
    p4e_at(0, 2).expect("edges 0 and 2 are at distance one")
}

pub fn p4e_at(e: EdgeId, f: EdgeId) -> Result<Network> {
    let p = petersen();
    if edge_distance(&p, e, f)? != 1 {
        return Err(Error::pre(format!(
            "edges {e} and {f} are not at distance one"
        )));
    }
    let (g, vs) = subdivide_all(&p, &[e, f])?;
    split_vertices(&g, &vs)
}

/// Deletes `u-w` and `w-v`; `u` and `v` give the two pairs and `w` stays as
/// the single terminal. Connectors: pair of `u`, pair of `v`, `[w]`.
pub fn build_p5vvv() -> Network {
    p5vvv_at(0, 1, 2).expect("path 0-1-2 exists")
}

pub fn p5vvv_at(u: Vertex, w: Vertex, v: Vertex) -> Result<Network> {
    let p = petersen();
    let e1 = p
        .edge_between(u, w)
        .ok_or_else(|| Error::pre(format!("{u}-{w} is not an edge")))?;
    let e2 = p
        .edge_between(w, v)
        .ok_or_else(|| Error::pre(format!("{w}-{v} is not an edge")))?;
    let g = crate::graph::delete_edges(&p, &[e1, e2])?.graph;
    let (g, mut conns) = split_raw(&g, &[u, v])?;
    // w shifts down past the split vertices below it
    let w_new = w - [u, v].iter().filter(|&&x| x < w).count() as Vertex;
    conns.push(vec![w_new]);
    let terminals = conns.iter().flatten().copied().collect();
    Network::new(g, terminals, conns)
}

/// Splits `v` and a subdivision vertex on an edge at distance two from it.
/// Connectors: the pair, then the triple.
pub fn build_p5ev() -> Network {
    p5ev_at(0, 2).expect("edge 2 is at distance two from vertex 0")
}

pub fn p5ev_at(v: Vertex, e: EdgeId) -> Result<Network> {
    let p = petersen();
    p.check_vertex(v)?;
    let d = vertex_edge_distance(&p, v, e)?;
    if d != 2 {
        return Err(Error::pre(format!(
            "edge {e} is at distance {d} from vertex {v}"
        )));
    }
    let (g, vs) = subdivide_all(&p, &[e])?;
    split_vertices(&g, &[vs[0], v])
}

fn distances(g: &MultiGraph, src: &[Vertex]) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.order()];
    let mut q = std::collections::VecDeque::new();
    for &s in src {
        d[s as usize] = 0;
        q.push_back(s);
    }
    while let Some(u) = q.pop_front() {
        for &(w, _) in g.incident(u) {
            if d[w as usize] == usize::MAX {
                d[w as usize] = d[u as usize] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Least distance between an end of `e` and an end of `f`.
pub fn edge_distance(g: &MultiGraph, e: EdgeId, f: EdgeId) -> Result<usize> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    let d = distances(g, &g.ends(e));
    Ok(g.ends(f).iter().map(|&x| d[x as usize]).min().unwrap())
}

pub fn vertex_edge_distance(g: &MultiGraph, v: Vertex, e: EdgeId) -> Result<usize> {
    g.check_edge(e)?;
    let d = distances(g, &[v]);
    Ok(g.ends(e).iter().map(|&x| d[x as usize]).min().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::girth;

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert!(p.is_cubic());
        assert_eq!((p.order(), p.size(), girth(&p)), (10, 15, Some(5)));
    }

    #[test]
    fn flower_sizes() {
        assert_eq!(flower_snark(5).unwrap().order(), 20);
        assert!(flower_snark(5).unwrap().is_cubic());
        assert_eq!(flower_snark(3).unwrap().order(), 12);
        assert!(flower_snark(4).is_err());
    }

    #[test]
    fn nonterminal_counts() {
        let counts: Vec<usize> = [
            build_p2(),
            build_p3(),
            build_p4v(),
            build_p4e(),
            build_p5vvv(),
            build_p5ev(),
        ]
        .iter()
        .map(Network::nonterminal_count)
        .collect();
        assert_eq!(counts, vec![10, 9, 8, 10, 7, 9]);
        assert_eq!(build_p5vvv().connector_sizes(), vec![2, 2, 1]);
        assert_eq!(build_p5ev().connector_sizes(), vec![2, 3]);
    }

    #[test]
    fn distance_checks() {
        assert!(p4e_at(0, 1).is_err());
        assert!(p5ev_at(0, 0).is_err());
    }
}
