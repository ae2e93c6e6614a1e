//! Superposition: every vertex of a cubic base graph is replaced by a
//! network with three connectors, every edge by a network with two, and
//! connectors are glued along the vertex-edge incidences.

use crate::colouring::{boundary_colourings, Colour};
use crate::error::{Error, Result};
use crate::graph::{Assembly, EdgeId, MultiGraph, Network, Vertex};
use std::collections::VecDeque;

/// One end of a base edge: `base.ends(edge)[side]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub side: u8,
}

#[derive(Clone, Debug)]
pub struct Supervertex {
    pub network: Network,
    /// Edge end served by each connector.
    pub ends: [EdgeEnd; 3],
}

#[derive(Clone, Debug)]
pub struct Superedge {
    pub network: Network,
    /// When false, connector 0 meets side 0 of the base edge.
    pub flipped: bool,
}

impl Superedge {
    fn connector_at(&self, side: u8) -> &[Vertex] {
        let c = (side as usize) ^ (self.flipped as usize);
        &self.network.connectors()[c]
    }
}

#[derive(Clone, Debug)]
pub struct SuperpositionPlan {
    pub base: MultiGraph,
    pub vertices: Vec<Supervertex>,
    pub edges: Vec<Superedge>,
}

impl SuperpositionPlan {
    /// Every vertex and edge substituted trivially, connectors in incidence
    /// order.
    pub fn trivial(base: &MultiGraph) -> Result<Self> {
        if !base.is_cubic() {
            return Err(Error::pre("superposition needs a cubic base graph"));
        }
        let vertices = base
            .vertices()
            .map(|v| Supervertex {
                network: Network::trivial_supervertex(),
                ends: incidence_ends(base, v),
            })
            .collect();
        let edges = (0..base.size())
            .map(|_| Superedge {
                network: Network::trivial_superedge(),
                flipped: false,
            })
            .collect();
        Ok(SuperpositionPlan {
            base: base.clone(),
            vertices,
            edges,
        })
    }

    /// Checks connector counts, the incidence association and size matching.
    pub fn validate(&self) -> Result<()> {
        let g = &self.base;
        if self.vertices.len() != g.order() || self.edges.len() != g.size() {
            return Err(Error::pre("plan does not cover the base graph"));
        }
        let mut used = vec![[false; 2]; g.size()];
        for (v, sv) in self.vertices.iter().enumerate() {
            if sv.network.connectors().len() != 3 {
                return Err(Error::pre(format!(
                    "supervertex {v} needs three connectors"
                )));
            }
            for (i, end) in sv.ends.iter().enumerate() {
                g.check_edge(end.edge)?;
                if end.side > 1 || g.ends(end.edge)[end.side as usize] != v as Vertex {
                    return Err(Error::pre(format!(
                        "connector {i} of vertex {v} names a foreign edge end"
                    )));
                }
                if std::mem::replace(&mut used[end.edge as usize][end.side as usize], true) {
                    return Err(Error::pre(format!("edge end {:?} used twice", end)));
                }
                let have = sv.network.connectors()[i].len();
                let se = &self.edges[end.edge as usize];
                if se.network.connectors().len() != 2 {
                    return Err(Error::pre(format!(
                        "superedge {} needs two connectors",
                        end.edge
                    )));
                }
                let want = se.connector_at(end.side).len();
                if have != want {
                    return Err(Error::pre(format!(
                        "vertex {v} connector {i} has {have} terminals, edge {} end expects {want}",
                        end.edge
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The three edge ends at `v` in incidence order.
pub fn incidence_ends(g: &MultiGraph, v: Vertex) -> [EdgeEnd; 3] {
    let mut out = [EdgeEnd { edge: 0, side: 0 }; 3];
    let mut seen: Vec<EdgeId> = Vec::new();
    for (i, &(_, e)) in g.incident(v).iter().enumerate().take(3) {
        let [a, b] = g.ends(e);
        // a parallel edge appears once per end; only loops could repeat
        let side = if a == v && !(b == v && seen.contains(&e)) {
            0
        } else {
            1
        };
        seen.push(e);
        out[i] = EdgeEnd { edge: e, side };
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeImage {
    Edge(EdgeId),
    /// The edge collapses onto a base vertex.
    Vertex(Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub vertex: Vec<Vertex>,
    pub edge: Vec<EdgeImage>,
}

impl Projection {
    /// Incidence preserving and onto.
    pub fn validate(&self, base: &MultiGraph, sup: &MultiGraph) -> std::result::Result<(), String> {
        if self.vertex.len() != sup.order() || self.edge.len() != sup.size() {
            return Err("projection has the wrong length".into());
        }
        let mut hit_v = vec![false; base.order()];
        let mut hit_e = vec![false; base.size()];
        for &v in &self.vertex {
            if v as usize >= base.order() {
                return Err(format!("vertex image {v} out of range"));
            }
            hit_v[v as usize] = true;
        }
        for (e, [a, b]) in sup.edges() {
            let (pa, pb) = (self.vertex[a as usize], self.vertex[b as usize]);
            match self.edge[e as usize] {
                EdgeImage::Vertex(v) => {
                    if pa != v || pb != v {
                        return Err(format!(
                            "edge {e} collapses to {v} but its ends map to {pa}, {pb}"
                        ));
                    }
                }
                EdgeImage::Edge(f) => {
                    let [x, y] = base.ends(f);
                    if !((pa == x && pb == y) || (pa == y && pb == x)) {
                        return Err(format!(
                            "edge {e} maps to {f} but its ends map to {pa}, {pb}"
                        ));
                    }
                    hit_e[f as usize] = true;
                }
            }
        }
        if let Some(v) = hit_v.iter().position(|h| !h) {
            return Err(format!("base vertex {v} not covered"));
        }
        if let Some(e) = hit_e.iter().position(|h| !h) {
            return Err(format!("base edge {e} not covered"));
        }
        Ok(())
    }

    /// Image of a vertex set, sorted and deduplicated.
    pub fn image(&self, vs: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = vs.iter().map(|&v| self.vertex[v as usize]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Clone, Debug)]
pub struct Superposed {
    pub graph: MultiGraph,
    pub projection: Projection,
    /// Per base edge, the superposed edges leaving each connector of its
    /// superedge (side 0, side 1).
    pub connector_edges: Vec<[Vec<EdgeId>; 2]>,
}

pub fn superpose(plan: &SuperpositionPlan) -> Result<Superposed> {
    plan.validate()?;
    let g = &plan.base;
    let mut asm = Assembly::new();
    let mut owner: Vec<(bool, u32)> = Vec::new(); // per union vertex: (is edge part, id)
    let vparts: Vec<_> = plan
        .vertices
        .iter()
        .enumerate()
        .map(|(v, sv)| {
            let p = asm.add(&sv.network);
            owner.resize(asm.union().order(), (false, v as u32));
            p
        })
        .collect();
    let eparts: Vec<_> = plan
        .edges
        .iter()
        .enumerate()
        .map(|(e, se)| {
            let p = asm.add(&se.network);
            owner.resize(asm.union().order(), (true, e as u32));
            p
        })
        .collect();
    for (v, sv) in plan.vertices.iter().enumerate() {
        for (i, end) in sv.ends.iter().enumerate() {
            let se = &plan.edges[end.edge as usize];
            let mine = &sv.network.connectors()[i];
            let theirs = se.connector_at(end.side);
            for (&a, &b) in mine.iter().zip(theirs) {
                asm.join(
                    asm.global(vparts[v], a),
                    asm.global(eparts[end.edge as usize], b),
                )?;
            }
        }
    }
    let union = asm.union().clone();
    // base-vertex image of every union vertex; terminals are dropped later
    let mut union_image = vec![Vertex::MAX; union.order()];
    for u in union.vertices() {
        let (is_edge, id) = owner[u as usize];
        if !is_edge {
            union_image[u as usize] = id;
        }
    }
    for (e, se) in plan.edges.iter().enumerate() {
        let net = &se.network;
        let base_ends = g.ends(e as EdgeId);
        let d0 = bfs_from(net, se.connector_at(0));
        let d1 = bfs_from(net, se.connector_at(1));
        for x in net.graph().vertices() {
            let side = usize::from(d1[x as usize] < d0[x as usize]);
            union_image[asm.global(eparts[e], x) as usize] = base_ends[side];
        }
    }
    // union edges of each superedge's connector terminals
    let mut conn_union_edges: Vec<[Vec<EdgeId>; 2]> = vec![[Vec::new(), Vec::new()]; g.size()];
    for (e, se) in plan.edges.iter().enumerate() {
        for side in 0..2u8 {
            for &t in se.connector_at(side) {
                let gt = asm.global(eparts[e], t);
                conn_union_edges[e][side as usize].push(union.incident(gt)[0].1);
            }
        }
    }
    let done = asm.finish()?;
    let sup = done.network.graph().clone();
    if !done.network.terminals().is_empty() {
        return Err(Error::Construction(
            "superposition left terminals unjoined".into(),
        ));
    }
    let mut vertex = vec![Vertex::MAX; sup.order()];
    for u in union.vertices() {
        if let Some(f) = done.vertex_map[u as usize] {
            vertex[f as usize] = union_image[u as usize];
        }
    }
    let mut edge = Vec::with_capacity(sup.size());
    for (f, [a, b]) in sup.edges() {
        let (pa, pb) = (vertex[a as usize], vertex[b as usize]);
        if pa == pb {
            edge.push(EdgeImage::Vertex(pa));
            continue;
        }
        // prefer the base edge whose superedge the chain runs through
        let chain = &done.chains[f as usize];
        let via = chain.iter().find_map(|&ue| {
            let [x, _] = union.ends(ue);
            let (is_edge, id) = owner[x as usize];
            let [s, t] = g.ends(id);
            (is_edge && ((s == pa && t == pb) || (s == pb && t == pa))).then_some(id)
        });
        let img = via.or_else(|| g.edge_between(pa, pb)).ok_or_else(|| {
            Error::Construction(format!("edge {f} joins non-adjacent images {pa}, {pb}"))
        })?;
        edge.push(EdgeImage::Edge(img));
    }
    let connector_edges = conn_union_edges
        .iter()
        .map(|sides| {
            sides
                .clone()
                .map(|es| es.iter().map(|&ue| done.edge_map[ue as usize]).collect())
        })
        .collect();
    Ok(Superposed {
        graph: sup,
        projection: Projection { vertex, edge },
        connector_edges,
    })
}

fn bfs_from(n: &Network, src: &[Vertex]) -> Vec<usize> {
    let g = n.graph();
    let mut d = vec![usize::MAX; g.order()];
    let mut q = VecDeque::new();
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

/// Both connector sums are nonzero in every colouring (they are then equal
/// by parity).
pub fn is_proper_superedge(y: &Network) -> Result<bool> {
    if y.connectors().len() != 2 {
        return Err(Error::pre("a superedge has exactly two connectors"));
    }
    let ts = y.terminals();
    let pos = |t: Vertex| ts.iter().position(|&x| x == t).expect("connector terminal");
    let c0: Vec<usize> = y.connectors()[0].iter().map(|&t| pos(t)).collect();
    let c1: Vec<usize> = y.connectors()[1].iter().map(|&t| pos(t)).collect();
    let sum = |tuple: &[Colour], idx: &[usize]| idx.iter().fold(0, |a, &i| a ^ tuple[i]);
    Ok(boundary_colourings(y)
        .iter()
        .all(|t| sum(t, &c0) != 0 && sum(t, &c1) != 0))
}

/// Evidence that a superposition is at least as resistant as its base.
#[derive(Clone, Debug)]
pub struct ResistanceComparison {
    pub base_resistance: usize,
    /// No deletion of fewer than `base_resistance` vertices colours the
    /// superposed graph.
    pub lower_bound_holds: bool,
    /// Filled in when the superposed graph is small enough to solve exactly.
    pub exact: Option<ExactComparison>,
}

#[derive(Clone, Debug)]
pub struct ExactComparison {
    pub resistance: usize,
    pub witness: Vec<Vertex>,
    /// Image of the witness in the base graph.
    pub projected: Vec<Vertex>,
    /// The base graph minus the projected set is colourable.
    pub projected_colourable: bool,
}

impl ResistanceComparison {
    pub fn holds(&self) -> bool {
        self.lower_bound_holds
            && self.exact.as_ref().is_none_or(|x| {
                x.resistance >= self.base_resistance
                    && x.projected.len() <= x.witness.len()
                    && x.projected_colourable
            })
    }
}

/// Superposed graphs up to this order also get an exact resistance.
pub const EXACT_ORDER: usize = 40;

/// Compares the vertex resistance of `plan.base` with that of its
/// superposition.
pub fn check_superposition_resistance(plan: &SuperpositionPlan) -> Result<ResistanceComparison> {
    use crate::colouring::{colour_after_deletion, resistance, resistance_at_least, DeletionMode};
    let base = &plan.base;
    let rb = resistance(base, DeletionMode::Vertex)?.value;
    let sup = superpose(plan)?;
    let g = &sup.graph;
    let lower_bound_holds = resistance_at_least(g, DeletionMode::Vertex, rb);
    let exact = if g.order() <= EXACT_ORDER {
        let r = crate::colouring::resistance_from(
            g,
            DeletionMode::Vertex,
            if lower_bound_holds { rb } else { 0 },
        )?;
        let witness: Vec<Vertex> = r.witness.deleted.clone();
        let projected = sup.projection.image(&witness);
        let projected_colourable =
            colour_after_deletion(base, DeletionMode::Vertex, &projected).is_some();
        Some(ExactComparison {
            resistance: r.value,
            witness,
            projected,
            projected_colourable,
        })
    } else {
        None
    };
    Ok(ResistanceComparison {
        base_resistance: rb,
        lower_bound_holds,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::petersen;

    #[test]
    fn trivial_plan_is_identity() {
        let p = petersen();
        let plan = SuperpositionPlan::trivial(&p).unwrap();
        let s = superpose(&plan).unwrap();
        assert!(are_isomorphic(&s.graph, &p));
        s.projection.validate(&p, &s.graph).unwrap();
        assert!(s
            .projection
            .edge
            .iter()
            .all(|x| matches!(x, EdgeImage::Edge(_))));
    }

    #[test]
    fn trivial_superedge_proper() {
        assert!(is_proper_superedge(&Network::trivial_superedge()).unwrap());
    }

    #[test]
    fn size_mismatch_rejected() {
        let p = petersen();
        let mut plan = SuperpositionPlan::trivial(&p).unwrap();
        plan.vertices[0].network = crate::constructions::families::build_x();
        assert!(superpose(&plan).is_err());
    }
}
