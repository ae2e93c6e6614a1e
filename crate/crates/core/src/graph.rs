//! Multigraphs with stable edge ids, networks with terminals, and the
//! editing primitives everything else is built from.

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type EdgeId = u32;

/// Undirected multigraph. Parallel edges are allowed, loops are not.
///
/// Vertex and edge ids are dense. Edits never mutate in place; they return a
/// fresh graph together with maps from old ids to new ones.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    edges: Vec<[Vertex; 2]>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            adj: vec![Vec::with_capacity(3); n],
            edges: Vec::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::with_capacity(3));
        (self.adj.len() - 1) as Vertex
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        if u == v {
            return Err(Error::Loop(u));
        }
        for x in [u, v] {
            if x as usize >= self.adj.len() {
                return Err(Error::NoVertex(x));
            }
        }
        let e = self.edges.len() as EdgeId;
        self.edges.push([u, v]);
        self.adj[u as usize].push((v, e));
        self.adj[v as usize].push((u, e));
        Ok(e)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn ends(&self, e: EdgeId) -> [Vertex; 2] {
        self.edges[e as usize]
    }

    #[inline]
    pub fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let [a, b] = self.edges[e as usize];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbour, edge)` pairs in insertion order.
    #[inline]
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, [Vertex; 2])> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as EdgeId, p))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len() as Vertex
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.adj[u as usize]
            .iter()
            .filter(|&&(w, _)| w == v)
            .count()
    }

    /// First edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.adj[u as usize]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    /// Some edge that has a parallel twin.
    pub fn parallel_edge(&self) -> Option<EdgeId> {
        for (u, a) in self.adj.iter().enumerate() {
            for (i, &(v, e)) in a.iter().enumerate() {
                if (v as usize) > u && a[..i].iter().any(|&(w, _)| w == v) {
                    return Some(e);
                }
            }
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_edge().is_none()
    }

    /// Edge list as `(u, v)` pairs, in id order.
    pub fn edge_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().map(|&[a, b]| (a, b)).collect()
    }

    /// Same graph with vertices renamed by `perm` (old id -> new id).
    /// Edge ids are preserved.
    pub fn relabel(&self, perm: &[Vertex]) -> MultiGraph {
        assert_eq!(perm.len(), self.order());
        let mut g = MultiGraph::new(self.order());
        for &[a, b] in &self.edges {
            g.add_edge(perm[a as usize], perm[b as usize])
                .expect("relabel keeps loops out");
        }
        g
    }

    /// Disjoint union; vertices and edges of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let off = self.order() as Vertex;
        let mut g = self.clone();
        for _ in 0..other.order() {
            g.add_vertex();
        }
        for &[a, b] in &other.edges {
            g.add_edge(a + off, b + off).expect("no loops in source");
        }
        g
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::NoVertex(v))
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if (e as usize) < self.size() {
            Ok(())
        } else {
            Err(Error::NoEdge(e))
        }
    }
}

/// Result of a structural edit.
#[derive(Clone, Debug)]
pub struct Edit {
    pub graph: MultiGraph,
    /// Old vertex id -> new vertex id, `None` for removed vertices.
    pub vertex_map: Vec<Option<Vertex>>,
    /// Old edge id -> new edge id, `None` for removed edges.
    pub edge_map: Vec<Option<EdgeId>>,
}

/// Drops the flagged vertices (with their edges) and edges, then appends
/// `extra` edges given in old vertex ids. Survivors keep their relative order.
pub fn rebuild(
    g: &MultiGraph,
    drop_v: &[bool],
    drop_e: &[bool],
    extra: &[(Vertex, Vertex)],
) -> Result<Edit> {
    let mut vertex_map = vec![None; g.order()];
    let mut next = 0;
    for v in 0..g.order() {
        if !drop_v.get(v).copied().unwrap_or(false) {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let mut out = MultiGraph::new(next as usize);
    let mut edge_map = vec![None; g.size()];
    for (e, [a, b]) in g.edges() {
        if drop_e.get(e as usize).copied().unwrap_or(false) {
            continue;
        }
        if let (Some(x), Some(y)) = (vertex_map[a as usize], vertex_map[b as usize]) {
            edge_map[e as usize] = Some(out.add_edge(x, y)?);
        }
    }
    for &(a, b) in extra {
        let x = vertex_map[a as usize].ok_or(Error::NoVertex(a))?;
        let y = vertex_map[b as usize].ok_or(Error::NoVertex(b))?;
        if x == y {
            return Err(Error::Loop(a));
        }
        out.add_edge(x, y)?;
    }
    Ok(Edit {
        graph: out,
        vertex_map,
        edge_map,
    })
}

pub fn delete_vertices(g: &MultiGraph, vs: &[Vertex]) -> Result<Edit> {
    let mut drop = vec![false; g.order()];
    for &v in vs {
        g.check_vertex(v)?;
        drop[v as usize] = true;
    }
    rebuild(g, &drop, &[], &[])
}

pub fn delete_edges(g: &MultiGraph, es: &[EdgeId]) -> Result<Edit> {
    let mut drop = vec![false; g.size()];
    for &e in es {
        g.check_edge(e)?;
        drop[e as usize] = true;
    }
    rebuild(g, &[], &drop, &[])
}

#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: MultiGraph,
    /// The new degree-2 vertex (always the last id).
    pub vertex: Vertex,
    /// `[e, f]`: edge `e` now ends at the new vertex, `f` is appended.
    pub halves: [EdgeId; 2],
}

/// Subdivides `e = ab`: `e` becomes `a w` and a new edge `w b` is appended.
pub fn subdivide(g: &MultiGraph, e: EdgeId) -> Result<Subdivision> {
    g.check_edge(e)?;
    let [a, b] = g.ends(e);
    let mut out = MultiGraph::new(g.order() + 1);
    let w = g.order() as Vertex;
    for (i, [x, y]) in g.edges() {
        if i == e {
            out.add_edge(a, w)?;
        } else {
            out.add_edge(x, y)?;
        }
    }
    let f = out.add_edge(w, b)?;
    Ok(Subdivision {
        graph: out,
        vertex: w,
        halves: [e, f],
    })
}

/// Removes a degree-2 vertex and joins its two neighbours by a new edge
/// (appended last).
pub fn suppress_degree2(g: &MultiGraph, v: Vertex) -> Result<Edit> {
    g.check_vertex(v)?;
    if g.degree(v) != 2 {
        return Err(Error::Degree {
            vertex: v,
            degree: g.degree(v),
            expected: "2",
        });
    }
    let inc = g.incident(v);
    let (x, y) = (inc[0].0, inc[1].0);
    if x == y {
        return Err(Error::Loop(x));
    }
    let mut drop = vec![false; g.order()];
    drop[v as usize] = true;
    rebuild(g, &drop, &[], &[(x, y)])
}

/// Merges the vertices of a circuit into one vertex (id = smallest circuit
/// vertex after compaction) and drops the circuit edges.
pub fn contract_circuit(g: &MultiGraph, c: &crate::circuits::Circuit) -> Result<Edit> {
    if !c.is_valid_in(g) {
        return Err(Error::pre("not a circuit of the graph"));
    }
    let keep = *c.vertices.iter().min().expect("nonempty circuit");
    let mut in_c = vec![false; g.order()];
    for &v in &c.vertices {
        in_c[v as usize] = true;
    }
    let mut drop_v = in_c.clone();
    drop_v[keep as usize] = false;
    let mut drop_e = vec![false; g.size()];
    for &e in &c.edges {
        drop_e[e as usize] = true;
    }
    let mut extra = Vec::new();
    for &v in &c.vertices {
        if v == keep {
            continue;
        }
        for &(w, e) in g.incident(v) {
            if !drop_e[e as usize] {
                let w = if in_c[w as usize] { keep } else { w };
                if w == keep {
                    return Err(Error::Loop(keep));
                }
                drop_e[e as usize] = true;
                extra.push((keep, w));
            }
        }
    }
    rebuild(g, &drop_v, &drop_e, &extra)
}

/// A graph together with an ordered list of degree-1 terminals, optionally
/// partitioned into connectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    graph: MultiGraph,
    terminals: Vec<Vertex>,
    connectors: Vec<Vec<Vertex>>,
}

impl Network {
    /// Checks the terminal and connector contract. An empty connector list
    /// means "not partitioned".
    pub fn new(
        graph: MultiGraph,
        terminals: Vec<Vertex>,
        connectors: Vec<Vec<Vertex>>,
    ) -> Result<Self> {
        let mut is_t = vec![false; graph.order()];
        for &t in &terminals {
            graph.check_vertex(t)?;
            if is_t[t as usize] {
                return Err(Error::pre(format!("terminal {t} listed twice")));
            }
            is_t[t as usize] = true;
        }
        for v in graph.vertices() {
            let want = if is_t[v as usize] { 1 } else { 3 };
            if graph.degree(v) != want {
                return Err(Error::Degree {
                    vertex: v,
                    degree: graph.degree(v),
                    expected: if want == 1 { "1 (terminal)" } else { "3" },
                });
            }
        }
        if !connectors.is_empty() {
            let mut seen = vec![false; graph.order()];
            let mut count = 0;
            for c in &connectors {
                for &t in c {
                    if !is_t.get(t as usize).copied().unwrap_or(false) || seen[t as usize] {
                        return Err(Error::pre(format!(
                            "connectors do not partition terminals at {t}"
                        )));
                    }
                    seen[t as usize] = true;
                    count += 1;
                }
            }
            if count != terminals.len() {
                return Err(Error::pre("connectors do not cover every terminal"));
            }
        }
        Ok(Network {
            graph,
            terminals,
            connectors,
        })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn terminals(&self) -> &[Vertex] {
        &self.terminals
    }

    pub fn connectors(&self) -> &[Vec<Vertex>] {
        &self.connectors
    }

    pub fn connector_sizes(&self) -> Vec<usize> {
        self.connectors.iter().map(Vec::len).collect()
    }

    pub fn nonterminal_count(&self) -> usize {
        self.graph.order() - self.terminals.len()
    }

    pub fn is_terminal(&self, v: Vertex) -> bool {
        self.terminals.contains(&v)
    }

    /// The edge at terminal `t`.
    pub fn terminal_edge(&self, t: Vertex) -> EdgeId {
        self.graph.incident(t)[0].1
    }

    pub fn terminal_edges(&self) -> Vec<EdgeId> {
        self.terminals
            .iter()
            .map(|&t| self.terminal_edge(t))
            .collect()
    }

    /// Same network with a new connector partition.
    pub fn with_connectors(self, connectors: Vec<Vec<Vertex>>) -> Result<Self> {
        Network::new(self.graph, self.terminals, connectors)
    }

    /// Same network with terminals listed in a new order.
    pub fn with_terminal_order(self, terminals: Vec<Vertex>) -> Result<Self> {
        let mut a = terminals.clone();
        let mut b = self.terminals.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::pre("terminal order is not a permutation"));
        }
        Network::new(self.graph, terminals, self.connectors)
    }

    /// Single nonterminal vertex with three pendant terminals, one per
    /// connector.
    pub fn trivial_supervertex() -> Network {
        let g = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        Network::new(g, vec![1, 2, 3], vec![vec![1], vec![2], vec![3]]).unwrap()
    }

    /// A single edge whose ends are both terminals.
    pub fn trivial_superedge() -> Network {
        let g = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        Network::new(g, vec![0, 1], vec![vec![0], vec![1]]).unwrap()
    }
}

/// Replaces `v` by one terminal per incident edge. Edge ids are unchanged,
/// vertices above `v` shift down by one and terminals are appended in the
/// order of `v`'s incidences.
pub fn split_off(g: &MultiGraph, v: Vertex) -> Result<Network> {
    g.check_vertex(v)?;
    let d = g.degree(v);
    if d != 2 && d != 3 {
        return Err(Error::Degree {
            vertex: v,
            degree: d,
            expected: "2 or 3",
        });
    }
    let shift = |x: Vertex| if x > v { x - 1 } else { x };
    let base = g.order() as Vertex - 1;
    let mut term_of_edge = vec![None; g.size()];
    let mut terminals = Vec::new();
    for (i, &(_, e)) in g.incident(v).iter().enumerate() {
        term_of_edge[e as usize] = Some(base + i as Vertex);
        terminals.push(base + i as Vertex);
    }
    let mut out = MultiGraph::new(g.order() - 1 + d);
    for (e, ends) in g.edges() {
        let [x, y] = ends.map(|u| match term_of_edge[e as usize] {
            Some(t) if u == v => t,
            _ => shift(u),
        });
        out.add_edge(x, y)?;
    }
    Network::new(out, terminals, Vec::new())
}

/// Outcome of gluing terminals: a network while terminals remain, a graph
/// once none do.
#[derive(Clone, Debug)]
pub enum Joined {
    Network(Network),
    Graph(MultiGraph),
}

impl Joined {
    pub fn into_graph(self) -> Result<MultiGraph> {
        match self {
            Joined::Graph(g) => Ok(g),
            Joined::Network(n) if n.terminals().is_empty() => Ok(n.graph),
            Joined::Network(n) => Err(Error::pre(format!(
                "{} terminals left unjoined",
                n.terminals().len()
            ))),
        }
    }

    pub fn into_network(self) -> Network {
        match self {
            Joined::Network(n) => n,
            Joined::Graph(g) => {
                Network::new(g, Vec::new(), Vec::new()).expect("closed graph is a 0-pole")
            }
        }
    }
}

/// Junction of terminal `ta` of `a` with terminal `tb` of `b`: both terminals
/// disappear and their neighbours are joined by one edge.
pub fn junction(a: &Network, ta: Vertex, b: &Network, tb: Vertex) -> Result<Joined> {
    let mut asm = Assembly::new();
    let pa = asm.add(a);
    let pb = asm.add(b);
    if !a.is_terminal(ta) {
        return Err(Error::NotTerminal(ta));
    }
    if !b.is_terminal(tb) {
        return Err(Error::NotTerminal(tb));
    }
    asm.join(asm.global(pa, ta), asm.global(pb, tb))?;
    Ok(asm.finish()?.joined())
}

/// Junction of two distinct terminals of one network.
pub fn self_junction(a: &Network, t1: Vertex, t2: Vertex) -> Result<Joined> {
    let mut asm = Assembly::new();
    let p = asm.add(a);
    asm.join(asm.global(p, t1), asm.global(p, t2))?;
    Ok(asm.finish()?.joined())
}

/// Collects networks into one disjoint union, records terminal junctions and
/// resolves them all at once.
#[derive(Clone, Debug, Default)]
pub struct Assembly {
    graph: MultiGraph,
    terminal: Vec<bool>,
    order: Vec<Vertex>,
    partner: Vec<Option<Vertex>>,
    offsets: Vec<Vertex>,
}

/// Handle for a network added to an [`Assembly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Part(usize);

#[derive(Clone, Debug)]
pub struct Assembled {
    pub network: Network,
    /// Union vertex id -> final vertex id (joined terminals map to `None`).
    pub vertex_map: Vec<Option<Vertex>>,
    /// Final edge id -> chain of union edge ids it replaces.
    pub chains: Vec<Vec<EdgeId>>,
    /// Union edge id -> final edge id.
    pub edge_map: Vec<EdgeId>,
}

impl Assembled {
    pub fn joined(self) -> Joined {
        if self.network.terminals().is_empty() {
            Joined::Graph(self.network.graph)
        } else {
            Joined::Network(self.network)
        }
    }
}

impl Assembly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, n: &Network) -> Part {
        let off = self.graph.order() as Vertex;
        self.graph = self.graph.disjoint_union(&n.graph);
        self.terminal.resize(self.graph.order(), false);
        self.partner.resize(self.graph.order(), None);
        for &t in &n.terminals {
            self.terminal[(t + off) as usize] = true;
            self.order.push(t + off);
        }
        self.offsets.push(off);
        Part(self.offsets.len() - 1)
    }

    /// Adds a bare graph with no terminals.
    pub fn add_graph(&mut self, g: &MultiGraph) -> Part {
        self.add(&Network::new(g.clone(), Vec::new(), Vec::new()).expect("cubic part"))
    }

    pub fn global(&self, p: Part, v: Vertex) -> Vertex {
        self.offsets[p.0] + v
    }

    pub fn union(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn join(&mut self, t1: Vertex, t2: Vertex) -> Result<()> {
        for t in [t1, t2] {
            if !self.terminal.get(t as usize).copied().unwrap_or(false) {
                return Err(Error::NotTerminal(t));
            }
            if self.partner[t as usize].is_some() {
                return Err(Error::pre(format!("terminal {t} already joined")));
            }
        }
        if t1 == t2 {
            return Err(Error::pre(format!("cannot join terminal {t1} to itself")));
        }
        self.partner[t1 as usize] = Some(t2);
        self.partner[t2 as usize] = Some(t1);
        Ok(())
    }

    /// Resolves every junction. Remaining terminals keep their relative order.
    pub fn finish(self) -> Result<Assembled> {
        let g = &self.graph;
        let joined = |v: Vertex| self.partner[v as usize].is_some();
        let mut vertex_map = vec![None; g.order()];
        let mut next = 0;
        for v in g.vertices() {
            if !joined(v) {
                vertex_map[v as usize] = Some(next);
                next += 1;
            }
        }
        let mut out = MultiGraph::new(next as usize);
        let mut edge_map = vec![EdgeId::MAX; g.size()];
        let mut chains = Vec::new();
        // Walks from edge `e` through vertex `v` while `v` is a joined
        // terminal; returns the far vertex and the edges passed.
        let walk = |mut e: EdgeId, mut v: Vertex, chain: &mut Vec<EdgeId>| -> Result<Vertex> {
            let start = e;
            while let Some(p) = self.partner[v as usize] {
                e = g.incident(p)[0].1;
                if e == start {
                    return Err(Error::pre("junctions close a chain with no vertex"));
                }
                chain.push(e);
                v = g.other(e, p);
            }
            Ok(v)
        };
        for (e, [a, b]) in g.edges() {
            if edge_map[e as usize] != EdgeId::MAX {
                continue;
            }
            let mut back = Vec::new();
            let x = walk(e, a, &mut back)?;
            let mut fwd = Vec::new();
            let y = walk(e, b, &mut fwd)?;
            let mut chain: Vec<EdgeId> = back.into_iter().rev().collect();
            chain.push(e);
            chain.extend(fwd);
            let (nx, ny) = (
                vertex_map[x as usize].unwrap(),
                vertex_map[y as usize].unwrap(),
            );
            if nx == ny {
                return Err(Error::Loop(nx));
            }
            let id = out.add_edge(nx, ny)?;
            for &c in &chain {
                edge_map[c as usize] = id;
            }
            chains.push(chain);
        }
        let terminals: Vec<Vertex> = self
            .order
            .iter()
            .filter(|&&t| !joined(t))
            .map(|&t| vertex_map[t as usize].unwrap())
            .collect();
        let network = Network::new(out, terminals, Vec::new())?;
        Ok(Assembled {
            network,
            vertex_map,
            chains,
            edge_map,
        })
    }
}

/// Degree contract checked by [`validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Every vertex has degree 3.
    Cubic,
    /// Every vertex has degree 1 (terminal) or 3.
    Network,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Vertex,
    pub degree: usize,
}

/// Every degree violation of the chosen contract; empty when it holds.
/// Loops cannot be represented, so they never appear here.
pub fn validate(g: &MultiGraph, mode: Mode) -> Vec<Violation> {
    g.vertices()
        .filter(|&v| {
            let d = g.degree(v);
            match mode {
                Mode::Cubic => d != 3,
                Mode::Network => d != 3 && d != 1,
            }
        })
        .map(|v| Violation {
            vertex: v,
            degree: g.degree(v),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn loops_rejected() {
        let mut g = MultiGraph::new(2);
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
    }

    #[test]
    fn subdivide_then_suppress_restores() {
        let g = k4();
        let s = subdivide(&g, 2).unwrap();
        assert_eq!(s.graph.order(), 5);
        assert_eq!(s.graph.degree(s.vertex), 2);
        let back = suppress_degree2(&s.graph, s.vertex).unwrap();
        assert!(back.graph.is_cubic());
        assert_eq!(back.graph.size(), 6);
    }

    #[test]
    fn split_and_rejoin() {
        let g = k4();
        let n = split_off(&g, 1).unwrap();
        assert_eq!(n.terminals().len(), 3);
        assert_eq!(n.nonterminal_count(), 3);
        let t = n.terminals().to_vec();
        let j = self_junction(&n, t[0], t[1]).unwrap().into_network();
        assert_eq!(j.terminals().len(), 1);
        assert!(validate(j.graph(), Mode::Network).is_empty());
    }

    #[test]
    fn junction_through_edge() {
        // trivial superedge glued between two pendant vertices of a path
        let e = Network::trivial_superedge();
        let p = Network::new(
            MultiGraph::from_edges(2, &[(0, 1)]).unwrap(),
            vec![0, 1],
            vec![],
        )
        .unwrap();
        let mut asm = Assembly::new();
        let a = asm.add(&p);
        let b = asm.add(&e);
        asm.join(asm.global(a, 1), asm.global(b, 0)).unwrap();
        let out = asm.finish().unwrap();
        assert_eq!(out.network.graph().size(), 1);
        assert_eq!(out.chains[0].len(), 2);
    }

    #[test]
    fn closed_terminal_chain_rejected() {
        let e = Network::trivial_superedge();
        assert!(self_junction(&e, 0, 1).is_err());
    }

    #[test]
    fn validate_reports_degree_two() {
        let g = delete_edges(&k4(), &[0]).unwrap().graph;
        let v = validate(&g, Mode::Cubic);
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| x.degree == 2));
    }

    #[test]
    fn contract_triangle() {
        let g = k4();
        let c = crate::circuits::Circuit::from_vertices(&g, &[0, 1, 2]).unwrap();
        let out = contract_circuit(&g, &c).unwrap().graph;
        assert_eq!(out.order(), 2);
        assert_eq!(out.multiplicity(0, 1), 3);
    }
}
