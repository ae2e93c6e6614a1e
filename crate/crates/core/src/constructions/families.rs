//! Snark families assembled from the Petersen networks: the oddness-4
//! snarks of order 28 and their extensions, rings of 4-poles, chains of
//! 7-poles and the superposed graphs `M_r`.

use super::blocks::{
    build_p2, build_p3, build_p4e, build_p4v, build_p5ev, build_p5vvv, flower_snark,
    split_vertices, subdivide_all,
};
use super::superposition::{
    incidence_ends, superpose, EdgeEnd, Superedge, Superposed, SuperpositionPlan, Supervertex,
};
use crate::canon::canonical_form;
use crate::circuits::girth;
use crate::connectivity::{cyclic_connectivity, is_cyclically_k_connected};
use crate::error::{Error, Result};
use crate::factors::oddness;
use crate::graph::{Assembly, EdgeId, MultiGraph, Network, Part, Vertex};
use crate::io::read_graph6_line;
use crate::structure::{edge_connectivity, is_bridgeless, is_two_connected};
use std::collections::BTreeMap;

/// Inserts a copy of the 2-pole `net` into each edge of `es`: the edge is
/// cut and its two halves are joined to the two terminals of the copy.
pub fn insert_two_poles(g: &MultiGraph, es: &[EdgeId], net: &Network) -> Result<MultiGraph> {
    if net.terminals().len() != 2 {
        return Err(Error::pre("inserted network must have two terminals"));
    }
    let (sub, vs) = subdivide_all(g, es)?;
    let cut = split_vertices(&sub, &vs)?;
    let mut asm = Assembly::new();
    let base = asm.add(&cut);
    for pair in cut.connectors() {
        let p = asm.add(net);
        for (i, &t) in pair.iter().enumerate() {
            asm.join(asm.global(base, t), asm.global(p, net.terminals()[i]))?;
        }
    }
    asm.finish()?.joined().into_graph()
}

/// Inserts a copy of `P_2` into each of the three edges at `v`.
pub fn gv_extension(g: &MultiGraph, v: Vertex) -> Result<MultiGraph> {
    g.check_vertex(v)?;
    if g.degree(v) != 3 {
        return Err(Error::Degree {
            vertex: v,
            degree: g.degree(v),
            expected: "3",
        });
    }
    let es: Vec<EdgeId> = g.incident(v).iter().map(|&(_, e)| e).collect();
    insert_two_poles(g, &es, &build_p2())
}

/// Even indices start at the Petersen graph, odd ones at `H_1`; each step of
/// two inserts `P_2` around vertex 0.
pub fn build_r(i: usize) -> Result<MultiGraph> {
    let mut g = if i % 2 == 0 { super::petersen() } else { h1() };
    for _ in 0..i / 2 {
        g = gv_extension(&g, 0)?;
    }
    Ok(g)
}

// Members of the order-28 search below, frozen so the families do not
// have to rerun it.
const H1_G6: &str = include_str!("h1.g6");
const H2_G6: &str = include_str!("h2.g6");

/// The oddness-4 snark of order 28 with cyclic connectivity 2.
pub fn h1() -> MultiGraph {
    read_graph6_line(H1_G6.trim(), 1).expect("bundled graph")
}

/// The oddness-4 snark of order 28 with cyclic connectivity 3.
pub fn h2() -> MultiGraph {
    read_graph6_line(H2_G6.trim(), 1).expect("bundled graph")
}

/// Every distinct 2-connected graph of oddness 4 obtained from three copies
/// of `P_3` and one extra vertex, sorted by canonical form.
pub fn build_h_candidates() -> Result<Vec<MultiGraph>> {
    let p3 = build_p3();
    let mut seen: BTreeMap<Vec<u8>, MultiGraph> = BTreeMap::new();
    let triples = subsets(9, 3);
    for triple in &triples {
        let rest: Vec<usize> = (0..9).filter(|i| !triple.contains(i)).collect();
        for pairing in pairings(&rest) {
            let mut asm = Assembly::new();
            let copies: Vec<Part> = (0..3).map(|_| asm.add(&p3)).collect();
            let hub = asm.add(&Network::trivial_supervertex());
            let term = |asm: &Assembly, i: usize| asm.global(copies[i / 3], p3.terminals()[i % 3]);
            for (j, &i) in triple.iter().enumerate() {
                asm.join(term(&asm, i), asm.global(hub, j as Vertex + 1))?;
            }
            for &(a, b) in &pairing {
                asm.join(term(&asm, a), term(&asm, b))?;
            }
            let Ok(g) = asm.finish().and_then(|d| d.joined().into_graph()) else {
                continue;
            };
            seen.entry(canonical_form(&g)).or_insert(g);
        }
    }
    let keep = crate::par::map(&seen.values().collect::<Vec<_>>(), |g| {
        is_two_connected(g) && oddness(g).map(|c| c.value == 4).unwrap_or(false)
    });
    Ok(seen
        .into_values()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect())
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut s: Vec<u32> = (0..k as u32).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(s.iter().map(|&x| x as usize).collect());
        if k == 0 || !crate::colouring::next_subset(&mut s, n as u32) {
            return out;
        }
    }
}

/// Perfect pairings of an even-sized list, the first element always paired
/// first.
pub(crate) fn pairings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in 1..items.len() {
        let rest: Vec<usize> = items[1..]
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != j)
            .map(|(_, &x)| x)
            .collect();
        for mut p in pairings(&rest) {
            p.insert(0, (items[0], items[j]));
            out.push(p);
        }
    }
    out
}

/// Result of an assembly whose surviving terminals are regrouped.
fn regroup(asm: Assembly, groups: &[Vec<Vertex>]) -> Result<Network> {
    let done = asm.finish()?;
    let conns: Vec<Vec<Vertex>> = groups
        .iter()
        .map(|grp| {
            grp.iter()
                .map(|&t| done.vertex_map[t as usize].expect("terminal survives"))
                .collect()
        })
        .collect();
    let terminals = conns.iter().flatten().copied().collect();
    let g = done.network.graph().clone();
    Network::new(g, terminals, conns)
}

fn join_pairs(asm: &mut Assembly, a: &[Vertex], b: &[Vertex], flip: bool) -> Result<()> {
    for i in 0..a.len() {
        let j = if flip { a.len() - 1 - i } else { i };
        asm.join(a[i], b[j])?;
    }
    Ok(())
}

/// Connector `c` of part `p` in union ids.
fn conn(asm: &Assembly, p: Part, n: &Network, c: usize) -> Vec<Vertex> {
    n.connectors()[c]
        .iter()
        .map(|&t| asm.global(p, t))
        .collect()
}

/// Two copies of `P_3` with their terminals joined in order: an 18-vertex
/// snark with a 3-edge cut. Every bijection of the terminals gives the same
/// graph up to isomorphism, since the Petersen graph permutes the
/// neighbours of a vertex arbitrarily.
pub fn double_p3() -> MultiGraph {
    let p = build_p3();
    let mut asm = Assembly::new();
    let a = asm.add(&p);
    let b = asm.add(&p);
    for &t in p.terminals() {
        let (x, y) = (asm.global(a, t), asm.global(b, t));
        asm.join(x, y).expect("fresh terminals");
    }
    asm.finish()
        .and_then(|x| x.joined().into_graph())
        .expect("closed graph")
}

/// `P_4^e` with its second pair joined to the first pair of `P_4^v`; the
/// free pairs are the first of `P_4^e` and the second of `P_4^v`.
pub fn build_n1() -> Network {
    let (e, v) = (build_p4e(), build_p4v());
    let mut asm = Assembly::new();
    let pe = asm.add(&e);
    let pv = asm.add(&v);
    let (a, b) = (conn(&asm, pe, &e, 1), conn(&asm, pv, &v, 0));
    join_pairs(&mut asm, &a, &b, false).expect("fresh terminals");
    let groups = [conn(&asm, pe, &e, 0), conn(&asm, pv, &v, 1)];
    regroup(asm, &groups).expect("valid 4-pole")
}

/// `P_4^e` with each pair joined to the first pair of its own copy of
/// `P_4^v`; the free pairs are the second pairs of the two copies.
pub fn build_n2() -> Network {
    let (e, v) = (build_p4e(), build_p4v());
    let mut asm = Assembly::new();
    let pe = asm.add(&e);
    let v1 = asm.add(&v);
    let v2 = asm.add(&v);
    for (c, pv) in [(0, v1), (1, v2)] {
        let (a, b) = (conn(&asm, pe, &e, c), conn(&asm, pv, &v, 0));
        join_pairs(&mut asm, &a, &b, false).expect("fresh terminals");
    }
    let groups = [conn(&asm, v1, &v, 1), conn(&asm, v2, &v, 1)];
    regroup(asm, &groups).expect("valid 4-pole")
}

/// Ring of 4-poles with the given link orientations: the second pair of
/// block `j` is joined to the first pair of block `j+1`, reversed when
/// `flips[j]` is set.
pub fn ring_join_with(blocks: &[Network], flips: &[bool]) -> Result<MultiGraph> {
    if blocks.is_empty() {
        return Err(Error::pre("ring needs at least one block"));
    }
    if flips.len() != blocks.len() {
        return Err(Error::pre("one orientation per link"));
    }
    for (i, b) in blocks.iter().enumerate() {
        if b.connector_sizes() != [2, 2] {
            return Err(Error::pre(format!(
                "block {i} is not a 4-pole with two pairs"
            )));
        }
    }
    let mut asm = Assembly::new();
    let parts: Vec<Part> = blocks.iter().map(|b| asm.add(b)).collect();
    let r = blocks.len();
    for j in 0..r {
        let k = (j + 1) % r;
        let a = conn(&asm, parts[j], &blocks[j], 1);
        let b = conn(&asm, parts[k], &blocks[k], 0);
        join_pairs(&mut asm, &a, &b, flips[j])?;
    }
    asm.finish()?.joined().into_graph()
}

/// [`ring_join_with`] using the lexicographically least bridgeless
/// orientation (no flips first).
pub fn ring_join(blocks: &[Network]) -> Result<MultiGraph> {
    ring_orientation(blocks).map(|(g, _)| g)
}

/// [`ring_join`] together with the orientation it picked.
pub fn ring_orientation(blocks: &[Network]) -> Result<(MultiGraph, Vec<bool>)> {
    let r = blocks.len();
    if r >= 20 {
        let flips = vec![false; r];
        return Ok((ring_join_with(blocks, &flips)?, flips));
    }
    for mask in 0u32..1 << r {
        let flips: Vec<bool> = (0..r).map(|j| mask >> (r - 1 - j) & 1 == 1).collect();
        let g = ring_join_with(blocks, &flips)?;
        if is_bridgeless(&g) {
            return Ok((g, flips));
        }
    }
    Err(Error::Construction("no bridgeless ring orientation".into()))
}

/// `P_5^vvv` with each pair joined to the pair of its own copy of `P_5^ev`.
/// Terminals: the single edge, then the two triples.
pub fn build_z() -> Network {
    let (c, e) = (build_p5vvv(), build_p5ev());
    let mut asm = Assembly::new();
    let pc = asm.add(&c);
    let e1 = asm.add(&e);
    let e2 = asm.add(&e);
    for (k, pe) in [(0, e1), (1, e2)] {
        let (a, b) = (conn(&asm, pc, &c, k), conn(&asm, pe, &e, 0));
        join_pairs(&mut asm, &a, &b, false).expect("fresh terminals");
    }
    let groups = [
        conn(&asm, pc, &c, 2),
        conn(&asm, e1, &e, 1),
        conn(&asm, e2, &e, 1),
    ];
    regroup(asm, &groups).expect("valid 7-pole")
}

/// How consecutive copies of `Z` are linked: `a` lists four of its seven
/// terminals, the other three form the second link; `a_perm` and `b_perm`
/// say which terminal of the next copy each one meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLinks {
    pub a: [usize; 4],
    pub a_perm: [usize; 4],
    pub b_perm: [usize; 3],
}

/// Links found by [`search_chain_links`], checked again in the tests.
pub const CHAIN_LINKS: ChainLinks = ChainLinks {
    a: [0, 1, 2, 4],
    a_perm: [0, 1, 2, 3],
    b_perm: [1, 0, 2],
};

/// Chain of `r` copies of `Z` (r even) joined around a circuit, links
/// alternating between the four-terminal and the three-terminal group.
pub fn chain_z_with(r: usize, links: &ChainLinks) -> Result<MultiGraph> {
    if r < 2 || r % 2 == 1 {
        return Err(Error::Param(format!(
            "Z-chain needs an even number of copies (7r terminals must pair up), got {r}"
        )));
    }
    let z = build_z();
    let ts = z.terminals();
    let b: Vec<usize> = (0..7).filter(|i| !links.a.contains(i)).collect();
    let mut asm = Assembly::new();
    let parts: Vec<Part> = (0..r).map(|_| asm.add(&z)).collect();
    for j in 0..r {
        let k = (j + 1) % r;
        let (from, perm): (Vec<usize>, Vec<usize>) = if j % 2 == 0 {
            (links.a.to_vec(), links.a_perm.to_vec())
        } else {
            (b.clone(), links.b_perm.to_vec())
        };
        for (i, &t) in from.iter().enumerate() {
            let u = from[perm[i]];
            asm.join(asm.global(parts[j], ts[t]), asm.global(parts[k], ts[u]))?;
        }
    }
    asm.finish()?.joined().into_graph()
}

pub fn chain_z(r: usize) -> Result<MultiGraph> {
    chain_z_with(r, &CHAIN_LINKS)
}

/// First link choice (in lexicographic order) for which the chain of two
/// copies has girth at least 5 and is cyclically 5-connected.
pub fn search_chain_links() -> Result<ChainLinks> {
    let mut cands = Vec::new();
    for a in subsets(7, 4) {
        for ap in permutations(4) {
            for bp in permutations(3) {
                cands.push(ChainLinks {
                    a: a.clone().try_into().unwrap(),
                    a_perm: ap.clone().try_into().unwrap(),
                    b_perm: bp.try_into().unwrap(),
                });
            }
        }
    }
    let ok = |l: &ChainLinks| -> bool {
        let Ok(g) = chain_z_with(2, l) else {
            return false;
        };
        girth(&g).unwrap_or(0) >= 5
            && is_bridgeless(&g)
            && is_cyclically_k_connected(&g, 5)
                .map(|d| d.holds)
                .unwrap_or(false)
    };
    for chunk in cands.chunks(64) {
        if let Some(l) = crate::par::find_first(chunk, |l| ok(l).then(|| l.clone())) {
            return Ok(l);
        }
    }
    Err(Error::Construction(
        "no cyclically 5-connected Z-chain".into(),
    ))
}

/// Permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                rec(cur, n, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// `L_r` with the copy of `P_3` each vertex comes from (`None` for the
/// vertex joining a triple).
#[derive(Clone, Debug)]
pub struct LGraph {
    pub graph: MultiGraph,
    pub copy: Vec<Option<usize>>,
}

/// `r` copies of `P_3` in a circuit, the leftover terminals paired up (plus
/// one triple on a new vertex for odd `r`). The first 3-edge-connected
/// grouping is used.
pub fn build_l(r: usize) -> Result<LGraph> {
    if r < 2 {
        return Err(Error::Param(format!(
            "L needs at least two copies, got {r}"
        )));
    }
    let p3 = build_p3();
    let loose: Vec<usize> = (0..r).collect();
    let groupings: Vec<(Option<[usize; 3]>, Vec<(usize, usize)>)> = if r % 2 == 0 {
        pairings(&loose).into_iter().map(|p| (None, p)).collect()
    } else {
        let mut out = Vec::new();
        for t in subsets(r, 3) {
            let rest: Vec<usize> = loose.iter().copied().filter(|i| !t.contains(i)).collect();
            for p in pairings(&rest) {
                out.push((Some([t[0], t[1], t[2]]), p));
            }
        }
        out
    };
    for (triple, pairs) in groupings {
        let mut asm = Assembly::new();
        let parts: Vec<Part> = (0..r).map(|_| asm.add(&p3)).collect();
        let t = |asm: &Assembly, i: usize, k: usize| asm.global(parts[i], p3.terminals()[k]);
        for i in 0..r {
            asm.join(t(&asm, i, 1), t(&asm, (i + 1) % r, 0))?;
        }
        for &(a, b) in &pairs {
            asm.join(t(&asm, a, 2), t(&asm, b, 2))?;
        }
        if let Some(tr) = triple {
            let hub = asm.add(&Network::trivial_supervertex());
            for (j, &i) in tr.iter().enumerate() {
                asm.join(t(&asm, i, 2), asm.global(hub, j as Vertex + 1))?;
            }
        }
        let size = p3.graph().order();
        let Ok(done) = asm.finish() else { continue };
        let g = done.network.graph().clone();
        if !g.is_cubic() || edge_connectivity(&g) < 3 {
            continue;
        }
        let mut copy = vec![None; g.order()];
        for (u, m) in done.vertex_map.iter().enumerate() {
            if let Some(x) = m {
                let c = u / size;
                copy[*x as usize] = (c < r).then_some(c);
            }
        }
        return Ok(LGraph { graph: g, copy });
    }
    Err(Error::Construction(format!(
        "no 3-connected grouping for L_{r}"
    )))
}

/// A circuit through `5r` vertices of `L_r`, five consecutive ones in each
/// copy of `P_3`, such that every copy minus the circuit's edges is a
/// forest. The first one in DFS order is returned as a vertex sequence.
pub fn find_l_circuit(l: &LGraph) -> Result<Vec<Vertex>> {
    let g = &l.graph;
    let r = l.copy.iter().flatten().max().map_or(0, |m| m + 1);
    let starts: Vec<Vertex> = g
        .vertices()
        .filter(|&v| l.copy[v as usize] == Some(0))
        .collect();
    for &s in &starts {
        let mut path = vec![s];
        let mut on = vec![false; g.order()];
        on[s as usize] = true;
        let mut visited = vec![false; r];
        visited[0] = true;
        if let Some(c) = circuit_dfs(l, r, &mut path, &mut on, &mut visited, 1) {
            return Ok(c);
        }
    }
    Err(Error::Construction("no admissible circuit in L".into()))
}

fn circuit_dfs(
    l: &LGraph,
    r: usize,
    path: &mut Vec<Vertex>,
    on: &mut [bool],
    visited: &mut [bool],
    seg: usize,
) -> Option<Vec<Vertex>> {
    let g = &l.graph;
    let u = *path.last().unwrap();
    let cu = l.copy[u as usize]?;
    if path.len() == 5 * r {
        let s = path[0];
        let closes = seg == 5
            && g.incident(u).iter().any(|&(w, _)| w == s)
            && l.copy[s as usize] != Some(cu);
        return (closes && forests_left(l, r, path)).then(|| path.clone());
    }
    for &(w, _) in g.incident(u) {
        if on[w as usize] {
            continue;
        }
        let Some(cw) = l.copy[w as usize] else {
            continue;
        };
        let next_seg = if cw == cu {
            if seg == 5 {
                continue;
            }
            seg + 1
        } else {
            if seg != 5 || visited[cw] {
                continue;
            }
            1
        };
        let fresh = cw != cu;
        path.push(w);
        on[w as usize] = true;
        if fresh {
            visited[cw] = true;
        }
        let found = circuit_dfs(l, r, path, on, visited, next_seg);
        path.pop();
        on[w as usize] = false;
        if fresh {
            visited[cw] = false;
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Every copy minus the circuit edges is acyclic.
fn forests_left(l: &LGraph, r: usize, c: &[Vertex]) -> bool {
    let g = &l.graph;
    let mut on_c = vec![false; g.size()];
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        on_c[g.edge_between(a, b).expect("circuit edge") as usize] = true;
    }
    // union-find over each copy's remaining internal edges
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let _ = r;
    for (e, [a, b]) in g.edges() {
        if on_c[e as usize] {
            continue;
        }
        let (ca, cb) = (l.copy[a as usize], l.copy[b as usize]);
        if ca.is_none() || ca != cb {
            continue;
        }
        let (x, y) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        if x == y {
            return false;
        }
        parent[x] = y;
    }
    true
}

/// Seven-pole supervertex with one nonterminal vertex `0`: pendant terminals
/// `1, 2, 3` and two through-edges `4-5`, `6-7`. Connectors `[1,4,6]`,
/// `[2,5,7]`, `[3]`.
pub fn build_x() -> Network {
    let g = MultiGraph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (6, 7)]).unwrap();
    Network::new(
        g,
        (1..8).collect(),
        vec![vec![1, 4, 6], vec![2, 5, 7], vec![3]],
    )
    .unwrap()
}

/// Supervertex with one nonterminal vertex whose first connector takes a
/// triple: one pendant edge plus a through-edge that turns back into the
/// same connector. Connector sizes (3, 1, 1).
pub fn build_fan() -> Network {
    let g = MultiGraph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap();
    Network::new(g, (1..6).collect(), vec![vec![1, 4, 5], vec![2], vec![3]]).unwrap()
}

/// Which vertex of `J_5` is split off together with `b_0`, and the order of
/// the terminals within each triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YChoice {
    pub other: Vertex,
    pub perm0: [usize; 3],
    pub perm1: [usize; 3],
}

/// `c_2`, terminals in incidence order. With it `M_2` has girth 6 and is
/// cyclically 6-connected.
pub const Y_CHOICE: YChoice = YChoice {
    other: 12,
    perm0: [0, 1, 2],
    perm1: [0, 1, 2],
};

/// Six-pole from `J_5` by splitting off `b_0` (on the 5-circuit) and a
/// vertex not adjacent to it; connectors are the two triples.
pub fn build_y_with(choice: &YChoice) -> Result<Network> {
    let j5 = flower_snark(5)?;
    let b0: Vertex = 5;
    let x = choice.other;
    j5.check_vertex(x)?;
    if x == b0 || j5.edge_between(b0, x).is_some() {
        return Err(Error::pre(format!("vertex {x} is b_0 or adjacent to it")));
    }
    let n = split_vertices(&j5, &[b0, x])?;
    let c = n.connectors();
    let c0: Vec<Vertex> = choice.perm0.iter().map(|&i| c[0][i]).collect();
    let c1: Vec<Vertex> = choice.perm1.iter().map(|&i| c[1][i]).collect();
    let ts = c0.iter().chain(&c1).copied().collect();
    let g = n.graph().clone();
    Network::new(g, ts, vec![c0, c1])
}

pub fn build_y() -> Network {
    build_y_with(&Y_CHOICE).expect("fixed choice is valid")
}

/// `L_r`, its circuit and the superposition plan producing `M_r`.
#[derive(Clone, Debug)]
pub struct MPlan {
    pub l: LGraph,
    pub circuit: Vec<Vertex>,
    pub plan: SuperpositionPlan,
}

pub fn m_plan(r: usize) -> Result<MPlan> {
    m_plan_with(r, &build_y())
}

pub fn m_plan_with(r: usize, y: &Network) -> Result<MPlan> {
    let l = build_l(r)?;
    let c = find_l_circuit(&l)?;
    let g = &l.graph;
    let mut plan = SuperpositionPlan::trivial(g)?;
    let len = c.len();
    let edge_of = |i: usize| {
        g.edge_between(c[i % len], c[(i + 1) % len])
            .expect("circuit edge")
    };
    let end_at = |e: EdgeId, v: Vertex| EdgeEnd {
        edge: e,
        side: u8::from(g.ends(e)[0] != v),
    };
    for i in 0..len {
        let v = c[i];
        let prev = edge_of(i + len - 1);
        let next = edge_of(i);
        let off = g
            .incident(v)
            .iter()
            .map(|&(_, e)| e)
            .find(|&e| e != prev && e != next)
            .expect("cubic");
        plan.vertices[v as usize] = Supervertex {
            network: build_x(),
            ends: [end_at(prev, v), end_at(next, v), end_at(off, v)],
        };
        plan.edges[next as usize] = Superedge {
            network: y.clone(),
            flipped: g.ends(next)[0] != v,
        };
    }
    Ok(MPlan {
        l,
        circuit: c,
        plan,
    })
}

pub fn build_m(r: usize) -> Result<MultiGraph> {
    Ok(superpose(&m_plan(r)?.plan)?.graph)
}

/// Petersen graph with edge 0 replaced by `Y` and fans at both its ends.
pub fn petersen_with_y_plan() -> Result<SuperpositionPlan> {
    let p = super::petersen();
    let mut plan = SuperpositionPlan::trivial(&p)?;
    let e: EdgeId = 0;
    for (side, &v) in p.ends(e).iter().enumerate() {
        let mut ends = incidence_ends(&p, v);
        let k = ends
            .iter()
            .position(|x| x.edge == e && x.side as usize == side)
            .expect("incident");
        ends.swap(0, k);
        plan.vertices[v as usize] = Supervertex {
            network: build_fan(),
            ends,
        };
    }
    plan.edges[e as usize] = Superedge {
        network: build_y(),
        flipped: false,
    };
    Ok(plan)
}

/// Girth at least 6 and cyclic 6-connectivity.
pub fn m2_is_sound(sup: &Superposed) -> bool {
    let g = &sup.graph;
    girth(g).unwrap_or(0) >= 6
        && is_cyclically_k_connected(g, 6)
            .map(|d| d.holds)
            .unwrap_or(false)
}

/// Cyclic connectivity, capped, as a plain number (0 when no cut exists).
pub fn zeta_value(g: &MultiGraph, cap: usize) -> Result<Option<usize>> {
    Ok(cyclic_connectivity(g, cap)?.exact())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_counts() {
        assert_eq!(pairings(&[0, 1, 2, 3, 4, 5]).len(), 15);
        assert_eq!(subsets(9, 3).len(), 84);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn x_and_fan_shapes() {
        assert_eq!(build_x().nonterminal_count(), 1);
        assert_eq!(build_x().connector_sizes(), vec![3, 3, 1]);
        assert_eq!(build_fan().connector_sizes(), vec![3, 1, 1]);
    }

    #[test]
    fn four_poles() {
        assert_eq!(build_n1().nonterminal_count(), 18);
        assert_eq!(build_n2().nonterminal_count(), 26);
        assert_eq!(build_z().nonterminal_count(), 25);
        assert_eq!(build_z().connector_sizes(), vec![1, 3, 3]);
    }

    #[test]
    fn odd_chain_rejected() {
        assert!(matches!(chain_z(3), Err(Error::Param(_))));
    }

    #[test]
    fn l_orders() {
        assert_eq!(build_l(2).unwrap().graph.order(), 18);
        assert_eq!(build_l(3).unwrap().graph.order(), 28);
    }
}
