//! Components, bridges and unit-capacity edge flows.

use crate::graph::{EdgeId, MultiGraph, Vertex};
use std::collections::VecDeque;

pub const NONE: u32 = u32::MAX;

/// Component id per vertex, ignoring edges flagged in `dead_edge`.
pub fn components_masked(g: &MultiGraph, dead_edge: Option<&[bool]>) -> (Vec<u32>, usize) {
    let mut comp = vec![NONE; g.order()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in g.vertices() {
        if comp[s as usize] != NONE {
            continue;
        }
        comp[s as usize] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &(w, e) in g.incident(u) {
                if dead_edge.is_some_and(|d| d[e as usize]) {
                    continue;
                }
                if comp[w as usize] == NONE {
                    comp[w as usize] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (comp, count as usize)
}

pub fn components(g: &MultiGraph) -> (Vec<u32>, usize) {
    components_masked(g, None)
}

pub fn is_connected(g: &MultiGraph) -> bool {
    g.order() == 0 || components(g).1 == 1
}

/// Bridges in increasing id order, ignoring edges flagged in `dead_edge`.
pub fn bridges_masked(g: &MultiGraph, dead_edge: Option<&[bool]>) -> Vec<EdgeId> {
    let n = g.order();
    let mut disc = vec![NONE; n];
    let mut low = vec![0u32; n];
    let mut out = Vec::new();
    let mut time = 0u32;
    // (vertex, edge used to enter, next incidence index)
    let mut stack: Vec<(Vertex, EdgeId, usize)> = Vec::new();
    for s in g.vertices() {
        if disc[s as usize] != NONE {
            continue;
        }
        disc[s as usize] = time;
        low[s as usize] = time;
        time += 1;
        stack.push((s, NONE, 0));
        while let Some(&mut (u, pe, ref mut i)) = stack.last_mut() {
            let inc = g.incident(u);
            if *i < inc.len() {
                let (w, e) = inc[*i];
                *i += 1;
                if e == pe || dead_edge.is_some_and(|d| d[e as usize]) {
                    continue;
                }
                if disc[w as usize] == NONE {
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[u as usize] = low[u as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                    if low[u as usize] > disc[p as usize] {
                        out.push(pe);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn bridges(g: &MultiGraph) -> Vec<EdgeId> {
    bridges_masked(g, None)
}

pub fn is_bridgeless(g: &MultiGraph) -> bool {
    bridges(g).is_empty()
}

/// Connected and bridgeless. For graphs of maximum degree 3 this is the same
/// as 2-connectedness.
pub fn is_two_connected(g: &MultiGraph) -> bool {
    g.order() >= 2 && is_connected(g) && is_bridgeless(g)
}

/// Edges with exactly one end in `side`.
pub fn boundary(g: &MultiGraph, side: &[bool]) -> Vec<EdgeId> {
    g.edges()
        .filter(|&(_, [a, b])| side[a as usize] != side[b as usize])
        .map(|(e, _)| e)
        .collect()
}

/// Reusable buffers for unit-capacity max-flow between vertex sets.
///
/// Each undirected edge is a pair of opposite arcs of capacity one, which is
/// the usual encoding of an undirected unit network.
#[derive(Clone, Debug)]
pub struct FlowWorkspace {
    head: Vec<Vertex>,
    cap: Vec<u8>,
    // arcs leaving each vertex: arc ids 2e (a->b) and 2e+1 (b->a)
    out: Vec<Vec<u32>>,
    mark: Vec<u8>,
    pred: Vec<u32>,
    seen: Vec<u32>,
    stamp: u32,
    queue: VecDeque<Vertex>,
}

const SRC: u8 = 1;
const SNK: u8 = 2;

impl FlowWorkspace {
    pub fn new(g: &MultiGraph) -> Self {
        let mut head = Vec::with_capacity(2 * g.size());
        let mut out = vec![Vec::with_capacity(3); g.order()];
        for (e, [a, b]) in g.edges() {
            head.push(b);
            head.push(a);
            out[a as usize].push(2 * e);
            out[b as usize].push(2 * e + 1);
        }
        FlowWorkspace {
            cap: vec![1; head.len()],
            head,
            out,
            mark: vec![0; g.order()],
            pred: vec![NONE; g.order()],
            seen: vec![0; g.order()],
            stamp: 0,
            queue: VecDeque::new(),
        }
    }

    /// Max-flow value from `src` to `snk`, stopping once it exceeds `limit`.
    /// The sets must be disjoint.
    pub fn flow(&mut self, src: &[Vertex], snk: &[Vertex], limit: usize) -> usize {
        self.cap.iter_mut().for_each(|c| *c = 1);
        for &v in src {
            self.mark[v as usize] = SRC;
        }
        for &v in snk {
            self.mark[v as usize] = SNK;
        }
        let mut value = 0;
        while value <= limit && self.augment(src) {
            value += 1;
        }
        for &v in src.iter().chain(snk) {
            self.mark[v as usize] = 0;
        }
        value
    }

    fn next_stamp(&mut self) {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
    }

    fn augment(&mut self, src: &[Vertex]) -> bool {
        self.next_stamp();
        let st = self.stamp;
        self.queue.clear();
        for &s in src {
            self.seen[s as usize] = st;
            self.pred[s as usize] = NONE;
            self.queue.push_back(s);
        }
        while let Some(u) = self.queue.pop_front() {
            for i in 0..self.out[u as usize].len() {
                let a = self.out[u as usize][i];
                if self.cap[a as usize] == 0 {
                    continue;
                }
                let w = self.head[a as usize];
                if self.seen[w as usize] == st {
                    continue;
                }
                self.seen[w as usize] = st;
                self.pred[w as usize] = a;
                if self.mark[w as usize] == SNK {
                    let mut x = w;
                    while self.pred[x as usize] != NONE {
                        let a = self.pred[x as usize];
                        self.cap[a as usize] -= 1;
                        self.cap[(a ^ 1) as usize] += 1;
                        x = self.head[(a ^ 1) as usize];
                    }
                    return true;
                }
                self.queue.push_back(w);
            }
        }
        false
    }

    /// Flow value plus the source side of a minimum cut, when the value is
    /// at most `limit`.
    pub fn min_cut(
        &mut self,
        src: &[Vertex],
        snk: &[Vertex],
        limit: usize,
    ) -> Option<(usize, Vec<bool>)> {
        self.cap.iter_mut().for_each(|c| *c = 1);
        for &v in src {
            self.mark[v as usize] = SRC;
        }
        for &v in snk {
            self.mark[v as usize] = SNK;
        }
        let mut value = 0;
        while value <= limit && self.augment(src) {
            value += 1;
        }
        let result = if value <= limit {
            // the last failed search marked exactly the residual-reachable set
            let st = self.stamp;
            Some((value, self.seen.iter().map(|&s| s == st).collect()))
        } else {
            None
        };
        for &v in src.iter().chain(snk) {
            self.mark[v as usize] = 0;
        }
        result
    }
}

/// Minimum number of edges whose removal disconnects `g`; 0 when already
/// disconnected.
pub fn edge_connectivity(g: &MultiGraph) -> usize {
    if g.order() <= 1 {
        return 0;
    }
    if !is_connected(g) {
        return 0;
    }
    let mut ws = FlowWorkspace::new(g);
    let mut best = usize::MAX;
    for t in 1..g.order() as Vertex {
        let cap = best.saturating_sub(1);
        let f = ws.flow(&[0], &[t], cap);
        best = best.min(f);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bridge_between_triangles() {
        let g =
            MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
                .unwrap();
        assert_eq!(bridges(&g), vec![6]);
        assert_eq!(edge_connectivity(&g), 1);
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(bridges(&g).is_empty());
        assert_eq!(edge_connectivity(&g), 2);
    }

    #[test]
    fn k4_flow() {
        let g =
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut ws = FlowWorkspace::new(&g);
        assert_eq!(ws.flow(&[0], &[1], 10), 3);
        assert_eq!(ws.flow(&[0, 1], &[2, 3], 10), 4);
        let (v, side) = ws.min_cut(&[0], &[3], 5).unwrap();
        assert_eq!(v, 3);
        assert_eq!(boundary(&g, &side).len(), 3);
    }
}
