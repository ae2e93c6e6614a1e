//! Bucket elimination for 3-edge-colouring. Every edge is a variable over
//! {1, 2, 3}, every vertex a table saying its edges differ. Eliminating an
//! edge joins the tables mentioning it and projects it out; the tables kept
//! per step let a colouring be read back in reverse order.
//!
//! Tables are bitsets over `3^k` assignments, so the work is exponential in
//! the largest joined scope only. When that would exceed the cap the caller
//! gets `None` and falls back to search.

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::{EdgeId, MultiGraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest joined scope attempted (3^15 assignments, about 1.8 MB).
pub const SCOPE_CAP: usize = 15;

#[derive(Clone, Debug)]
struct Table {
    scope: Vec<EdgeId>,
    bits: Vec<u64>,
}

impl Table {
    fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn is_full(&self) -> bool {
        let n = 3usize.pow(self.scope.len() as u32);
        (0..n).all(|i| self.get(i))
    }

    fn lookup(&self, colour: &[Colour]) -> bool {
        let mut i = 0;
        for &e in self.scope.iter().rev() {
            i = i * 3 + (colour[e as usize] as usize - 1);
        }
        self.get(i)
    }
}

fn vertex_table(es: &[EdgeId]) -> Table {
    let k = es.len();
    let n = 3usize.pow(k as u32);
    let mut bits = vec![0u64; n.div_ceil(64)];
    for i in 0..n {
        let mut seen = 0u8;
        let mut x = i;
        let mut ok = true;
        for _ in 0..k {
            let d = 1u8 << (x % 3);
            x /= 3;
            ok &= seen & d == 0;
            seen |= d;
        }
        if ok {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    Table {
        scope: es.to_vec(),
        bits,
    }
}

/// Joins `bucket` and projects out `x`.
fn eliminate(bucket: &[&Table], x: EdgeId) -> Table {
    let mut scope: Vec<EdgeId> = bucket
        .iter()
        .flat_map(|t| t.scope.iter().copied())
        .filter(|&e| e != x)
        .collect();
    scope.sort_unstable();
    scope.dedup();
    let k = scope.len();
    let n = 3usize.pow(k as u32);
    // stride of each output digit and of x within each table
    let strides: Vec<Vec<usize>> = bucket
        .iter()
        .map(|t| {
            scope
                .iter()
                .map(|e| {
                    t.scope
                        .iter()
                        .position(|f| f == e)
                        .map_or(0, |p| 3usize.pow(p as u32))
                })
                .collect()
        })
        .collect();
    let xs: Vec<usize> = bucket
        .iter()
        .map(|t| {
            3usize.pow(
                t.scope
                    .iter()
                    .position(|&f| f == x)
                    .expect("bucket mentions x") as u32,
            )
        })
        .collect();
    let mut idx = vec![0usize; bucket.len()];
    let mut digits = vec![0u8; k];
    let mut bits = vec![0u64; n.div_ceil(64)];
    for out in 0..n {
        let ok = (0..3).any(|c| {
            bucket
                .iter()
                .enumerate()
                .all(|(j, t)| t.get(idx[j] + c * xs[j]))
        });
        if ok {
            bits[out / 64] |= 1 << (out % 64);
        }
        // odometer step
        for d in 0..k {
            if digits[d] < 2 {
                digits[d] += 1;
                for (j, s) in strides.iter().enumerate() {
                    idx[j] += s[d];
                }
                break;
            }
            digits[d] = 0;
            for (j, s) in strides.iter().enumerate() {
                idx[j] -= 2 * s[d];
            }
        }
    }
    Table { scope, bits }
}

/// Elimination order on the edges' interaction graph (edges meeting at a
/// vertex interact) and its width, the largest scope it ever creates.
/// Min-fill and min-degree are both tried; when neither is narrow, min-fill
/// is rerun with ties broken by seeded shuffles and the narrowest plan wins.
pub fn plan(g: &MultiGraph) -> (Vec<EdgeId>, usize) {
    let a = symbolic(g, true);
    let b = symbolic(g, false);
    let mut best = if b.1 < a.1 { b } else { a };
    if best.1 > NARROW_PLAN {
        let mut rng = ChaCha8Rng::seed_from_u64(g.size() as u64);
        let mut jitter: Vec<usize> = (0..g.size()).collect();
        for _ in 0..RESTARTS {
            jitter.shuffle(&mut rng);
            let p = symbolic_impl(g, true, &jitter);
            if p.1 < best.1 {
                best = p;
            }
            if best.1 <= NARROW_PLAN {
                break;
            }
        }
    }
    best
}

const NARROW_PLAN: usize = 10;
const RESTARTS: usize = 64;

fn symbolic(g: &MultiGraph, min_fill: bool) -> (Vec<EdgeId>, usize) {
    symbolic_impl(g, min_fill, &[])
}

fn symbolic_impl(g: &MultiGraph, min_fill: bool, jitter: &[usize]) -> (Vec<EdgeId>, usize) {
    let m = g.size();
    let mut adj: Vec<Vec<bool>> = vec![vec![false; m]; m];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); m];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<bool>>, nbrs: &mut Vec<Vec<usize>>| {
        if a != b && !adj[a][b] {
            adj[a][b] = true;
            adj[b][a] = true;
            nbrs[a].push(b);
            nbrs[b].push(a);
        }
    };
    for v in g.vertices() {
        let inc = g.incident(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                link(inc[i].1 as usize, inc[j].1 as usize, &mut adj, &mut nbrs);
            }
        }
    }
    let mut alive = vec![true; m];
    let mut order = Vec::with_capacity(m);
    let mut width = 0;
    for _ in 0..m {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for x in 0..m {
            if !alive[x] {
                continue;
            }
            let ns = &nbrs[x];
            let deg = ns.len();
            let fill = if min_fill {
                let mut f = 0;
                for i in 0..deg {
                    for j in i + 1..deg {
                        f += usize::from(!adj[ns[i]][ns[j]]);
                    }
                }
                f
            } else {
                deg
            };
            let key = (fill, deg, jitter.get(x).copied().unwrap_or(0), x);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (_, deg, _, x) = best.expect("a live edge remains");
        width = width.max(deg);
        alive[x] = false;
        order.push(x as EdgeId);
        let ns = std::mem::take(&mut nbrs[x]);
        for &y in &ns {
            nbrs[y].retain(|&z| z != x);
        }
        for i in 0..ns.len() {
            for j in i + 1..ns.len() {
                link(ns[i], ns[j], &mut adj, &mut nbrs);
            }
        }
    }
    (order, width)
}

/// `Some(Some(c))` with a colouring, `Some(None)` when `g` is uncolourable,
/// `None` when some step would exceed [`SCOPE_CAP`]. `g` must be subcubic.
pub fn colour(g: &MultiGraph) -> Option<Option<EdgeColouring>> {
    let m = g.size();
    let mut tables: Vec<Option<Table>> = Vec::new();
    let mut mentions: Vec<Vec<usize>> = vec![Vec::new(); m];
    let push = |t: Table, tables: &mut Vec<Option<Table>>, mentions: &mut Vec<Vec<usize>>| {
        let id = tables.len();
        for &e in &t.scope {
            mentions[e as usize].push(id);
        }
        tables.push(Some(t));
    };
    for v in g.vertices() {
        let es: Vec<EdgeId> = g.incident(v).iter().map(|&(_, e)| e).collect();
        if es.len() >= 2 {
            push(vertex_table(&es), &mut tables, &mut mentions);
        }
    }
    let (order, width) = plan(g);
    if width > SCOPE_CAP {
        return None;
    }
    let mut buckets: Vec<(EdgeId, Vec<Table>)> = Vec::with_capacity(m);
    for x in order {
        let ids: Vec<usize> = mentions[x as usize]
            .iter()
            .copied()
            .filter(|&t| tables[t].is_some())
            .collect();
        let bucket: Vec<Table> = ids.iter().map(|&t| tables[t].take().unwrap()).collect();
        if !bucket.is_empty() {
            let refs: Vec<&Table> = bucket.iter().collect();
            let t = eliminate(&refs, x);
            if t.scope.is_empty() {
                if !t.get(0) {
                    return Some(None);
                }
            } else if t.is_empty() {
                return Some(None);
            } else if !t.is_full() {
                push(t, &mut tables, &mut mentions);
            }
        }
        buckets.push((x, bucket));
    }
    let mut colour = vec![0 as Colour; m];
    for (x, bucket) in buckets.iter().rev() {
        let c = (1..=3)
            .find(|&c| {
                colour[*x as usize] = c;
                bucket.iter().all(|t| t.lookup(&colour))
            })
            .expect("elimination kept a consistent value");
        colour[*x as usize] = c;
    }
    Some(Some(EdgeColouring(colour)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_and_theta() {
        let k4 =
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = colour(&k4).unwrap().unwrap();
        assert!(c.is_proper(&k4));
        let theta = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(colour(&theta).unwrap().unwrap().is_proper(&theta));
    }

    #[test]
    fn petersen_uncolourable() {
        let p = crate::constructions::petersen();
        assert!(colour(&p).unwrap().is_none());
    }
}
