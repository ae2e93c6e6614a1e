//! Canonical labelling by colour refinement plus individualisation.
//!
//! The search tree is explored completely (no automorphism pruning) and the
//! lexicographically least edge encoding over all leaves is kept. This is
//! exact and fast enough for the graph sizes this crate deals with.

use crate::graph::{MultiGraph, Vertex};
use sha2::{Digest, Sha256};

/// Byte string that is equal for two graphs iff they are isomorphic,
/// counting parallel edge multiplicities.
pub fn canonical_form(g: &MultiGraph) -> Vec<u8> {
    let n = g.order();
    let mut nbrs: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| g.incident(v).iter().map(|&(w, _)| w).collect())
        .collect();
    for a in &mut nbrs {
        a.sort_unstable();
    }
    let mut cell = vec![0u32; n];
    // initial partition by degree
    let mut by_deg: Vec<Vertex> = g.vertices().collect();
    by_deg.sort_by_key(|&v| (g.degree(v), v));
    assign_cells(&mut cell, &by_deg, |v| g.degree(v) as u64);
    refine(&nbrs, &mut cell);
    let mut best: Option<Vec<u8>> = None;
    search(g, &nbrs, &cell, &mut best);
    best.unwrap_or_else(|| encode(g, &cell))
}

/// Hex SHA-256 of the canonical form, used as a cache key.
pub fn canonical_key(g: &MultiGraph) -> String {
    hex::encode(Sha256::digest(canonical_form(g)))
}

pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Cells are named by the position of their first member in the ordering,
/// which keeps the names independent of vertex ids.
fn assign_cells<K: Ord + Copy>(cell: &mut [u32], sorted: &[Vertex], key: impl Fn(Vertex) -> K) {
    let mut start = 0;
    for i in 0..sorted.len() {
        if i > 0 && key(sorted[i]) != key(sorted[i - 1]) {
            start = i;
        }
        cell[sorted[i] as usize] = start as u32;
    }
}

fn cell_count(cell: &[u32]) -> usize {
    let mut seen = vec![false; cell.len()];
    cell.iter()
        .filter(|&&c| !std::mem::replace(&mut seen[c as usize], true))
        .count()
}

fn refine(nbrs: &[Vec<Vertex>], cell: &mut [u32]) {
    let n = cell.len();
    let mut count = cell_count(cell);
    let mut sig: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    loop {
        for v in 0..n {
            let s = &mut sig[v];
            s.clear();
            s.push(cell[v]);
            let start = s.len();
            s.extend(nbrs[v].iter().map(|&w| cell[w as usize]));
            s[start..].sort_unstable();
        }
        order.sort_by(|&a, &b| sig[a as usize].cmp(&sig[b as usize]));
        let mut start = 0;
        for i in 0..n {
            if i > 0 && sig[order[i] as usize] != sig[order[i - 1] as usize] {
                start = i;
            }
            cell[order[i] as usize] = start as u32;
        }
        let c = cell_count(cell);
        if c == count {
            return;
        }
        count = c;
    }
}

fn search(g: &MultiGraph, nbrs: &[Vec<Vertex>], cell: &[u32], best: &mut Option<Vec<u8>>) {
    let n = cell.len();
    let mut size = vec![0u32; n];
    for &c in cell {
        size[c as usize] += 1;
    }
    // first smallest non-singleton cell, by position
    let target = (0..n)
        .filter(|&c| size[c] > 1)
        .min_by_key(|&c| (size[c], c));
    let Some(target) = target else {
        let code = encode(g, cell);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let members: Vec<Vertex> = (0..n as Vertex)
        .filter(|&v| cell[v as usize] == target as u32)
        .collect();
    for &v in &members {
        let mut child = cell.to_vec();
        for &u in &members {
            if u != v {
                child[u as usize] = target as u32 + 1;
            }
        }
        refine(nbrs, &mut child);
        search(g, nbrs, &child, best);
    }
}

fn encode(g: &MultiGraph, label: &[u32]) -> Vec<u8> {
    let mut pairs: Vec<(u32, u32)> = g
        .edges()
        .map(|(_, [a, b])| {
            let (x, y) = (label[a as usize], label[b as usize]);
            (x.min(y), x.max(y))
        })
        .collect();
    pairs.sort_unstable();
    let mut out = Vec::with_capacity(8 + 8 * pairs.len());
    out.extend((g.order() as u32).to_be_bytes());
    out.extend((g.size() as u32).to_be_bytes());
    for (x, y) in pairs {
        out.extend(x.to_be_bytes());
        out.extend(y.to_be_bytes());
    }
    out
}

/// Vertex permutation (old id -> new id) that realises the canonical form.
pub fn canonical_labelling(g: &MultiGraph) -> Vec<Vertex> {
    let target = canonical_form(g);
    let n = g.order();
    let mut nbrs: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|v| g.incident(v).iter().map(|&(w, _)| w).collect())
        .collect();
    for a in &mut nbrs {
        a.sort_unstable();
    }
    let mut cell = vec![0u32; n];
    let mut by_deg: Vec<Vertex> = g.vertices().collect();
    by_deg.sort_by_key(|&v| (g.degree(v), v));
    assign_cells(&mut cell, &by_deg, |v| g.degree(v) as u64);
    refine(&nbrs, &mut cell);
    find_leaf(g, &nbrs, &cell, &target).unwrap_or(cell)
}

fn find_leaf(
    g: &MultiGraph,
    nbrs: &[Vec<Vertex>],
    cell: &[u32],
    target: &[u8],
) -> Option<Vec<u32>> {
    let n = cell.len();
    let mut size = vec![0u32; n];
    for &c in cell {
        size[c as usize] += 1;
    }
    let Some(t) = (0..n)
        .filter(|&c| size[c] > 1)
        .min_by_key(|&c| (size[c], c))
    else {
        return (encode(g, cell) == target).then(|| cell.to_vec());
    };
    let members: Vec<Vertex> = (0..n as Vertex)
        .filter(|&v| cell[v as usize] == t as u32)
        .collect();
    for &v in &members {
        let mut child = cell.to_vec();
        for &u in &members {
            if u != v {
                child[u as usize] = t as u32 + 1;
            }
        }
        refine(nbrs, &mut child);
        if let Some(l) = find_leaf(g, nbrs, &child, target) {
            return Some(l);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_matters() {
        let a = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let b = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn k33_vs_prism() {
        let k33 = MultiGraph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let prism = MultiGraph::from_edges(
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
        assert!(!are_isomorphic(&k33, &prism));
        let perm = [5, 3, 1, 0, 2, 4];
        assert!(are_isomorphic(&k33, &k33.relabel(&perm)));
    }

    #[test]
    fn labelling_reproduces_form() {
        let prism = MultiGraph::from_edges(
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
        let lab = canonical_labelling(&prism);
        assert_eq!(encode(&prism, &lab), canonical_form(&prism));
    }
}
