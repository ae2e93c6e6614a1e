//! Slow reference implementations, kept deliberately naive. The solvers are
//! tested for agreement with these on small graphs.

use crate::graph::{EdgeId, MultiGraph};

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

/// Components of the graph on the edges with `keep[e]`, as
/// `(vertex count, edge count)` per component.
fn component_sizes(g: &MultiGraph, keep: &[bool]) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut p: Vec<usize> = (0..n).collect();
    for (e, [a, b]) in g.edges() {
        if keep[e as usize] {
            let (x, y) = (find(&mut p, a as usize), find(&mut p, b as usize));
            p[x] = y;
        }
    }
    let mut size = vec![(0, 0); n];
    for v in 0..n {
        let r = find(&mut p, v);
        size[r].0 += 1;
    }
    for (e, [a, _]) in g.edges() {
        if keep[e as usize] {
            let r = find(&mut p, a as usize);
            size[r].1 += 1;
        }
    }
    size.into_iter().filter(|&(v, _)| v > 0).collect()
}

fn combinations(m: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        m: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..=m - (k - cur.len()) {
            cur.push(i);
            if rec(m, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    k <= m && rec(m, k, 0, &mut Vec::with_capacity(k), f)
}

/// Smallest cycle-separating edge cut of size at most `k_max`, by trying
/// every edge subset in order of size.
pub fn zeta_brute(g: &MultiGraph, k_max: usize) -> Option<usize> {
    let m = g.size();
    (1..=k_max.min(m)).find(|&k| {
        combinations(m, k, &mut |s| {
            let mut keep = vec![true; m];
            for &e in s {
                keep[e] = false;
            }
            component_sizes(g, &keep)
                .iter()
                .filter(|&&(v, e)| e >= v)
                .count()
                >= 2
        })
    })
}

/// Every perfect matching, found among all edge subsets of size `n / 2`.
pub fn perfect_matchings_brute(g: &MultiGraph) -> Vec<Vec<EdgeId>> {
    let n = g.order();
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }
    combinations(g.size(), n / 2, &mut |s| {
        let mut hit = vec![false; n];
        let ok = s.iter().all(|&e| {
            let [a, b] = g.ends(e as EdgeId);
            let fresh = !hit[a as usize] && !hit[b as usize];
            hit[a as usize] = true;
            hit[b as usize] = true;
            fresh
        });
        if ok {
            out.push(s.iter().map(|&e| e as EdgeId).collect());
        }
        false
    });
    out
}

/// Fewest odd components over the complements of all perfect matchings;
/// `None` without a perfect matching.
pub fn oddness_brute(g: &MultiGraph) -> Option<usize> {
    perfect_matchings_brute(g)
        .iter()
        .map(|m| {
            let mut keep = vec![true; g.size()];
            for &e in m {
                keep[e as usize] = false;
            }
            component_sizes(g, &keep)
                .iter()
                .filter(|&&(v, _)| v % 2 == 1)
                .count()
        })
        .min()
}

/// Plain backtracking over edges in id order, no memo and no cuts.
pub fn colourable_brute(g: &MultiGraph) -> bool {
    fn rec(g: &MultiGraph, e: usize, col: &mut [u8]) -> bool {
        if e == g.size() {
            return true;
        }
        let [a, b] = g.ends(e as EdgeId);
        for c in 1..=3 {
            let clash = [a, b].iter().any(|&v| {
                g.incident(v)
                    .iter()
                    .any(|&(_, f)| f as usize != e && col[f as usize] == c)
            });
            if !clash {
                col[e] = c;
                if rec(g, e + 1, col) {
                    return true;
                }
                col[e] = 0;
            }
        }
        false
    }
    rec(g, 0, &mut vec![0; g.size()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::petersen;

    #[test]
    fn petersen_reference_values() {
        let p = petersen();
        assert_eq!(zeta_brute(&p, 5), Some(5));
        assert_eq!(zeta_brute(&p, 4), None);
        assert_eq!(perfect_matchings_brute(&p).len(), 6);
        assert_eq!(oddness_brute(&p), Some(2));
        assert!(!colourable_brute(&p));
    }

    #[test]
    fn k4_reference_values() {
        let k4 =
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(zeta_brute(&k4, 6), None);
        assert_eq!(perfect_matchings_brute(&k4).len(), 3);
        assert_eq!(oddness_brute(&k4), Some(0));
        assert!(colourable_brute(&k4));
    }
}
