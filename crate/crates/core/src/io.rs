//! graph6 for simple graphs and a plain edge-list text format for multigraphs.
//!
//! The edge-list format is one or more records, each an `n m` header line
//! followed by `m` lines `u v`. Repeated pairs encode parallel edges. Blank
//! lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

const HEADER: &str = ">>graph6<<";

fn perr(line: usize, offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        offset,
        msg: msg.into(),
    }
}

/// Parses one graph6 string (optional `>>graph6<<` header, surrounding
/// whitespace ignored). `line` is only used in error messages.
pub fn read_graph6_line(s: &str, line: usize) -> Result<MultiGraph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let (s, base) = match s.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (s, 0),
    };
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(perr(line, base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(perr(
                line,
                base + i,
                format!("byte {b:#x} outside graph6 range"),
            ));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(perr(line, base, "truncated size field"));
        }
        (
            bytes[1..4]
                .iter()
                .fold(0usize, |a, &b| (a << 6) | (b - 63) as usize),
            4,
        )
    } else {
        if bytes.len() < 8 {
            return Err(perr(line, base, "truncated size field"));
        }
        (
            bytes[2..8]
                .iter()
                .fold(0usize, |a, &b| (a << 6) | (b - 63) as usize),
            8,
        )
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(perr(
            line,
            base + pos,
            format!(
                "expected {need} data bytes for {n} vertices, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut g = MultiGraph::new(n);
    let mut k = 0;
    let mut cur = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                cur = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if (cur >> left) & 1 == 1 {
                g.add_edge(i as u32, j as u32)?;
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, bits);
    if left > 0 && cur & ((1 << left) - 1) != 0 {
        return Err(perr(line, base + pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

/// graph6 encoding without header. Multigraphs are rejected.
pub fn write_graph6(g: &MultiGraph) -> Result<String> {
    if let Some(e) = g.parallel_edge() {
        return Err(Error::MultiEdge(e));
    }
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for sh in [12, 6, 0] {
            out.push(((n >> sh) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for sh in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> sh) & 63) as u8 + 63);
        }
    }
    let mut adj = vec![false; n * n];
    for (_, [a, b]) in g.edges() {
        adj[a as usize * n + b as usize] = true;
        adj[b as usize * n + a as usize] = true;
    }
    let mut cur = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | adj[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Edge-list text for one graph.
pub fn write_multi_text(g: &MultiGraph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (_, [a, b]) in g.edges() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

/// One parsed record and the line it started on.
#[derive(Debug)]
pub struct Record {
    pub line: usize,
    pub graph: Result<MultiGraph>,
}

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_ints(l: &str) -> Option<(usize, usize)> {
    let mut it = l.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Parses every edge-list record in `text`. A malformed record is reported
/// and parsing resumes at the next line that looks like a header.
pub fn read_multi_text(text: &str) -> Vec<Record> {
    let lines: Vec<(usize, &str)> = meaningful(text).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (ln, l) = lines[i];
        let Some((n, m)) = two_ints(l) else {
            out.push(Record {
                line: ln,
                graph: Err(perr(ln, 0, "expected header `n m`")),
            });
            i += 1;
            continue;
        };
        i += 1;
        let mut g = MultiGraph::new(n);
        let mut err = None;
        for k in 0..m {
            let Some(&(eln, el)) = lines.get(i) else {
                err = Some(perr(ln, 0, format!("record ends after {k} of {m} edges")));
                break;
            };
            i += 1;
            match two_ints(el) {
                Some((u, v)) if u < n && v < n => {
                    if let Err(e) = g.add_edge(u as u32, v as u32) {
                        err = Some(perr(eln, 0, e.to_string()));
                        break;
                    }
                }
                Some(_) => {
                    err = Some(perr(
                        eln,
                        0,
                        format!("endpoint out of range for {n} vertices"),
                    ));
                    break;
                }
                None => {
                    err = Some(perr(eln, 0, "expected edge line `u v`"));
                    break;
                }
            }
        }
        out.push(Record {
            line: ln,
            graph: match err {
                Some(e) => Err(e),
                None => Ok(g),
            },
        });
    }
    if out.is_empty() {
        out.push(Record {
            line: 1,
            graph: Err(perr(1, 0, "no graph records")),
        });
    }
    out
}

/// graph6 records, one per nonblank line.
pub fn read_graph6(text: &str) -> Vec<Record> {
    let mut out: Vec<Record> = meaningful(text)
        .filter(|(_, l)| *l != HEADER)
        .map(|(ln, l)| Record {
            line: ln,
            graph: read_graph6_line(l, ln),
        })
        .collect();
    if out.is_empty() {
        out.push(Record {
            line: 1,
            graph: Err(perr(1, 0, "no graph records")),
        });
    }
    out
}

/// Picks the format from the first meaningful line: a pair of integers means
/// edge-list text, anything else graph6.
pub fn read_any(text: &str) -> Vec<Record> {
    match meaningful(text).next() {
        Some((_, l)) if two_ints(l).is_some() => read_multi_text(text),
        _ => read_graph6(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_roundtrip() {
        let g =
            MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = write_graph6(&g).unwrap();
        assert_eq!(s, "C~");
        let h = read_graph6_line(&s, 1).unwrap();
        assert_eq!(h.size(), 6);
    }

    #[test]
    fn header_accepted() {
        assert_eq!(read_graph6_line(">>graph6<<C~", 1).unwrap().size(), 6);
    }

    #[test]
    fn bad_length() {
        assert!(matches!(
            read_graph6_line("C~~", 3),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn empty_inputs() {
        assert!(read_graph6("").iter().all(|r| r.graph.is_err()));
        assert!(read_any("\n\n").iter().all(|r| r.graph.is_err()));
        assert!(read_graph6_line("", 1).is_err());
    }

    #[test]
    fn multi_roundtrip() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(matches!(write_graph6(&g), Err(Error::MultiEdge(_))));
        let t = write_multi_text(&g);
        let rs = read_any(&format!("# theta\n{t}\n{t}"));
        assert_eq!(rs.len(), 2);
        assert_eq!(rs[1].graph.as_ref().unwrap().multiplicity(0, 1), 3);
    }

    #[test]
    fn multi_errors() {
        let rs = read_multi_text("2 1\n0 0\n");
        assert!(rs[0].graph.is_err());
        let rs = read_multi_text("3 2\n0 1\n");
        assert!(rs[0].graph.is_err());
    }
}
