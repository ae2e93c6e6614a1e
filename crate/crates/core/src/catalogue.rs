//! The bundled catalogue: every connected cubic simple graph on 4 to 16
//! vertices, in graph6.

use crate::colouring::is_colourable;
use crate::graph::MultiGraph;
use crate::structure::{is_bridgeless, is_two_connected};
use std::sync::OnceLock;

const FIXTURE: &str = include_str!("../data/cubic_connected_le16.g6");

/// SHA-256 of the fixture file.
pub const FIXTURE_SHA256: &str = "c7978233bbf1652180fe7e4fcb83d3b2259341249a3134721de81f7d8a70a71a";

pub fn fixture_text() -> &'static str {
    FIXTURE
}

pub fn fixture() -> &'static [MultiGraph] {
    static GRAPHS: OnceLock<Vec<MultiGraph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        crate::io::read_graph6(FIXTURE)
            .into_iter()
            .map(|r| r.graph.expect("bundled fixture parses"))
            .collect()
    })
}

pub fn up_to(n: usize) -> impl Iterator<Item = &'static MultiGraph> {
    fixture().iter().filter(move |g| g.order() <= n)
}

pub fn bridgeless_up_to(n: usize) -> Vec<&'static MultiGraph> {
    up_to(n).filter(|g| is_bridgeless(g)).collect()
}

/// 2-connected uncolourable members.
pub fn snarks_up_to(n: usize) -> Vec<&'static MultiGraph> {
    up_to(n)
        .filter(|g| is_two_connected(g) && !is_colourable(g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use sha2::{Digest, Sha256};

    #[test]
    fn fixture_is_intact() {
        assert_eq!(
            hex::encode(Sha256::digest(FIXTURE.as_bytes())),
            FIXTURE_SHA256
        );
        let mut counts = std::collections::BTreeMap::new();
        for g in fixture() {
            assert!(g.is_cubic());
            *counts.entry(g.order()).or_insert(0) += 1;
        }
        let v: Vec<usize> = counts.values().copied().collect();
        assert_eq!(v, vec![1, 2, 5, 19, 85, 509, 4060]);
    }
}
