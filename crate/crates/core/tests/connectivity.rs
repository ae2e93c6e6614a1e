use snarklab::connectivity::{
    cyclic_connectivity, edge_connectivity, is_cyclically_k_connected, ZetaResult,
};
use snarklab::constructions::families::{h1, h2};
use snarklab::constructions::petersen;
use snarklab::MultiGraph;

fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Two copies of K4 with one edge subdivided, the new vertices joined by a
/// bridge.
fn bridged() -> MultiGraph {
    let half = [(0, 1), (0, 2), (0, 4), (4, 3), (1, 2), (1, 3), (2, 3)];
    let mut es: Vec<(u32, u32)> = half.to_vec();
    es.extend(half.iter().map(|&(a, b)| (a + 5, b + 5)));
    es.push((4, 9));
    MultiGraph::from_edges(10, &es).unwrap()
}

#[test]
fn edge_connectivity_values() {
    assert_eq!(edge_connectivity(&petersen()), 3);
    assert_eq!(edge_connectivity(&h1()), 2);
    let b = bridged();
    assert!(b.is_cubic());
    assert_eq!(edge_connectivity(&b), 1);
}

#[test]
fn cyclic_connectivity_values() {
    let z = cyclic_connectivity(&petersen(), 7).unwrap();
    assert_eq!(z.exact(), Some(5));
    if let ZetaResult::Exact(_, cert) = &z {
        cert.validate(&petersen()).unwrap();
    }
    assert_eq!(
        cyclic_connectivity(&k4(), 7).unwrap(),
        ZetaResult::NoCycleSeparatingCut
    );
    assert!(matches!(
        cyclic_connectivity(&petersen(), 4).unwrap(),
        ZetaResult::AtLeast(5)
    ));
}

#[test]
fn decisions() {
    assert!(is_cyclically_k_connected(&h2(), 3).unwrap().holds);
    let d = is_cyclically_k_connected(&h2(), 4).unwrap();
    assert!(!d.holds);
    let cert = d.counterexample.unwrap();
    assert_eq!(cert.size(), 3);
    cert.validate(&h2()).unwrap();
    for k in 2..=7 {
        let d = is_cyclically_k_connected(&k4(), k).unwrap();
        assert!(d.holds && d.no_separating_cut);
    }
}

#[test]
fn low_values_match_edge_connectivity() {
    for g in snarklab::catalogue::up_to(12) {
        let z = cyclic_connectivity(g, 7).unwrap();
        if let Some(k) = z.exact() {
            if k <= 3 {
                assert_eq!(k, edge_connectivity(g));
            }
        }
    }
}
