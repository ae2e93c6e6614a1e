use snarklab::colouring::{
    find_colouring, find_network_colouring, is_colourable, resistance, verify_parity, DeletionMode,
};
use snarklab::constructions::families::build_z;
use snarklab::constructions::petersen;
use snarklab::MultiGraph;

fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

#[test]
fn colourings() {
    let c = find_colouring(&k4()).unwrap().unwrap();
    assert!(c.is_proper(&k4()));
    assert!(find_colouring(&petersen()).unwrap().is_none());
    assert!(find_network_colouring(&build_z()).is_none());
}

#[test]
fn degree_four_rejected() {
    let g = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (0, 2), (0, 2)]).unwrap();
    assert!(find_colouring(&g).is_err());
}

#[test]
fn parity_on_k4() {
    let g = k4();
    let c = find_colouring(&g).unwrap().unwrap();
    for v in g.vertices() {
        let cut: Vec<u32> = g.incident(v).iter().map(|&(_, e)| e).collect();
        let r = verify_parity(&c, &cut);
        assert!(r.holds);
        assert_eq!(r.counts, [1, 1, 1]);
    }
    let class: Vec<u32> = (0..6).filter(|&e| c.colour(e) == c.colour(0)).collect();
    let r = verify_parity(&c, &class);
    assert!(r.holds);
    let mut counts = r.counts;
    counts.sort_unstable();
    assert_eq!(counts, [0, 0, 2]);
}

#[test]
fn resistance_values() {
    for mode in [DeletionMode::Vertex, DeletionMode::Edge] {
        assert_eq!(resistance(&k4(), mode).unwrap().value, 0);
        let r = resistance(&petersen(), mode).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.witness.verify(&petersen()));
    }
    // lexicographically least witness
    assert_eq!(
        resistance(&petersen(), DeletionMode::Vertex)
            .unwrap()
            .witness
            .deleted,
        vec![0, 1]
    );
}

#[test]
fn colourable_matches_for_the_catalogue_up_to_ten() {
    for g in snarklab::catalogue::up_to(10) {
        assert_eq!(is_colourable(g), snarklab::oracles::colourable_brute(g));
    }
}
