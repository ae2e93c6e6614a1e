use num_rational::Ratio;
use snarklab::bounds::{oddness_upper_bound, ratio_check, RatioCheck, RatioClass};
use snarklab::circuits::enumerate_circuits;
use snarklab::connectivity::cyclic_connectivity;
use snarklab::constructions::families::{
    build_n1, build_n2, build_r, double_p3, h1, h2, ring_join,
};
use snarklab::constructions::petersen;
use snarklab::factors::{
    enumerate_perfect_matchings, enumerate_two_factors, max_selected_edges, min_selected_5circuits,
    oddness, special_edges,
};
use snarklab::MultiGraph;

fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

fn k33() -> MultiGraph {
    let es: Vec<(u32, u32)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    MultiGraph::from_edges(6, &es).unwrap()
}

#[test]
fn matching_counts() {
    assert_eq!(enumerate_perfect_matchings(&k4()).len(), 3);
    assert_eq!(enumerate_perfect_matchings(&petersen()).len(), 6);
    let theta = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
    assert_eq!(enumerate_perfect_matchings(&theta).len(), 3);
}

#[test]
fn oddness_values() {
    let c = oddness(&petersen()).unwrap();
    assert_eq!(c.value, 2);
    assert!(c.is_valid_in(&petersen()));
    assert!(c.factor.circuits.iter().all(|x| x.len() == 5));
    assert_eq!(oddness(&h1()).unwrap().value, 4);
    assert_eq!(oddness(&build_r(2).unwrap()).unwrap().value, 6);
}

#[test]
fn selected_five_circuits() {
    let p = petersen();
    let all = enumerate_circuits(&p, 5);
    assert_eq!(min_selected_5circuits(&p, &all).unwrap().0, 2);
    assert_eq!(min_selected_5circuits(&p, &[]).unwrap().0, 0);
    let through: Vec<_> = all
        .iter()
        .filter(|c| c.vertices.contains(&0))
        .take(5)
        .cloned()
        .collect();
    assert_eq!(through.len(), 5);
    assert_eq!(min_selected_5circuits(&p, &through).unwrap().0, 0);
}

#[test]
fn selected_edges() {
    assert_eq!(max_selected_edges(&k4(), &[]).unwrap().0, 0);
    assert_eq!(max_selected_edges(&k4(), &[0, 1, 2, 3, 4, 5]).unwrap().0, 4);
    let p = petersen();
    let m = enumerate_perfect_matchings(&p).remove(0);
    let (k, f) = max_selected_edges(&p, &m.0).unwrap();
    assert!(f.is_valid_in(&p));
    assert!(3 * k >= 2 * m.0.len());
    assert_eq!(k, 4);
}

#[test]
fn special_edge_sets() {
    assert!(special_edges(&petersen()).unwrap().is_empty());
    assert_eq!(special_edges(&k33()).unwrap().len(), 9);
    // the three edges form one orbit under the symmetry of P3
    assert_eq!(special_edges(&double_p3()).unwrap().len(), 3);
}

#[test]
fn two_factor_shapes_of_petersen() {
    let fs = enumerate_two_factors(&petersen());
    assert_eq!(fs.len(), 6);
    assert!(fs
        .iter()
        .all(|f| f.length_counts().into_iter().collect::<Vec<_>>() == vec![(5, 2)]));
}

#[test]
fn counting_bounds() {
    assert_eq!(oddness_upper_bound(10, 12), Ratio::from_integer(2));
    let q = enumerate_circuits(&h2(), 5)
        .iter()
        .filter(|c| c.len() == 5)
        .count();
    assert!(oddness_upper_bound(28, q) >= Ratio::from_integer(4));
    assert_eq!(oddness_upper_bound(35, 0), Ratio::from_integer(5));

    let z = cyclic_connectivity(&h1(), 7).unwrap();
    match ratio_check(&h1(), 4, &z) {
        RatioCheck::Checked {
            ratio,
            class,
            holds,
            ..
        } => {
            assert_eq!(ratio, Ratio::from_integer(7));
            assert_eq!(class, RatioClass::Any);
            assert!(holds);
        }
        RatioCheck::Exempt => panic!("H1 is not the Petersen graph"),
    }
    let g = ring_join(&[build_n2(), build_n1()]).unwrap();
    let z = cyclic_connectivity(&g, 7).unwrap();
    match ratio_check(&g, 4, &z) {
        RatioCheck::Checked {
            ratio,
            class,
            holds,
            ..
        } => {
            assert_eq!(ratio, Ratio::from_integer(11));
            assert_eq!(class, RatioClass::Cyclically3Connected);
            assert!(holds);
        }
        RatioCheck::Exempt => panic!("not the Petersen graph"),
    }
    let zp = cyclic_connectivity(&petersen(), 7).unwrap();
    assert_eq!(ratio_check(&petersen(), 2, &zp), RatioCheck::Exempt);
}
