use snarklab::canon::{are_isomorphic, canonical_form};
use snarklab::circuits::{enumerate_circuits, five_circuit_incidence, girth};
use snarklab::constructions::families::{build_n1, build_n2, double_p3, ring_join};
use snarklab::constructions::{build_p2, build_p3, petersen};
use snarklab::graph::{delete_edges, split_off, subdivide, validate, Mode};
use snarklab::io::{read_any, read_graph6, write_graph6, write_multi_text};
use snarklab::MultiGraph;

fn k4() -> MultiGraph {
    MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

fn k33() -> MultiGraph {
    let es: Vec<(u32, u32)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    MultiGraph::from_edges(6, &es).unwrap()
}

#[test]
fn validate_reports_violations() {
    assert!(validate(&petersen(), Mode::Cubic).is_empty());
    let g = delete_edges(&petersen(), &[0]).unwrap().graph;
    let v = validate(&g, Mode::Cubic);
    assert_eq!(v.len(), 2);
    assert!(v.iter().all(|x| x.degree == 2));
    let p3 = build_p3();
    assert!(validate(p3.graph(), Mode::Network).is_empty());
    assert_eq!((p3.nonterminal_count(), p3.terminals().len()), (9, 3));
}

#[test]
fn girth_values() {
    assert_eq!(girth(&petersen()), Some(5));
    assert_eq!(
        girth(&MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()),
        Some(2)
    );
    assert_eq!(girth(&k4()), Some(3));
}

#[test]
fn circuit_counts() {
    let five = enumerate_circuits(&petersen(), 5);
    assert_eq!(five.len(), 12);
    assert!(five.iter().all(|c| c.len() == 5));
    assert!(enumerate_circuits(&petersen(), 4).is_empty());
    let k = enumerate_circuits(&k4(), 4);
    assert_eq!(k.iter().filter(|c| c.len() == 3).count(), 4);
    assert_eq!(k.iter().filter(|c| c.len() == 4).count(), 3);
}

#[test]
fn five_circuit_profiles() {
    let p = five_circuit_incidence(&petersen());
    assert!(p.per_vertex.iter().all(|&k| k == 6));
    assert_eq!(p.profile[6], 10);
    let k = five_circuit_incidence(&k33());
    assert!(k.per_vertex.iter().all(|&x| x == 0));
    let g = ring_join(&[build_n2(), build_n1()]).unwrap();
    let r = five_circuit_incidence(&g);
    assert!(r.overflow.is_empty());
    assert_eq!(r.weighted_sum(), 5 * r.circuit_count);
}

#[test]
fn subdivide_and_split_gives_p2() {
    let s = subdivide(&petersen(), 3).unwrap();
    let n = split_off(&s.graph, s.vertex).unwrap();
    assert_eq!(n.nonterminal_count(), 10);
    assert_eq!(n.terminals().len(), 2);
    let p2 = build_p2();
    assert!(are_isomorphic(n.graph(), p2.graph()));
    assert_eq!(split_off(&petersen(), 7).unwrap().nonterminal_count(), 9);
}

#[test]
fn two_p3_junction_is_an_18_vertex_snark() {
    let g = double_p3();
    assert_eq!(g.order(), 18);
    assert!(g.is_cubic());
    assert!(snarklab::structure::is_bridgeless(&g));
    assert!(!snarklab::colouring::is_colourable(&g));
}

#[test]
fn canonical_forms() {
    let p = petersen();
    let perm: Vec<u32> = vec![3, 9, 0, 4, 1, 8, 2, 7, 5, 6];
    assert_eq!(canonical_form(&p), canonical_form(&p.relabel(&perm)));
    assert_ne!(
        canonical_form(&p),
        canonical_form(&snarklab::reductions::expand_vertex(&k33(), 0).unwrap())
    );
    let h1 = snarklab::constructions::families::h1();
    let h2 = snarklab::constructions::families::h2();
    assert_ne!(canonical_form(&h1), canonical_form(&h2));
}

#[test]
fn graph6_round_trip() {
    let p = petersen();
    let s = write_graph6(&p).unwrap();
    assert_eq!(s.len(), 9);
    let back = read_graph6(&s).remove(0).graph.unwrap();
    assert!(are_isomorphic(&back, &p));
    let theta = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
    assert!(write_graph6(&theta).is_err());
    assert!(read_any("").iter().all(|r| r.graph.is_err()));
    let m = read_any(&write_multi_text(&theta)).remove(0).graph.unwrap();
    assert_eq!(m.edge_pairs(), theta.edge_pairs());
}
