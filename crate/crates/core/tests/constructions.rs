use snarklab::canon::are_isomorphic;
use snarklab::colouring::{find_network_colouring, is_colourable};
use snarklab::constructions::blocks::{p2_at, p3_at};
use snarklab::constructions::families::{
    build_l, build_m, build_n1, build_n2, build_r, build_y, chain_z, gv_extension,
    petersen_with_y_plan, ring_join, ring_join_with,
};
use snarklab::constructions::superposition::is_proper_superedge;
use snarklab::constructions::{
    build_p2, build_p3, flower_snark, petersen, superpose, SuperpositionPlan,
};
use snarklab::factors::oddness;
use snarklab::structure::is_bridgeless;

#[test]
fn flower_snarks() {
    for (k, n) in [(3, 12), (5, 20), (7, 28)] {
        assert_eq!(flower_snark(k).unwrap().order(), n);
    }
    assert!(!is_colourable(&flower_snark(5).unwrap()));
    assert!(flower_snark(4).is_err());
}

#[test]
fn petersen_networks_do_not_depend_on_the_choice() {
    let p2 = build_p2();
    for e in [3, 7, 11] {
        assert!(are_isomorphic(p2.graph(), p2_at(e).unwrap().graph()));
    }
    let p3 = build_p3();
    for v in [2, 5, 9] {
        assert!(are_isomorphic(p3.graph(), p3_at(v).unwrap().graph()));
    }
    assert!(find_network_colouring(&p2).is_none());
}

#[test]
fn extension_adds_a_fixed_amount() {
    let r0 = build_r(0).unwrap();
    assert!(are_isomorphic(&r0, &petersen()));
    let r2 = build_r(2).unwrap();
    assert_eq!(r2, gv_extension(&r0, 0).unwrap());
    assert_eq!(r2.order(), r0.order() + 30);
    assert_eq!(oddness(&r2).unwrap().value, oddness(&r0).unwrap().value + 4);
    assert_eq!(build_r(1).unwrap().order(), 28);
    assert!(gv_extension(&r0, 10).is_err());
}

#[test]
fn rings() {
    for (r, n) in [(1, 18), (2, 36), (3, 54)] {
        let g = ring_join(&vec![build_n1(); r]).unwrap();
        assert_eq!(g.order(), n);
        assert!(is_bridgeless(&g));
    }
    let blocks = [build_n2(), build_n1()];
    let g = ring_join(&blocks).unwrap();
    assert_eq!(g.order(), 44);
    assert!(are_isomorphic(
        &g,
        &ring_join_with(&blocks, &[false, false]).unwrap()
    ));
    assert!(ring_join(&[]).is_err());
}

#[test]
fn chains() {
    assert_eq!(chain_z(2).unwrap().order(), 50);
    assert_eq!(chain_z(4).unwrap().order(), 100);
    assert!(chain_z(3).is_err());
    for (r, n) in [(2, 18), (3, 28), (4, 36)] {
        assert_eq!(build_l(r).unwrap().graph.order(), n);
    }
}

#[test]
fn superposition() {
    let y = build_y();
    assert_eq!(y.nonterminal_count(), 18);
    assert!(is_proper_superedge(&y).unwrap());

    let t = superpose(&SuperpositionPlan::trivial(&petersen()).unwrap()).unwrap();
    assert!(are_isomorphic(&t.graph, &petersen()));

    let plan = petersen_with_y_plan().unwrap();
    let sum: usize = plan
        .vertices
        .iter()
        .map(|v| v.network.nonterminal_count())
        .sum::<usize>()
        + plan
            .edges
            .iter()
            .map(|e| e.network.nonterminal_count())
            .sum::<usize>();
    let s = superpose(&plan).unwrap();
    assert_eq!(s.graph.order(), sum);
    assert_eq!(s.graph.order(), 28);
    assert!(!is_colourable(&s.graph));
    s.projection.validate(&plan.base, &s.graph).unwrap();
}

#[test]
fn m_graphs() {
    let m3 = build_m(3).unwrap();
    assert_eq!(m3.order(), 298);
    assert!(m3.is_cubic());
    assert!(snarklab::circuits::girth(&m3).unwrap() >= 6);
    assert!(is_bridgeless(&m3));
}

#[test]
fn frozen_chain_links_are_the_first_found() {
    use snarklab::constructions::families::{search_chain_links, CHAIN_LINKS};
    assert_eq!(search_chain_links().unwrap(), CHAIN_LINKS);
}
