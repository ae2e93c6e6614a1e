use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use snarklab::canon::canonical_form;
use snarklab::catalogue;
use snarklab::circuits::{enumerate_circuits, five_circuit_incidence, girth};
use snarklab::colouring::{boundary_colourings, find_colouring, is_colourable, verify_parity};
use snarklab::factors::oddness;
use snarklab::graph::{self_junction, split_off, subdivide};
use snarklab::oracles::oddness_brute;
use snarklab::reductions::{expand_vertex, reduce, replay, RuleSet};
use snarklab::structure::boundary;
use snarklab::{MultiGraph, Vertex};

fn small() -> Vec<&'static MultiGraph> {
    catalogue::up_to(12).collect()
}

fn graph() -> impl Strategy<Value = &'static MultiGraph> {
    proptest::sample::select(small())
}

fn shuffled(g: &MultiGraph, seed: u64) -> MultiGraph {
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_ignores_labels(g in graph(), seed in any::<u64>()) {
        prop_assert_eq!(canonical_form(&shuffled(g, seed)), canonical_form(g));
    }

    #[test]
    fn degrees_sum_to_twice_the_size(g in graph()) {
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.size());
    }

    #[test]
    fn shortest_circuits_have_girth_length(g in graph()) {
        let k = girth(g).unwrap();
        let cs = enumerate_circuits(g, k);
        prop_assert!(!cs.is_empty());
        prop_assert!(cs.iter().all(|c| c.len() == k));
    }

    #[test]
    fn five_circuit_incidences_double_count(g in graph(), seed in any::<u64>()) {
        let p = five_circuit_incidence(g);
        prop_assert_eq!(p.weighted_sum(), 5 * p.circuit_count);
        prop_assert_eq!(five_circuit_incidence(&shuffled(g, seed)).profile, p.profile);
    }

    #[test]
    fn subdivide_split_rejoin(g in graph(), e in any::<prop::sample::Index>()) {
        let e = e.index(g.size()) as u32;
        let s = subdivide(g, e).unwrap();
        let n = split_off(&s.graph, s.vertex).unwrap();
        let t = n.terminals().to_vec();
        let back = self_junction(&n, t[0], t[1]).unwrap().into_graph().unwrap();
        prop_assert_eq!(canonical_form(&back), canonical_form(g));
    }

    #[test]
    fn colourable_iff_some_boundary_colouring(g in graph(), v in any::<prop::sample::Index>()) {
        let v = v.index(g.order()) as Vertex;
        let n = split_off(g, v).unwrap();
        prop_assert_eq!(is_colourable(g), !boundary_colourings(&n).is_empty());
    }

    #[test]
    fn parity_on_every_cut(g in graph(), mask in any::<u64>()) {
        if let Some(c) = find_colouring(g).unwrap() {
            let side: Vec<bool> = g.vertices().map(|v| mask >> v & 1 == 1).collect();
            let cut = boundary(g, &side);
            let r = verify_parity(&c, &cut);
            prop_assert!(r.holds);
        }
    }

    #[test]
    fn oddness_matches_brute_force(g in proptest::sample::select(catalogue::up_to(10).collect::<Vec<_>>())) {
        if snarklab::structure::is_bridgeless(g) {
            prop_assert_eq!(Some(oddness(g).unwrap().value), oddness_brute(g));
        }
    }

    #[test]
    fn reduction_replays(vs in proptest::collection::vec(0u32..10, 1..4)) {
        let mut g = snarklab::constructions::petersen();
        for v in vs {
            g = expand_vertex(&g, v).unwrap();
        }
        let a = reduce(&g, RuleSet::All).unwrap();
        let b = reduce(&g, RuleSet::All).unwrap();
        prop_assert_eq!(&a.graph, &b.graph);
        prop_assert_eq!(&a.trace, &b.trace);
        prop_assert_eq!(replay(&g, &a.trace).unwrap(), a.graph);
    }
}
