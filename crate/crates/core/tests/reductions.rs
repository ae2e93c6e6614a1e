use snarklab::canon::are_isomorphic;
use snarklab::constructions::families::{h1, h2};
use snarklab::constructions::petersen;
use snarklab::reductions::{expand_vertex, reduce, replay, Rule, RuleSet};
use snarklab::MultiGraph;

/// Petersen with edge 0 replaced by a path through a digon.
fn digon_petersen() -> MultiGraph {
    let p = petersen();
    let mut g = MultiGraph::new(12);
    let [a, b] = p.ends(0);
    for (e, [u, v]) in p.edges().skip(1) {
        let _ = e;
        g.add_edge(u, v).unwrap();
    }
    for (u, v) in [(a, 10), (10, 11), (10, 11), (11, b)] {
        g.add_edge(u, v).unwrap();
    }
    g
}

#[test]
fn digon_reduces_to_petersen() {
    let g = digon_petersen();
    assert!(g.is_cubic());
    let r = reduce(&g, RuleSet::Girth4).unwrap();
    assert!(are_isomorphic(&r.graph, &petersen()));
    assert_eq!(r.oddness, 2);
    assert!(r.trace.steps.iter().all(|s| s.rule == Rule::ShortCircuit));
    assert_eq!(replay(&g, &r.trace).unwrap(), r.graph);
}

#[test]
fn irreducible_inputs_are_unchanged() {
    for rules in [RuleSet::Girth5, RuleSet::Cut2, RuleSet::All] {
        let r = reduce(&h1(), rules).unwrap();
        assert!(r.trace.steps.is_empty(), "{rules:?}");
        assert_eq!(r.graph, h1());
    }
    let r = reduce(&h2(), RuleSet::Cut3).unwrap();
    assert!(r.trace.steps.is_empty());
    assert_eq!(r.oddness, 4);
}

#[test]
fn repeated_triangles() {
    let mut g = petersen();
    for v in [0, 3, 10] {
        g = expand_vertex(&g, v).unwrap();
    }
    assert_eq!(g.order(), 16);
    let r = reduce(&g, RuleSet::All).unwrap();
    assert_eq!(r.trace.steps.len(), 3);
    assert!(are_isomorphic(&r.graph, &petersen()));
    for s in &r.trace.steps {
        assert_eq!(s.order_before, s.order_after + 2);
    }
}
