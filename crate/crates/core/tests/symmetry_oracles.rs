mod common;

use common::*;
use num_bigint::BigUint;
use pgv_core::graph::io::{from_graph6, to_graph6};
use pgv_core::symmetry::{automorphism_group, canonical_form, is_arc_transitive};
use pgv_core::graph::GroupAction;
use pgv_core::SymGraph;
use proptest::prelude::*;

#[test]
fn aut_order_matches_brute_force_on_corpus() {
    let corpus = small_graph_corpus();
    assert!(corpus.len() > 80);
    for (name, graph) in &corpus {
        assert_eq!(check_aut_against_oracle(graph), Ok(()), "{name}");
    }
}

#[test]
fn brute_force_oracle_sanity() {
    // values any textbook gives
    assert_eq!(brute_force_aut_order(&SymGraph::cycle(7)), 14);
    assert_eq!(brute_force_aut_order(&SymGraph::complete(5)), 120);
    assert_eq!(brute_force_aut_order(&SymGraph::hypercube(3)), 48);
}

#[test]
fn vertex_transitive_graphs_satisfy_orbit_counting() {
    for graph in [SymGraph::hypercube(5), SymGraph::cycle(40), from_graph6("IheA@GUAo").unwrap()] {
        let aut = automorphism_group(&graph, 10_000).unwrap();
        assert!(aut.vertex_transitive);
        assert_eq!(aut.order, BigUint::from(graph.vertex_count()) * aut.base_stabilizer_order());
        let (_, stab) = aut.base_stabilizer().unwrap();
        assert_eq!(stab.order(), aut.base_stabilizer_order());
    }
}

#[test]
fn generators_give_arc_transitive_action_on_petersen() {
    let graph = from_graph6("IheA@GUAo").unwrap();
    let aut = automorphism_group(&graph, 10_000).unwrap();
    let act = GroupAction {
        group: aut.group(),
        space_size: 10,
        generator_images: aut.generators.clone(),
    };
    assert!(is_arc_transitive(&graph, &act).unwrap());
}

#[test]
fn canonical_form_separates_non_isomorphic_graphs() {
    // same degree sequence, different graphs: C6 against two triangles
    let c6 = SymGraph::cycle(6);
    let two = SymGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert_ne!(canonical_form(&c6, 100).unwrap(), canonical_form(&two, 100).unwrap());
    let prism = SymGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
    let k33 = SymGraph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
    assert_ne!(canonical_form(&prism, 100).unwrap(), canonical_form(&k33, 100).unwrap());
}

#[test]
fn canonical_form_is_a_valid_relabeling() {
    let graph = SymGraph::hypercube(4);
    let aut = automorphism_group(&graph, 10_000).unwrap();
    let relabeled = graph.relabel(&aut.labeling).unwrap();
    let form = canonical_form(&graph, 10_000).unwrap();
    assert_eq!(relabeled.edges().collect::<Vec<_>>(), form.edges);
    assert_eq!(to_graph6(&relabeled).unwrap(), to_graph6(&SymGraph::from_edges(16, form.edges).unwrap()).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_ignores_relabeling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let graph = random_graph(&mut r, 500);
        prop_assert_eq!(check_canonical_invariance(&graph, &mut r), Ok(()));
    }

    #[test]
    fn aut_order_ignores_relabeling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let graph = random_graph(&mut r, 200);
        let g = random_perm(&mut r, graph.vertex_count());
        let a = automorphism_group(&graph, 10_000).unwrap();
        let b = automorphism_group(&graph.relabel(&g).unwrap(), 10_000).unwrap();
        prop_assert_eq!(a.order, b.order);
    }
}

#[test]
fn semiregular_quotients_keep_valency() {
    let examples = semiregular_examples();
    assert!(examples.len() >= 10);
    for (name, graph, group, valency) in &examples {
        assert_eq!(check_quotient_valency(graph, group, *valency), Ok(()), "{name}");
    }
}

#[test]
fn antipodal_quotient_of_cube_is_k4() {
    let (_, cube, antipodal, _) = semiregular_examples().into_iter().find(|e| e.0 == "Q3/antipodal").unwrap();
    let q = cube.quotient(&antipodal.orbits()).unwrap();
    assert_eq!(brute_force_aut_order(&q.graph), 24);
    assert_eq!(q.graph.edge_count(), 6);
}

#[test]
fn frattini_equivalence_on_transitive_instances() {
    let mut r = rng(0xf4a7);
    let (mut transitive, mut intransitive) = (0, 0);
    for _ in 0..50 {
        let (g, h) = frattini_instance(&mut r);
        assert!(g.is_transitive());
        assert_eq!(check_frattini(&g, &h, 0), Ok(()), "G = {:?}, H = {:?}", g.generators(), h.generators());
        if h.is_transitive() {
            transitive += 1;
        } else {
            intransitive += 1;
        }
    }
    // both sides of the equivalence are exercised
    assert!(transitive > 0 && intransitive > 0, "{transitive} / {intransitive}");
}
