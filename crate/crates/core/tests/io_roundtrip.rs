mod common;

use common::{random_graph, random_perm, rng};
use pgv_core::constructions::{build_family, family_graph, Family, FamilySpec};
use pgv_core::graph::io::{from_graph6, read_action_record, read_edge_list, to_graph6, write_action_record, write_edge_list};
use pgv_core::{Permutation, RunConfig};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn edge_list_and_graph6_roundtrip(seed in any::<u64>()) {
        let graph = random_graph(&mut rng(seed), 300);
        let mut buf = Vec::new();
        write_edge_list(&graph, &mut buf).unwrap();
        prop_assert_eq!(&read_edge_list(&buf[..]).unwrap(), &graph);
        prop_assert_eq!(&from_graph6(&to_graph6(&graph).unwrap()).unwrap(), &graph);
    }

    #[test]
    fn cycle_notation_roundtrip(seed in any::<u64>(), n in 1usize..40) {
        let g = random_perm(&mut rng(seed), n);
        let text = g.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, n).unwrap(), g);
    }
}

#[test]
fn family_graph_files_roundtrip() {
    for (family, p) in [(Family::Psl2_11, None), (Family::AltP, Some(7))] {
        let bundle = build_family(FamilySpec::new(family, p, false).unwrap()).unwrap();
        let cg = family_graph(&bundle, &RunConfig::default()).unwrap();
        let mut edges = Vec::new();
        write_edge_list(&cg.graph, &mut edges).unwrap();
        assert_eq!(read_edge_list(&edges[..]).unwrap(), cg.graph);
        let mut action = Vec::new();
        write_action_record(&cg.action.generator_images, &mut action).unwrap();
        let images = read_action_record(&action[..]).unwrap();
        assert_eq!(images, cg.action.generator_images);
    }
}

#[test]
fn shipped_generators_survive_printing() {
    for family in [Family::Psl2_11, Family::Psl2_29, Family::M23] {
        let bundle = build_family(FamilySpec::new(family, None, false).unwrap()).unwrap();
        let mut all = vec![bundle.x.clone(), bundle.t.clone()];
        all.extend(bundle.extras.iter().map(|(_, g)| g.clone()));
        for g in all {
            assert_eq!(Permutation::parse_cycles(&g.to_string(), g.degree()).unwrap(), g);
        }
    }
}
