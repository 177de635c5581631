//! Randomized checks that pair the generator with the construction
//! operators: serialization round trips, edge enlargement, and the
//! signed-graph bridge.

use std::collections::BTreeMap;

use ohg_cli::format::{parse_ohg, serialize_ohg};
use ohg_cli::generate::{generate, GeneratorConfig, SplitMix64};
use ohg_core::constructions::{
    enlarge_edges, incidence_dual, intersection_graph, orient_signed_graph,
    structurally_equal_up_to_edge_labels, underlying_signed_graph, EnlargementPlan,
};
use ohg_core::{OrientedHypergraph, Sign};

fn generated(seed: u64, tweak: impl FnOnce(&mut GeneratorConfig)) -> OrientedHypergraph {
    let mut config = GeneratorConfig::new(seed);
    tweak(&mut config);
    generate(&config).expect("constraints are satisfiable")
}

#[test]
fn serialize_then_parse_is_the_identity() {
    let mut stream = SplitMix64::new(0x0571);
    for _ in 0..200 {
        let g = generated(stream.next_u64(), |_| {});
        let text = serialize_ohg(&g);
        assert_eq!(parse_ohg(&text).unwrap(), g, "round trip failed for:\n{text}");
        // The serialization is already canonical.
        assert_eq!(serialize_ohg(&parse_ohg(&text).unwrap()), text);
    }
}

#[test]
fn any_two_uniform_instance_is_the_line_graph_of_uniform_enlargements_of_its_dual() {
    let mut stream = SplitMix64::new(0x0572);
    for _ in 0..100 {
        let g = generated(stream.next_u64(), |c| {
            c.constraints.k_uniform = Some(2);
            c.constraints.linear = true;
        });
        let dual = incidence_dual(&g);
        let max_degree = g.max_degree().unwrap();
        for extra in 0..3 {
            let target = max_degree + extra;
            let enlarged = enlarge_edges(&dual, &EnlargementPlan::Uniform(target)).unwrap();
            assert_eq!(enlarged.uniformity(), (target > 0).then_some(target));
            // Padding adds only degree-1 vertices: recounting shows the
            // original degrees and the maximum are untouched.
            for v in dual.vertices() {
                assert_eq!(enlarged.degree(v).unwrap(), dual.degree(v).unwrap());
            }
            assert_eq!(enlarged.max_degree().unwrap(), dual.max_degree().unwrap());
            let line = intersection_graph(&enlarged).unwrap();
            assert!(
                structurally_equal_up_to_edge_labels(&line, &g),
                "line graph of the {target}-uniform enlargement lost the original"
            );
        }
    }
}

#[test]
fn enlargement_never_changes_the_intersection_graph() {
    let mut stream = SplitMix64::new(0x0573);
    for _ in 0..100 {
        let g = generated(stream.next_u64(), |c| {
            c.constraints.linear = true;
            c.edge_size_range = (0, 3);
        });
        let before = intersection_graph(&g).unwrap();
        // Grow a couple of arbitrary edges by one or two vertices.
        let mut plan = BTreeMap::new();
        for (i, id) in g.edge_ids().enumerate() {
            if i % 2 == 0 {
                plan.insert(id.clone(), g.edge_members_at(i).len() + 1 + i % 2);
            }
        }
        let enlarged = enlarge_edges(&g, &EnlargementPlan::PerEdge(plan)).unwrap();
        let after = intersection_graph(&enlarged).unwrap();
        assert!(structurally_equal_up_to_edge_labels(&before, &after));
    }
}

#[test]
fn signed_graph_round_trip_on_generated_instances() {
    let mut stream = SplitMix64::new(0x0574);
    for _ in 0..200 {
        let g = generated(stream.next_u64(), |c| {
            c.constraints.k_uniform = Some(2);
            c.constraints.linear = true;
        });
        let signed = underlying_signed_graph(&g).unwrap();
        let oriented = orient_signed_graph(&signed);
        // The canonical orientation may differ from the original signs, but
        // the signed graph it encodes is the same.
        assert_eq!(underlying_signed_graph(&oriented).unwrap(), signed);
        // And every adjacency sign matches the edge sign.
        for edge in signed.edges() {
            let (a, b) = edge.endpoints();
            let sign = oriented
                .adjacency_sign(edge.id(), oriented.vertex_at(a), oriented.vertex_at(b))
                .unwrap();
            assert_eq!(sign, edge.sign());
        }
    }
}

#[test]
fn generator_honors_each_constraint_flag_over_a_thousand_draws() {
    let mut stream = SplitMix64::new(0x0575);
    for _ in 0..1000 {
        let seed = stream.next_u64();

        let g = generated(seed, |c| {
            c.constraints.linear = true;
            c.edge_size_range = (0, 4);
        });
        assert!(g.is_linear());

        let g = generated(seed, |c| c.constraints.k_uniform = Some(3));
        assert_eq!(g.uniformity(), Some(3));

        let g = generated(seed, |c| c.constraints.r_regular = Some(2));
        assert_eq!(g.regularity(), Some(2));

        let g = generated(seed, |c| c.constraints.all_positive = true);
        assert!(g.incidences().iter().all(|i| i.sign == Sign::Plus));
    }
}
