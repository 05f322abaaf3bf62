//! Randomized invariants over small connected graphs.

use proptest::prelude::*;

use rvc_core::colorize::{auto_color, VertexColoring};
use rvc_core::graph::{diameter, distance_layers, eccentricity, shortest_path_to_set, Graph};
use rvc_core::io::{edge_list_to_string, parse_edge_list};
use rvc_core::verify::{exact_rvc, is_rvc};

/// Connected graph on 2..=max_n vertices: a random spanning tree plus a
/// random sprinkling of extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec(proptest::bool::weighted(0.25), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges = std::collections::BTreeSet::new();
            for (i, pick) in parents.iter().enumerate() {
                let child = i + 1;
                edges.insert((pick.index(child), child));
            }
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if extra[k] {
                        edges.insert((u, v));
                    }
                    k += 1;
                }
            }
            let edges: Vec<(usize, usize)> = edges.into_iter().collect();
            Graph::from_edges(n, &edges).expect("generated edges are simple")
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn layers_partition_vertices_and_edges_stay_close(
        g in connected_graph(12),
        source_pick in any::<prop::sample::Index>(),
    ) {
        let source = vec![source_pick.index(g.n())];
        let layers = distance_layers(&g, &source).unwrap();
        prop_assert!(layers.covers_all());
        let total: usize = layers.layers().iter().map(Vec::len).sum();
        prop_assert_eq!(total, g.n());
        for (k, layer) in layers.layers().iter().enumerate() {
            for &v in layer {
                prop_assert_eq!(layers.layer_of(v), Some(k));
            }
        }
        for (u, v) in g.edges() {
            let du = layers.layer_of(u).unwrap() as isize;
            let dv = layers.layer_of(v).unwrap() as isize;
            prop_assert!((du - dv).abs() <= 1, "edge ({}, {}) jumps layers", u, v);
        }
    }

    #[test]
    fn diameter_is_the_largest_eccentricity(g in connected_graph(12)) {
        let diam = diameter(&g).unwrap();
        let mut best = 0;
        for v in g.vertices() {
            let ecc = eccentricity(&g, v).unwrap();
            prop_assert!(diam >= ecc);
            best = best.max(ecc);
        }
        prop_assert_eq!(diam, best);
    }

    #[test]
    fn path_to_set_matches_layer_index(
        g in connected_graph(12),
        picks in proptest::collection::vec(any::<prop::sample::Index>(), 2),
    ) {
        let t0 = picks[0].index(g.n());
        let t1 = picks[1].index(g.n());
        let target = vec![t0, t1];
        let layers = distance_layers(&g, &target).unwrap();
        for v in g.vertices() {
            if target.contains(&v) {
                continue;
            }
            let path = shortest_path_to_set(&g, v, &target).unwrap();
            prop_assert_eq!(path.len() - 1, layers.layer_of(v).unwrap());
            prop_assert!(path[..path.len() - 1].iter().all(|x| !target.contains(x)));
            prop_assert!(target.contains(path.last().unwrap()));
            for w in path.windows(2) {
                prop_assert!(g.has_edge(w[0], w[1]));
            }
        }
    }

    #[test]
    fn edge_list_round_trips(g in connected_graph(12)) {
        let parsed = parse_edge_list(&edge_list_to_string(&g)).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn refining_a_valid_coloring_keeps_it_valid(
        g in connected_graph(9),
        split_pick in any::<prop::sample::Index>(),
        seed in 0u64..50,
    ) {
        let delta = g.min_degree();
        let outcome = auto_color(&g, delta, seed).unwrap();
        let base = outcome.best.coloring;
        prop_assert!(is_rvc(&g, &base).unwrap().ok);
        let fresh = base.colors().iter().max().unwrap() + 1;
        let mut refined = base.colors().to_vec();
        refined[split_pick.index(g.n())] = fresh;
        prop_assert!(is_rvc(&g, &VertexColoring::new(refined)).unwrap().ok);
    }

    #[test]
    fn pipeline_palette_upper_bounds_the_optimum(
        g in connected_graph(8),
        seed in 0u64..50,
    ) {
        let outcome = auto_color(&g, g.min_degree(), seed).unwrap();
        prop_assert!(outcome.best.verified);
        let optimum = exact_rvc(&g).unwrap();
        prop_assert!(outcome.best.colors_used >= optimum);
        let diam = diameter(&g).unwrap();
        if !g.is_complete() {
            prop_assert!(outcome.best.colors_used + 1 >= diam.max(1));
        }
    }

    #[test]
    fn auto_color_is_reproducible(g in connected_graph(10), seed in 0u64..1000) {
        let delta = g.min_degree();
        let a = auto_color(&g, delta, seed).unwrap();
        let b = auto_color(&g, delta, seed).unwrap();
        prop_assert_eq!(a.best.coloring, b.best.coloring);
        prop_assert_eq!(a.best.colors_used, b.best.colors_used);
        prop_assert_eq!(a.best.resample_count, b.best.resample_count);
    }
}
