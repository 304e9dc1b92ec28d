mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eqdeg_core::constructions::*;
use eqdeg_core::paths::{
    equal_degree_pairs, has_equal_degree_p3, has_equal_degree_path, path_exists_exact,
};
use eqdeg_core::search::{
    class_forms, compute_p, enumerate_graphs, lower_bound_from_constructions,
};
use eqdeg_core::{canonical_form, is_isomorphic, Graph, SearchConfig, Strategy};

use common::*;

fn cfg(workers: usize) -> SearchConfig {
    SearchConfig {
        workers,
        ..SearchConfig::default()
    }
}

#[test]
fn class_sets_match_brute_force_up_to_five() {
    for n in 1..=5 {
        let perms = permutations(n);
        let ours: std::collections::HashSet<u64> =
            class_forms(n, Strategy::CanonicalAugmentation, 2)
                .unwrap()
                .iter()
                .map(|f| brute_canonical_mask(&f.to_graph(), &perms))
                .collect();
        assert_eq!(ours, labeled_classes(n), "order {n}");
    }
}

#[test]
fn isomorphism_agrees_with_permutation_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let n = rng.gen_range(1..=6);
        let g = Graph::random(n, 0.5, &mut rng);
        let h = if rng.gen_bool(0.5) {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            g.relabeled(&p)
        } else {
            Graph::random(n, 0.5, &mut rng)
        };
        assert_eq!(
            is_isomorphic(&g, &h),
            brute_isomorphic(&g, &h),
            "{g:?} vs {h:?}"
        );
    }
}

#[test]
fn canonical_form_ignores_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 1..=8 {
        for _ in 0..60 {
            let g = Graph::random(n, rng.gen_range(0.1..0.9), &mut rng);
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            assert_eq!(canonical_form(&g), canonical_form(&g.relabeled(&p)));
        }
    }
    // larger, highly regular inputs
    for g in [
        bipartite_oracle(7, 7),
        half_graph_oracle(10),
        Graph::complete(20).complement(),
    ] {
        let mut p: Vec<usize> = (0..g.order()).collect();
        p.shuffle(&mut rng);
        assert_eq!(canonical_form(&g), canonical_form(&g.relabeled(&p)));
    }
}

#[test]
fn checker_matches_unpruned_search_on_all_small_graphs() {
    for n in 2..=6 {
        enumerate_graphs(n, &cfg(2), |g| {
            for ell in 1..n {
                let ours = has_equal_degree_path(g, ell).unwrap();
                assert_eq!(
                    ours.is_some(),
                    naive_equal_degree_path(g, ell),
                    "{g:?} len {ell}"
                );
                if let Some(w) = ours {
                    assert!(w.is_valid_for(g, ell));
                }
            }
        })
        .unwrap();
    }
}

#[test]
fn p3_fast_path_matches_general_search() {
    for n in 4..=7 {
        enumerate_graphs(n, &cfg(2), |g| {
            assert_eq!(
                has_equal_degree_p3(g),
                has_equal_degree_path(g, 3).unwrap(),
                "{g:?}"
            );
        })
        .unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let n = rng.gen_range(4..=30);
        let g = Graph::random(n, rng.gen_range(0.02..0.6), &mut rng);
        assert_eq!(
            has_equal_degree_p3(&g),
            has_equal_degree_path(&g, 3).unwrap(),
            "{g:?}"
        );
    }
}

#[test]
fn bipartite_graphs_have_no_odd_cycle_closing_paths() {
    // In a bipartite graph a path of length ℓ joins opposite sides iff ℓ is odd.
    let g = bipartite_oracle(3, 5);
    for u in 0..8 {
        for w in 0..8 {
            if u == w {
                continue;
            }
            let same_side = (u < 3) == (w < 3);
            for ell in 1..8 {
                if same_side == (ell % 2 == 1) {
                    assert!(!path_exists_exact(&g, u, w, ell).unwrap());
                }
            }
        }
    }
    assert_eq!(equal_degree_pairs(&g).len(), 3 + 10);
}

#[test]
fn construction_edge_counts_follow_their_formulas() {
    for n in 1..=200 {
        assert_eq!(half_graph(n).unwrap().edge_count(), n * (n + 1) / 2);
        assert_eq!(
            complete_bipartite(n, n + 1).unwrap().edge_count(),
            n * (n + 1)
        );
        if n >= 2 {
            assert_eq!(k_nn_minus(n).unwrap().edge_count(), n * n - 1);
            assert_eq!(tight_triangle_a(n).unwrap().edge_count(), n * n - 1);
        }
        if n >= 3 {
            assert_eq!(tight_triangle_b(n).unwrap().edge_count(), n * n - 1);
        }
        if n % 2 == 0 {
            let g = modified_half_graph(n).unwrap();
            assert_eq!(g.edge_count(), n * (n + 1) / 2);
        }
    }
    for m in 1..=15 {
        let g = clique_union_complement(m).unwrap();
        assert_eq!(g.order(), m * (m + 1) / 2);
        assert!(g.is_well_formed());
    }
}

#[test]
fn formula_edge_count_matches_builder() {
    let specs = [
        "complete_bipartite:4,9",
        "half_graph:7",
        "modified_half_graph:6",
        "clique_union_complement:5",
        "k_nn_minus:5",
        "tight_triangle_a:6",
        "tight_triangle_b:6",
    ];
    for text in specs {
        let spec: ConstructionSpec = text.parse().unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.edge_count(), spec.formula_edge_count(), "{text}");
        assert_eq!(g.order(), spec.order(), "{text}");
    }
}

#[test]
fn modified_half_graphs_avoid_equal_degree_two_paths() {
    for n in (2..=30).step_by(2) {
        let g = modified_half_graph(n).unwrap();
        assert!(has_equal_degree_path(&g, 2).unwrap().is_none(), "n={n}");
        if n >= 4 {
            assert!(!is_isomorphic(&g, &half_graph(n).unwrap()));
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for (ell, n) in [(1, 6), (2, 7), (3, 7), (4, 7)] {
        let base = compute_p(ell, n, &cfg(1)).unwrap().payload_json();
        for w in [2, 8] {
            assert_eq!(
                compute_p(ell, n, &cfg(w)).unwrap().payload_json(),
                base,
                "p_{ell}({n}) with {w} workers"
            );
        }
    }
}

#[test]
fn small_exact_values() {
    assert_eq!(compute_p(2, 6, &cfg(2)).unwrap().value, 6);
    assert_eq!(compute_p(1, 6, &cfg(2)).unwrap().value, 11);
    let r = compute_p(1, 4, &cfg(2)).unwrap();
    assert_eq!(r.value, 3);
    assert!(r
        .witness_graphs()
        .unwrap()
        .iter()
        .any(|g| is_isomorphic(g, &bipartite_oracle(1, 3))));
    assert!(compute_p(3, 5, &cfg(2)).unwrap().value >= 6);
}

#[test]
fn every_reported_witness_is_extremal_and_valid() {
    for (ell, n) in [(1, 6), (2, 6), (3, 7)] {
        let r = compute_p(ell, n, &cfg(2)).unwrap();
        let ws = r.witness_graphs().unwrap();
        assert!(!ws.is_empty());
        for g in ws {
            assert_eq!(g.edge_count(), r.value);
            assert!(!naive_equal_degree_path(&g, ell));
        }
    }
}

#[test]
fn lower_bounds_never_exceed_exact_values() {
    for n in 3..=8 {
        for ell in 1..n.min(5) {
            let lb = lower_bound_from_constructions(ell, n).unwrap();
            let exact = compute_p(ell, n, &cfg(2)).unwrap();
            assert!(
                lb.value <= exact.value,
                "p_{ell}({n}): {} > {}",
                lb.value,
                exact.value
            );
            assert!(!lb.exact);
        }
    }
}

#[test]
fn property_is_not_monotone() {
    let k33 = bipartite_oracle(3, 3).extended(0);
    let k34 = bipartite_oracle(3, 4);
    assert!(k33.is_subgraph_of(&k34));
    assert!(has_equal_degree_path(&k33, 3).unwrap().is_some());
    assert!(has_equal_degree_path(&k34, 3).unwrap().is_none());
}
