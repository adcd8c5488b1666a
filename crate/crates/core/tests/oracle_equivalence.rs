//! Dual-route checks: every optimized solver must agree with the
//! definition-level reference implementations in `resolvent::oracle` on an
//! exhaustive corpus of small connected graphs.
//!
//! The fast paths and the oracle share no algorithmic code: BFS vs
//! Floyd-Warshall for distances, equidistant-class maximum vs full subset
//! sweep for the resolving number, greedy-seeded lexicographic search vs
//! plain bitmask sweep for the dimension.

mod common;

use common::*;
use resolvent::corpus::enumerate_connected;
use resolvent::metric::{
    all_bases, basis_number, is_randomly_k_dimensional, metric_dimension, resolving_number,
};
use resolvent::summary::{clique_number, twin_pairs};
use resolvent::{oracle, DistanceMatrix, Graph};

fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    enumerate_connected(n).unwrap().map(|rec| rec.graph)
}

#[test]
fn enumeration_count_matches_recurrence() {
    for n in 1..=6 {
        let count = enumerate_connected(n).unwrap().count() as u128;
        assert_eq!(
            count,
            oracle::connected_labeled_graph_count(n),
            "connected labeled graphs on {n} vertices"
        );
    }
}

#[test]
fn resolving_number_closed_form_matches_definition_up_to_n6() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let fast = resolving_number(&DistanceMatrix::new(&g).unwrap()).0;
            let slow = oracle::resolving_number(&g).unwrap();
            assert_eq!(fast, slow, "res mismatch on {g:?}");
        }
    }
}

#[test]
fn metric_dimension_matches_definition_up_to_n6() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let fast = metric_dimension(&DistanceMatrix::new(&g).unwrap()).0;
            let slow = oracle::metric_dimension(&g).unwrap();
            assert_eq!(fast, slow, "beta mismatch on {g:?}");
        }
    }
}

#[test]
fn basis_number_matches_definition_up_to_n5() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let dm = DistanceMatrix::new(&g).unwrap();
            assert_eq!(
                basis_number(&dm),
                oracle::basis_number(&g).unwrap(),
                "bas mismatch on {g:?}"
            );
            // Same bases, set-for-set.
            let fast: Vec<u64> = {
                let mut masks: Vec<u64> = all_bases(&dm).iter().map(|b| b.bits()).collect();
                masks.sort_unstable();
                masks
            };
            assert_eq!(fast, oracle::all_bases(&g).unwrap(), "bases mismatch on {g:?}");
        }
    }
}

#[test]
fn randomly_k_decision_matches_definition_up_to_n5() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let fast = is_randomly_k_dimensional(&DistanceMatrix::new(&g).unwrap()).0;
            let slow = oracle::is_randomly_k_dimensional(&g).unwrap();
            assert_eq!(fast, slow, "randomly-k mismatch on {g:?}");
        }
    }
}

#[test]
fn bfs_distances_match_floyd_warshall() {
    let mut graphs: Vec<Graph> = (1..=5).flat_map(connected_graphs).collect();
    graphs.extend([petersen(), complete_bipartite(3, 4), star(7)]);
    for g in graphs {
        let dm = DistanceMatrix::new(&g).unwrap();
        let fw = oracle::distances(&g).unwrap();
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(dm.dist(u, v), fw[u][v], "d({u},{v}) on {g:?}");
            }
        }
    }
}

#[test]
fn distance_matrix_axioms_up_to_n6() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            let dm = DistanceMatrix::new(&g).unwrap();
            for u in 0..n {
                assert_eq!(dm.dist(u, u), 0);
                for v in 0..n {
                    assert_eq!(dm.dist(u, v), dm.dist(v, u));
                    if u != v {
                        assert!(dm.dist(u, v) >= 1);
                    }
                    for w in 0..n {
                        assert!(dm.dist(u, v) <= dm.dist(u, w) + dm.dist(w, v));
                    }
                }
            }
        }
    }
}

#[test]
fn clique_number_matches_enumeration() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            assert_eq!(clique_number(&g), oracle::clique_number(&g), "{g:?}");
        }
    }
    assert_eq!(clique_number(&petersen()), oracle::clique_number(&petersen()));
}

/// Twins agree with every external vertex about distances; exhaustive over
/// the full corpus, including n = 7.
#[test]
fn twins_are_distance_equivalent_up_to_n7() {
    for n in 1..=7 {
        for g in connected_graphs(n) {
            let pairs = twin_pairs(&g);
            if pairs.is_empty() {
                continue;
            }
            let dm = DistanceMatrix::new(&g).unwrap();
            for (u, v) in pairs {
                for w in g.vertices() {
                    if w != u && w != v {
                        assert_eq!(dm.dist(w, u), dm.dist(w, v), "twins ({u},{v}) in {g:?}");
                    }
                }
            }
        }
    }
}
