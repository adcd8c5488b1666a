//! Pins down the unique labeled 5-vertex graph with a prescribed basis
//! structure: landmark pair {0,1} yields the representation table below,
//! {0,1}, {0,2} and {3,4} are all bases, {0,3} is not even resolving, and
//! the gap between basis number (1) and resolving number (3) brackets the
//! dimension (2) strictly on both sides.
//!
//! The search derives the graph from those facts alone; `FIXTURE_EDGES`
//! records the answer so regressions are loud.

mod common;

use resolvent::corpus::enumerate_connected;
use resolvent::metric::{
    all_bases, basis_number, is_resolving, metric_dimension, representation, resolving_number,
};
use resolvent::{DistanceMatrix, Graph, VertexSet};

pub const FIXTURE_EDGES: [(usize, usize); 6] =
    [(0, 1), (0, 2), (0, 4), (1, 2), (2, 3), (3, 4)];

fn matches_all_quoted_facts(g: &Graph) -> bool {
    let dm = match DistanceMatrix::new(g) {
        Ok(dm) => dm,
        Err(_) => return false,
    };
    let w: VertexSet = [0, 1].into_iter().collect();
    let table: [&[usize]; 5] = [&[0, 1], &[1, 0], &[1, 1], &[2, 2], &[1, 2]];
    for (v, want) in table.iter().enumerate() {
        match representation(&dm, v, w) {
            Ok(r) if r == *want => {}
            _ => return false,
        }
    }
    if is_resolving(&dm, [0, 3].into_iter().collect()) {
        return false;
    }
    if metric_dimension(&dm).0 != 2 {
        return false;
    }
    let bases = all_bases(&dm);
    for quoted in [[0usize, 1], [0, 2], [3, 4]] {
        let s: VertexSet = quoted.into_iter().collect();
        if !bases.contains(&s) {
            return false;
        }
    }
    basis_number(&dm) == 1 && resolving_number(&dm).0 == 3
}

#[test]
fn the_search_finds_exactly_the_recorded_graph() {
    let matches: Vec<Graph> = enumerate_connected(5)
        .unwrap()
        .map(|rec| rec.graph)
        .filter(matches_all_quoted_facts)
        .collect();
    assert_eq!(matches.len(), 1, "expected a unique labeled match");
    let expected = Graph::new(5, &FIXTURE_EDGES).unwrap();
    assert_eq!(matches[0], expected);
}

#[test]
fn recorded_fixture_satisfies_every_quoted_fact() {
    let g = Graph::new(5, &FIXTURE_EDGES).unwrap();
    assert!(matches_all_quoted_facts(&g));

    // The three quoted bases are the tip of an asymmetric structure: vertex
    // coverage by bases is total (bas = 1) yet {0,3} resolves nothing.
    let dm = DistanceMatrix::new(&g).unwrap();
    let covered: VertexSet = all_bases(&dm)
        .iter()
        .fold(VertexSet::EMPTY, |acc, b| acc.union(*b));
    assert_eq!(covered, g.vertex_set());
}
