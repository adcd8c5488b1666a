//! Graph constructors shared by the integration tests.
//!
//! Built directly on `Graph::new` so tests of the solvers do not depend on
//! the corpus generators they are meant to validate.

#![allow(dead_code)]

use resolvent::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Star with `leaves` leaves: vertex 0 is the center, total order `leaves+1`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).unwrap()
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..m {
        for v in m..m + n {
            edges.push((u, v));
        }
    }
    Graph::new(m + n, &edges).unwrap()
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i to i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// Two triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// Convenience: all distinct unordered pairs `(u, v)` with `u < v < n`.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}
