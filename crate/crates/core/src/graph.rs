//! Simple undirected graphs on at most 64 vertices.

use crate::error::Error;
use crate::set::VertexSet;

/// Hard cap on the number of vertices, chosen so every vertex set fits in
/// one `u64` mask.
pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph with vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex; parallel edges in
/// the input collapse into the mask and self-loops are rejected outright.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list over `0..n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let edge_count = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        Ok(Graph { n, adj, edge_count })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Full vertex set `{0, .., n-1}`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::all(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0, self.vertex_set()) == self.vertex_set()
    }

    /// Vertices reachable from `start` inside the induced subgraph on `within`.
    /// `start` must be a member of `within`.
    fn reachable_from(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut reached = VertexSet::singleton(start);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(reached);
            reached = reached.union(frontier);
        }
        reached
    }

    /// Connected components of the subgraph induced on `within`, each as a
    /// vertex set, ordered by their smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = within;
        while let Some(start) = left.first() {
            let comp = self.reachable_from(start, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_cycle() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(4, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(3), 2);
        assert!(g.is_connected());
        assert!(!g.is_complete());
    }

    #[test]
    fn parallel_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::new(3, &[(0, 0)]),
            Err(Error::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
        assert_eq!(Graph::new(65, &[]), Err(Error::CapacityExceeded { n: 65 }));
    }

    #[test]
    fn capacity_boundary_is_inclusive() {
        let edges: Vec<(usize, usize)> = (0..63).map(|i| (i, i + 1)).collect();
        let g = Graph::new(64, &edges).unwrap();
        assert!(g.is_connected());
    }

    #[test]
    fn connectivity_and_components() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let comps = g.components_within(g.vertex_set());
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3]);

        let k1 = Graph::new(1, &[]).unwrap();
        assert!(k1.is_connected());
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::new(4, &[(2, 3), (0, 2), (0, 1)]).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (2, 3)]);
    }
}
