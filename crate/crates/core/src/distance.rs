//! All-pairs shortest-path distances via repeated breadth-first search.

use crate::error::Error;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Hop distances between all vertex pairs of a connected graph.
///
/// Distances are exact BFS hop counts; with at most 64 vertices every entry
/// fits in a byte. Construction fails on disconnected input, so a matrix in
/// hand is proof of connectivity.
#[derive(Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<DistanceMatrix, Error> {
        let n = g.n();
        let mut dist = vec![0u8; n * n];
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            let mut reached = VertexSet::singleton(s);
            let mut frontier = reached;
            let mut d = 0u8;
            while !frontier.is_empty() {
                for v in frontier.iter() {
                    row[v] = d;
                }
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(g.neighbors(v));
                }
                frontier = next.difference(reached);
                reached = reached.union(frontier);
                d += 1;
            }
            if reached != g.vertex_set() {
                return Err(Error::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub(crate) fn dist_u8(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.n + v]
    }

    /// Row of distances from `v`, indexed by target vertex.
    pub fn row(&self, v: usize) -> &[u8] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.row(v).iter().copied().max().unwrap_or(0) as usize
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn cycle_distances() {
        let dm = DistanceMatrix::new(&cycle(5)).unwrap();
        assert_eq!(dm.dist(0, 0), 0);
        assert_eq!(dm.dist(0, 2), 2);
        assert_eq!(dm.dist(0, 4), 1);
        assert_eq!(dm.dist(2, 4), 2);
        assert_eq!(dm.diameter(), 2);
    }

    #[test]
    fn path_distances_and_eccentricity() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        assert_eq!(dm.dist(0, 4), 4);
        assert_eq!(dm.eccentricity(2), 2);
        assert_eq!(dm.eccentricity(0), 4);
        assert_eq!(dm.diameter(), 4);
    }

    #[test]
    fn complete_graph_is_diameter_one() {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        let dm = DistanceMatrix::new(&Graph::new(6, &edges).unwrap()).unwrap();
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(dm.dist(u, v), usize::from(u != v));
            }
        }
    }

    #[test]
    fn single_vertex() {
        let dm = DistanceMatrix::new(&Graph::new(1, &[]).unwrap()).unwrap();
        assert_eq!(dm.dist(0, 0), 0);
        assert_eq!(dm.diameter(), 0);
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(DistanceMatrix::new(&g), Err(Error::Disconnected)));
    }
}
