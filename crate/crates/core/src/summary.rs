//! Structural facts about a graph: degrees, clique number, cut vertices,
//! 2-connectivity, and twin pairs.

use crate::error::Error;
use crate::graph::Graph;
use crate::set::VertexSet;

/// Precomputed structural profile of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSummary {
    pub n: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub clique_number: usize,
    pub cut_vertices: VertexSet,
    pub is_two_connected: bool,
    pub twin_pairs: Vec<(usize, usize)>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Result<GraphSummary, Error> {
        let cut = cut_vertices(g)?;
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        Ok(GraphSummary {
            n: g.n(),
            edge_count: g.edge_count(),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            clique_number: clique_number(g),
            cut_vertices: cut,
            is_two_connected: g.n() >= 3 && !g.is_complete() && cut.is_empty(),
            twin_pairs: twin_pairs(g),
        })
    }
}

/// Vertices whose removal disconnects the graph, found by deleting each
/// vertex in turn and re-checking connectivity.
pub fn cut_vertices(g: &Graph) -> Result<VertexSet, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut cut = VertexSet::EMPTY;
    for v in g.vertices() {
        let rest = g.vertex_set().without(v);
        if g.components_within(rest).len() > 1 {
            cut.insert(v);
        }
    }
    Ok(cut)
}

pub fn has_no_cut_vertex(g: &Graph) -> Result<bool, Error> {
    Ok(cut_vertices(g)?.is_empty())
}

/// 2-connectivity in the strict sense used throughout this crate: order at
/// least 3, not complete, and free of cut vertices. Complete graphs are
/// excluded by definition even though they have no cut vertex; callers that
/// only care about the latter should use [`has_no_cut_vertex`].
pub fn is_two_connected(g: &Graph) -> Result<bool, Error> {
    Ok(g.n() >= 3 && !g.is_complete() && cut_vertices(g)?.is_empty())
}

/// Maximum clique size, by branch and bound.
///
/// Candidates are greedily colored at each node; a clique inside the
/// candidate set can use each color class at most once, so the color count
/// caps what the branch can still achieve.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    expand(g, 0, g.vertex_set(), &mut best);
    best
}

fn expand(g: &Graph, clique_size: usize, candidates: VertexSet, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(clique_size);
        return;
    }
    // Greedy coloring: each class is an independent set.
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut colored: Vec<(usize, usize)> = Vec::with_capacity(candidates.len());
    for v in candidates.iter() {
        let c = classes
            .iter()
            .position(|cl| cl.intersection(g.neighbors(v)).is_empty())
            .unwrap_or_else(|| {
                classes.push(VertexSet::EMPTY);
                classes.len() - 1
            });
        classes[c].insert(v);
        colored.push((v, c + 1));
    }
    colored.sort_by_key(|&(_, c)| c);

    let mut remaining = candidates;
    for &(v, color) in colored.iter().rev() {
        // Everything still unprocessed has color <= this one.
        if clique_size + color <= *best {
            return;
        }
        expand(
            g,
            clique_size + 1,
            remaining.without(v).intersection(g.neighbors(v)),
            best,
        );
        remaining.remove(v);
    }
}

/// Pairs `u < v` whose neighborhoods agree outside the pair itself:
/// `N(u) \ {v} == N(v) \ {u}`. Covers both adjacent and non-adjacent twins.
/// Returned in ascending lexicographic order.
pub fn twin_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.n() {
            if g.neighbors(u).without(v) == g.neighbors(v).without(u) {
                out.push((u, v));
            }
        }
    }
    out
}
