//! Definition-level reference implementations.
//!
//! Every routine here recomputes an invariant straight from its definition,
//! with none of the shortcuts the production solvers in [`crate::metric`]
//! take: distances come from Floyd-Warshall instead of BFS, resolving-set
//! checks compare raw distance vectors pairwise over *all* vertex pairs,
//! searches sweep plain bitmasks with no greedy seeding or early exits, and
//! the resolving number is found by trying every set size from the bottom.
//!
//! They are slow on purpose. Their only job is to give the test suite an
//! independent route to the same numbers, so that an optimization bug in the
//! fast path cannot hide. Keep them free of calls into [`crate::metric`] and
//! [`crate::distance`].

// Index loops here mirror the textbook recurrences on purpose.
#![allow(clippy::needless_range_loop)]

use crate::graph::Graph;

const INF: usize = usize::MAX / 2;

/// All-pairs distances by Floyd-Warshall. `None` if the graph is
/// disconnected.
pub fn distances(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for u in g.neighbors(v).iter() {
            d[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    if d.iter().any(|row| row.iter().any(|&x| x >= INF)) {
        return None;
    }
    Some(d)
}

/// Does the vertex set encoded by `mask` resolve the graph? Checked by
/// comparing distance vectors of every pair of distinct vertices.
pub fn is_resolving(d: &[Vec<usize>], mask: u64) -> bool {
    let n = d.len();
    for u in 0..n {
        for v in u + 1..n {
            let mut separated = false;
            for w in 0..n {
                if mask & (1 << w) != 0 && d[w][u] != d[w][v] {
                    separated = true;
                    break;
                }
            }
            if !separated {
                return false;
            }
        }
    }
    true
}

fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0..(1u64 << n)).filter(move |m| m.count_ones() as usize == k)
}

/// Metric dimension by definition: the smallest `k` for which some
/// `k`-subset resolves. The single-vertex graph is assigned dimension 1 so
/// that every graph has a non-empty basis.
pub fn metric_dimension(g: &Graph) -> Option<usize> {
    let d = distances(g)?;
    let n = g.n();
    if n == 1 {
        return Some(1);
    }
    (1..n).find(|&k| masks_of_size(n, k).any(|m| is_resolving(&d, m)))
}

/// Resolving number by definition: the smallest `k` for which *every*
/// `k`-subset resolves. Assigned 1 on the single-vertex graph.
pub fn resolving_number(g: &Graph) -> Option<usize> {
    let d = distances(g)?;
    let n = g.n();
    if n == 1 {
        return Some(1);
    }
    (1..n).find(|&k| masks_of_size(n, k).all(|m| is_resolving(&d, m)))
}

/// All minimum resolving sets, as bitmasks in ascending numeric order.
pub fn all_bases(g: &Graph) -> Option<Vec<u64>> {
    let n = g.n();
    if n == 1 {
        return Some(vec![1]);
    }
    let d = distances(g)?;
    let beta = metric_dimension(g)?;
    Some(
        masks_of_size(n, beta)
            .filter(|&m| is_resolving(&d, m))
            .collect(),
    )
}

/// Basis number by definition: the largest `r` such that every `r`-subset of
/// the vertices extends to some basis.
pub fn basis_number(g: &Graph) -> Option<usize> {
    let n = g.n();
    let bases = all_bases(g)?;
    let beta = bases[0].count_ones() as usize;
    let mut bas = 0;
    for r in 1..=beta {
        let all_covered =
            masks_of_size(n, r).all(|m| bases.iter().any(|&b| m & !b == 0));
        if !all_covered {
            break;
        }
        bas = r;
    }
    Some(bas)
}

/// Randomly k-dimensional by definition: every subset of size `beta`
/// resolves, i.e. every minimum-cardinality candidate is in fact a basis.
pub fn is_randomly_k_dimensional(g: &Graph) -> Option<bool> {
    let n = g.n();
    if n == 1 {
        return Some(true);
    }
    let d = distances(g)?;
    let beta = metric_dimension(g)?;
    Some(masks_of_size(n, beta).all(|m| is_resolving(&d, m)))
}

/// Clique number by full subset enumeration. Exponential; intended for
/// graphs of roughly a dozen vertices.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    'masks: for m in 1u64..(1 << n) {
        let size = m.count_ones() as usize;
        if size <= best {
            continue;
        }
        for u in 0..n {
            if m & (1 << u) == 0 {
                continue;
            }
            for v in u + 1..n {
                if m & (1 << v) != 0 && !g.has_edge(u, v) {
                    continue 'masks;
                }
            }
        }
        best = size;
    }
    best
}

/// Number of connected labeled graphs on `n` vertices, by the classical
/// recurrence: subtract, over the component containing vertex 1, all ways to
/// complete the rest arbitrarily.
///
/// c(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1, k-1) * c(k) * 2^C(n-k, 2)
pub fn connected_labeled_graph_count(n: usize) -> u128 {
    fn choose(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        let mut r: u128 = 1;
        for i in 0..k {
            r = r * (n - i) as u128 / (i + 1) as u128;
        }
        r
    }
    fn pairs(n: usize) -> u32 {
        (n * n.saturating_sub(1) / 2) as u32
    }
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let mut total = 1u128 << pairs(m);
        for k in 1..m {
            total -= choose(m - 1, k - 1) * c[k] * (1u128 << pairs(m - k));
        }
        c[m] = total;
    }
    c[n]
}
