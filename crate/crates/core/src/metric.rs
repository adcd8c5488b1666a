//! The metric invariant family: metric dimension, resolving number, basis
//! number, and the randomly-k-dimensional decision.
//!
//! Vocabulary, for a connected graph G on vertex set V:
//!
//! * The representation of v with respect to an ordered landmark set W is
//!   the vector of hop distances from v to each landmark.
//! * W resolves G when all n representations are pairwise distinct.
//! * beta(G), the metric dimension, is the minimum size of a resolving set;
//!   a minimum resolving set is a basis.
//! * res(G), the resolving number, is the minimum k such that *every*
//!   k-subset of V resolves G.
//! * bas(G), the basis number, is the maximum r such that every r-subset of
//!   V extends to some basis.
//! * G is randomly k-dimensional when every beta-subset is a basis, which
//!   happens exactly when beta(G) = res(G), and exactly when bas(G) = beta(G).
//!
//! The one-vertex graph gets the degenerate convention
//! beta = res = bas = 1, so every graph has a non-empty basis; it is the
//! only graph where res exceeds n - 1.
//!
//! Two facts carry the load here. First, a set W fails to resolve exactly
//! the pairs {u, v} with W contained in E(u, v), the class of vertices
//! equidistant from u and v; hence res(G) - 1 equals the largest |E(u, v)|,
//! and [`resolving_number`] is polynomial while the dimension search is not.
//! Second, distinct landmarks can never share a representation (each holds
//! the only zero in its own coordinate), so resolution checks only need to
//! compare vertices outside W.

use std::time::{Duration, Instant};

use crate::distance::DistanceMatrix;
use crate::error::Error;
use crate::graph::Graph;
use crate::set::{k_subsets, VertexSet};

/// Distance vector of one vertex relative to an ordered landmark set.
pub type Representation = Vec<usize>;

/// A largest non-resolving set together with a pair of vertices it fails
/// to separate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonResolvingWitness {
    pub set: VertexSet,
    pub pair: (usize, usize),
}

/// Everything [`solve`] computes for one graph.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub n: usize,
    /// Metric dimension.
    pub beta: usize,
    /// Resolving number.
    pub res: usize,
    /// Basis number.
    pub bas: usize,
    /// Dimension parameter, always equal to `beta`.
    pub k: usize,
    pub is_randomly_k: bool,
    /// Lexicographically first basis.
    pub sample_basis: VertexSet,
    pub all_bases_count: usize,
    pub non_resolving_witness: Option<NonResolvingWitness>,
    pub elapsed: Duration,
}

/// Representation of `v` with respect to `w`, coordinates in ascending
/// landmark order.
pub fn representation(
    dm: &DistanceMatrix,
    v: usize,
    w: VertexSet,
) -> Result<Representation, Error> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(w.iter().map(|x| dm.dist(x, v)).collect())
}

/// Does some landmark in `w` place `u` and `v` at different distances?
pub fn resolves_pair(dm: &DistanceMatrix, w: VertexSet, u: usize, v: usize) -> bool {
    w.iter().any(|x| dm.dist(x, u) != dm.dist(x, v))
}

/// Vertices equidistant from `u` and `v`. Neither endpoint qualifies:
/// each is at distance zero only from itself.
pub fn equidistant_class(dm: &DistanceMatrix, u: usize, v: usize) -> VertexSet {
    (0..dm.n())
        .filter(|&w| dm.dist(w, u) == dm.dist(w, v))
        .collect()
}

pub fn is_resolving(dm: &DistanceMatrix, w: VertexSet) -> bool {
    find_unresolved_pair(dm, w).is_none()
}

/// First pair (in ascending vertex order) that `w` fails to separate.
///
/// Landmarks are skipped: a landmark's representation holds the only zero
/// in its own coordinate, so it can never collide with anything.
pub fn find_unresolved_pair(dm: &DistanceMatrix, w: VertexSet) -> Option<(usize, usize)> {
    let n = dm.n();
    if w.len() <= 10 {
        // Distances fit in 6 bits (n <= 64), so up to ten coordinates pack
        // into one u64 key. This is the path every exhaustive search takes.
        let mut keys = [0u64; 64];
        let mut verts = [0usize; 64];
        let mut count = 0;
        for v in 0..n {
            if w.contains(v) {
                continue;
            }
            let mut key = 0u64;
            for (i, x) in w.iter().enumerate() {
                key |= (dm.dist_u8(x, v) as u64) << (6 * i);
            }
            for j in 0..count {
                if keys[j] == key {
                    return Some((verts[j], v));
                }
            }
            keys[count] = key;
            verts[count] = v;
            count += 1;
        }
        None
    } else {
        let outside: Vec<usize> = (0..n).filter(|&v| !w.contains(v)).collect();
        let reps: Vec<Vec<u8>> = outside
            .iter()
            .map(|&v| w.iter().map(|x| dm.dist_u8(x, v)).collect())
            .collect();
        for j in 1..outside.len() {
            for i in 0..j {
                if reps[i] == reps[j] {
                    return Some((outside[i], outside[j]));
                }
            }
        }
        None
    }
}

/// Resolving number, with a witness: a maximum equidistant class and the
/// pair it fails to separate. The witness pair is the lexicographically
/// first one attaining the maximum; it is `None` only on the one-vertex
/// graph, which has no pairs and gets res = 1 by convention.
pub fn resolving_number(dm: &DistanceMatrix) -> (usize, Option<NonResolvingWitness>) {
    let n = dm.n();
    let mut witness: Option<NonResolvingWitness> = None;
    let mut largest = 0;
    for u in 0..n {
        for v in u + 1..n {
            let class = equidistant_class(dm, u, v);
            if witness.is_none() || class.len() > largest {
                largest = class.len();
                witness = Some(NonResolvingWitness {
                    set: class,
                    pair: (u, v),
                });
            }
        }
    }
    match witness {
        Some(w) => (largest + 1, Some(w)),
        None => (1, None),
    }
}

/// A resolving set built by greedy refinement; its size is an upper bound
/// for the metric dimension, which caps the exhaustive search.
///
/// Starting from the trivial one-class partition of V, repeatedly add the
/// vertex whose distance profile splits the current representation classes
/// into the most pieces (ties broken toward the smallest vertex id), until
/// every class is a singleton. Any vertex inside a non-singleton class
/// splits itself off, so each round makes strict progress.
pub fn greedy_resolving_set(dm: &DistanceMatrix) -> VertexSet {
    let n = dm.n();
    if n == 1 {
        return VertexSet::singleton(0);
    }
    let mut class_of = vec![0u8; n];
    let mut class_count = 1usize;
    let mut chosen = VertexSet::EMPTY;
    while class_count < n {
        let mut best_v = None;
        let mut best_count = class_count;
        for v in 0..n {
            if chosen.contains(v) {
                continue;
            }
            let count = refined_count(dm, &class_of, v);
            if count > best_count {
                best_count = count;
                best_v = Some(v);
            }
        }
        let v = best_v.expect("a vertex in a non-singleton class always refines");
        apply_refinement(dm, &mut class_of, v);
        class_count = best_count;
        chosen.insert(v);
    }
    debug_assert!(is_resolving(dm, chosen));
    chosen
}

/// Number of classes after refining `class_of` by distance to `v`.
fn refined_count(dm: &DistanceMatrix, class_of: &[u8], v: usize) -> usize {
    // Key space: class id (< 64) and distance (< 64).
    let mut seen = [0u64; 64];
    let mut count = 0;
    for (u, &c) in class_of.iter().enumerate() {
        let key = (c as usize) << 6 | dm.dist_u8(v, u) as usize;
        let (word, bit) = (key >> 6, key & 63);
        if seen[word] & (1 << bit) == 0 {
            seen[word] |= 1 << bit;
            count += 1;
        }
    }
    count
}

fn apply_refinement(dm: &DistanceMatrix, class_of: &mut [u8], v: usize) {
    let mut keyed: Vec<(u16, usize)> = class_of
        .iter()
        .enumerate()
        .map(|(u, &c)| (((c as u16) << 6) | dm.dist_u8(v, u) as u16, u))
        .collect();
    keyed.sort_unstable();
    let mut next_id = 0u8;
    let mut prev_key = None;
    for (key, u) in keyed {
        if prev_key != Some(key) {
            if prev_key.is_some() {
                next_id += 1;
            }
            prev_key = Some(key);
        }
        class_of[u] = next_id;
    }
}

/// Metric dimension with the lexicographically first basis.
///
/// Exhaustive search in ascending set size, capped by the greedy bound;
/// exponential in the worst case, which is inherent to the exact problem.
pub fn metric_dimension(dm: &DistanceMatrix) -> (usize, VertexSet) {
    let n = dm.n();
    if n == 1 {
        return (1, VertexSet::singleton(0));
    }
    let cap = greedy_resolving_set(dm).len();
    for k in 1..=cap {
        for s in k_subsets(n, k) {
            if is_resolving(dm, s) {
                return (k, s);
            }
        }
    }
    unreachable!("the greedy set itself resolves at size cap")
}

/// All bases, in lexicographic order of their ascending-vertex views.
pub fn all_bases(dm: &DistanceMatrix) -> Vec<VertexSet> {
    let n = dm.n();
    if n == 1 {
        return vec![VertexSet::singleton(0)];
    }
    let (beta, _) = metric_dimension(dm);
    bases_of_size(dm, beta)
}

fn bases_of_size(dm: &DistanceMatrix, beta: usize) -> Vec<VertexSet> {
    k_subsets(dm.n(), beta)
        .filter(|&s| is_resolving(dm, s))
        .collect()
}

/// Basis number: the largest `r` such that every `r`-subset of V is
/// contained in some basis.
pub fn basis_number(dm: &DistanceMatrix) -> usize {
    let n = dm.n();
    if n == 1 {
        return 1;
    }
    basis_number_from(n, &all_bases(dm))
}

/// The predicate "every r-subset extends to a basis" is monotone downward
/// in r, so the first success descending from beta is the answer.
fn basis_number_from(n: usize, bases: &[VertexSet]) -> usize {
    let beta = bases.first().map_or(0, |b| b.len());
    (0..=beta)
        .rev()
        .find(|&r| k_subsets(n, r).all(|s| bases.iter().any(|b| s.is_subset_of(*b))))
        .unwrap_or(0)
}

/// Is every minimum-size landmark set a basis? Returns the decision and
/// the dimension.
///
/// beta <= res always (every res-subset resolves), and beta = res exactly
/// when no (res - 1)-subset resolves. On a negative answer the dimension
/// still requires its own search; the decision itself does not.
pub fn is_randomly_k_dimensional(dm: &DistanceMatrix) -> (bool, usize) {
    let n = dm.n();
    if n == 1 {
        return (true, 1);
    }
    let (res, _) = resolving_number(dm);
    if res == 1 {
        // Only the two-vertex graph: its single 1-subsets all resolve.
        return (true, 1);
    }
    if k_subsets(n, res - 1).any(|s| is_resolving(dm, s)) {
        (false, metric_dimension(dm).0)
    } else {
        (true, res)
    }
}

/// Computes the full invariant family for one connected graph.
pub fn solve(g: &Graph) -> Result<SolveReport, Error> {
    Ok(solve_report(&DistanceMatrix::new(g)?))
}

/// Same as [`solve`], for callers that already hold the distance matrix.
pub fn solve_report(dm: &DistanceMatrix) -> SolveReport {
    let start = Instant::now();
    let n = dm.n();
    let (res, witness) = resolving_number(dm);
    let (beta, sample_basis) = metric_dimension(dm);
    let bases = if n == 1 {
        vec![sample_basis]
    } else {
        bases_of_size(dm, beta)
    };
    let bas = basis_number_from(n, &bases);
    let is_randomly_k = beta == res;

    debug_assert!(beta <= res);
    debug_assert_eq!(bases.first(), Some(&sample_basis));
    // The three characterizations of the randomly-k property coincide.
    debug_assert_eq!(is_randomly_k, bas == beta);
    debug_assert_eq!(is_randomly_k, is_randomly_k_dimensional(dm).0);

    SolveReport {
        n,
        beta,
        res,
        bas,
        k: beta,
        is_randomly_k,
        sample_basis,
        all_bases_count: bases.len(),
        non_resolving_witness: witness,
        elapsed: start.elapsed(),
    }
}
