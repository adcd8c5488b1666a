//! Structural facts about the invariant family, each packaged as an
//! executable check over one analyzed graph.
//!
//! Every statement here is a proved theorem, so a failing verdict never
//! reports new mathematics: it reports a bug in the solvers (or in the
//! check itself). The suite exists to pin the solvers down. Implication
//! checks record *why* they were vacuous whenever their hypothesis does
//! not fire, so a corpus run can measure how often each hypothesis was
//! actually exercised.

use std::time::{Duration, Instant};

use crate::corpus::{emit_graph6, GraphRecord};
use crate::distance::DistanceMatrix;
use crate::error::Error;
use crate::graph::Graph;
use crate::metric::{self, SolveReport};
use crate::set::{k_subsets, VertexSet};
use crate::summary::GraphSummary;

/// Everything the checks need about one graph, computed once up front.
pub struct Analysis {
    pub id: String,
    pub graph: Graph,
    pub dm: DistanceMatrix,
    pub summary: GraphSummary,
    pub report: SolveReport,
}

impl Analysis {
    pub fn new(graph: Graph) -> Result<Analysis, Error> {
        let id = emit_graph6(&graph).unwrap_or_else(|_| format!("n={}", graph.n()));
        Analysis::with_id(id, graph)
    }

    pub fn with_id(id: String, graph: Graph) -> Result<Analysis, Error> {
        let dm = DistanceMatrix::new(&graph)?;
        let summary = GraphSummary::of(&graph)?;
        let report = metric::solve_report(&dm);
        Ok(Analysis {
            id,
            graph,
            dm,
            summary,
            report,
        })
    }
}

/// The twelve checks, in the order they run and report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    ResExtremes,
    TwinFree,
    MinDegree,
    TwoConnected,
    NoAdjacentDegreeTwo,
    SeparatingSetStructure,
    MaxDegreeLower,
    NonadjacentDegreeSum,
    CliqueBound,
    CommonNeighbors,
    MaxDegreeUpper,
    Randomly2Characterization,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::ResExtremes,
        TheoremId::TwinFree,
        TheoremId::MinDegree,
        TheoremId::TwoConnected,
        TheoremId::NoAdjacentDegreeTwo,
        TheoremId::SeparatingSetStructure,
        TheoremId::MaxDegreeLower,
        TheoremId::NonadjacentDegreeSum,
        TheoremId::CliqueBound,
        TheoremId::CommonNeighbors,
        TheoremId::MaxDegreeUpper,
        TheoremId::Randomly2Characterization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::ResExtremes => "res-extremes",
            TheoremId::TwinFree => "twin-free",
            TheoremId::MinDegree => "min-degree",
            TheoremId::TwoConnected => "two-connected",
            TheoremId::NoAdjacentDegreeTwo => "no-adjacent-degree-two",
            TheoremId::SeparatingSetStructure => "separating-set-structure",
            TheoremId::MaxDegreeLower => "max-degree-lower",
            TheoremId::NonadjacentDegreeSum => "nonadjacent-degree-sum",
            TheoremId::CliqueBound => "clique-bound",
            TheoremId::CommonNeighbors => "common-neighbors",
            TheoremId::MaxDegreeUpper => "max-degree-upper",
            TheoremId::Randomly2Characterization => "randomly-2-characterization",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::ResExtremes => {
                "res = 1 exactly for the paths on one or two vertices, and \
                 res = n-1 exactly when the graph has a twin pair"
            }
            TheoremId::TwinFree => {
                "a randomly k-dimensional graph other than a complete graph \
                 has no twin pair"
            }
            TheoremId::MinDegree => {
                "a randomly k-dimensional graph with k >= 2 has minimum \
                 degree at least 2"
            }
            TheoremId::TwoConnected => {
                "a randomly k-dimensional graph with k >= 2 has no cut vertex"
            }
            TheoremId::NoAdjacentDegreeTwo => {
                "a randomly k-dimensional graph with k >= 4 has no edge \
                 joining two vertices of degree 2"
            }
            TheoremId::SeparatingSetStructure => {
                "removing a separating (k-1)-set from a randomly \
                 k-dimensional graph leaves exactly two components, and every \
                 pair tied on the removed set straddles them"
            }
            TheoremId::MaxDegreeLower => {
                "a randomly k-dimensional graph with k >= 2 has maximum \
                 degree at least k"
            }
            TheoremId::NonadjacentDegreeSum => {
                "non-adjacent vertices of a randomly k-dimensional graph \
                 have degree sum at least k"
            }
            TheoremId::CliqueBound => {
                "a randomly k-dimensional graph on at least two vertices has \
                 clique number at most k+1, with equality exactly for \
                 complete graphs"
            }
            TheoremId::CommonNeighbors => {
                "two vertices of a graph with resolving number k have at \
                 most k-1 common neighbors"
            }
            TheoremId::MaxDegreeUpper => {
                "a non-complete randomly k-dimensional graph on n vertices \
                 has maximum degree at most n-2"
            }
            TheoremId::Randomly2Characterization => {
                "the randomly 2-dimensional graphs are exactly the odd cycles"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// The hypothesis did not fire; `reason` names the missing premise.
    Vacuous { reason: &'static str },
    Fails { counterexample: Counterexample },
}

impl Outcome {
    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fails { .. })
    }
}

/// Enough data to re-check a failure by hand: the graph, the vertices
/// and sets involved, and a prose description of what went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph_id: String,
    pub detail: String,
    pub vertices: Vec<usize>,
    pub sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub graph_id: String,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

pub fn check(id: TheoremId, a: &Analysis) -> TheoremVerdict {
    let start = Instant::now();
    let outcome = match id {
        TheoremId::ResExtremes => check_res_extremes(a),
        TheoremId::TwinFree => check_twin_free(a),
        TheoremId::MinDegree => check_min_degree(a),
        TheoremId::TwoConnected => check_two_connected(a),
        TheoremId::NoAdjacentDegreeTwo => check_no_adjacent_degree_two(a),
        TheoremId::SeparatingSetStructure => check_separating_set_structure(a),
        TheoremId::MaxDegreeLower => check_max_degree_lower(a),
        TheoremId::NonadjacentDegreeSum => check_nonadjacent_degree_sum(a),
        TheoremId::CliqueBound => check_clique_bound(a),
        TheoremId::CommonNeighbors => check_common_neighbors(a),
        TheoremId::MaxDegreeUpper => check_max_degree_upper(a),
        TheoremId::Randomly2Characterization => check_randomly_2_characterization(a),
    };
    TheoremVerdict {
        theorem: id,
        graph_id: a.id.clone(),
        outcome,
        elapsed: start.elapsed(),
    }
}

/// Runs all twelve checks against one graph.
pub fn check_graph(a: &Analysis) -> Vec<TheoremVerdict> {
    TheoremId::ALL.iter().map(|&id| check(id, a)).collect()
}

fn vacuous(reason: &'static str) -> Outcome {
    Outcome::Vacuous { reason }
}

fn fails(a: &Analysis, detail: String, vertices: Vec<usize>, sets: Vec<VertexSet>) -> Outcome {
    Outcome::Fails {
        counterexample: Counterexample {
            graph_id: a.id.clone(),
            detail,
            vertices,
            sets: sets.into_iter().map(|s| s.to_vec()).collect(),
        },
    }
}

fn check_res_extremes(a: &Analysis) -> Outcome {
    let n = a.graph.n();
    let res = a.report.res;
    // A connected graph on at most two vertices is a path.
    if (res == 1) != (n <= 2) {
        return fails(
            a,
            format!("res = {res} on {n} vertices breaks the res = 1 characterization"),
            vec![],
            vec![],
        );
    }
    let has_twins = !a.summary.twin_pairs.is_empty();
    if (res + 1 == n) != has_twins {
        let vertices = a
            .summary
            .twin_pairs
            .first()
            .map_or(vec![], |&(u, v)| vec![u, v]);
        return fails(
            a,
            format!(
                "res = {res}, n = {n}, twin pairs {:?}",
                a.summary.twin_pairs
            ),
            vertices,
            vec![],
        );
    }
    Outcome::Holds
}

fn check_twin_free(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    if a.graph.is_complete() {
        return vacuous("complete graph");
    }
    match a.summary.twin_pairs.first() {
        None => Outcome::Holds,
        Some(&(u, v)) => fails(
            a,
            format!("vertices {u} and {v} are twins"),
            vec![u, v],
            vec![],
        ),
    }
}

fn check_min_degree(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    if a.report.k < 2 {
        return vacuous("dimension below 2");
    }
    if a.summary.min_degree >= 2 {
        return Outcome::Holds;
    }
    let v = a
        .graph
        .vertices()
        .find(|&v| a.graph.degree(v) < 2)
        .expect("min_degree < 2 names such a vertex");
    fails(
        a,
        format!("vertex {v} has degree {}", a.graph.degree(v)),
        vec![v],
        vec![],
    )
}

fn check_two_connected(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    if a.report.k < 2 {
        return vacuous("dimension below 2");
    }
    if a.summary.cut_vertices.is_empty() {
        Outcome::Holds
    } else {
        let v = a.summary.cut_vertices.first().unwrap();
        fails(a, format!("vertex {v} is a cut vertex"), vec![v], vec![])
    }
}

fn check_no_adjacent_degree_two(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    if a.report.k < 4 {
        return vacuous("dimension below 4");
    }
    for (u, v) in a.graph.edges() {
        if a.graph.degree(u) == 2 && a.graph.degree(v) == 2 {
            return fails(
                a,
                format!("adjacent vertices {u} and {v} both have degree 2"),
                vec![u, v],
                vec![],
            );
        }
    }
    Outcome::Holds
}

fn check_separating_set_structure(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    let n = a.graph.n();
    let k = a.report.k;
    let mut saw_separating = false;
    for t in k_subsets(n, k - 1) {
        let rest = a.graph.vertex_set().difference(t);
        let components = a.graph.components_within(rest);
        if components.len() < 2 {
            continue;
        }
        saw_separating = true;
        if components.len() != 2 {
            let mut sets = vec![t];
            sets.extend(components.iter().copied());
            return fails(
                a,
                format!("removing {t} leaves {} components", components.len()),
                vec![],
                sets,
            );
        }
        for u in rest.iter() {
            for v in rest.iter().filter(|&v| v > u) {
                let tied = t.iter().all(|w| a.dm.dist(u, w) == a.dm.dist(v, w));
                if tied && components[0].contains(u) == components[0].contains(v) {
                    return fails(
                        a,
                        format!("{u} and {v} are tied on {t} but share a component"),
                        vec![u, v],
                        vec![t],
                    );
                }
            }
        }
    }
    if saw_separating {
        Outcome::Holds
    } else {
        vacuous("no separating set of size k-1")
    }
}

fn check_max_degree_lower(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    let k = a.report.k;
    if k < 2 {
        return vacuous("dimension below 2");
    }
    if a.summary.max_degree >= k {
        Outcome::Holds
    } else {
        fails(
            a,
            format!("max degree {} is below k = {k}", a.summary.max_degree),
            vec![],
            vec![],
        )
    }
}

fn check_nonadjacent_degree_sum(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    let k = a.report.k;
    let mut saw_nonadjacent = false;
    for u in a.graph.vertices() {
        for v in u + 1..a.graph.n() {
            if a.graph.has_edge(u, v) {
                continue;
            }
            saw_nonadjacent = true;
            let sum = a.graph.degree(u) + a.graph.degree(v);
            if sum < k {
                return fails(
                    a,
                    format!("non-adjacent {u}, {v} have degree sum {sum} < k = {k}"),
                    vec![u, v],
                    vec![],
                );
            }
        }
    }
    if saw_nonadjacent {
        Outcome::Holds
    } else {
        vacuous("no non-adjacent vertex pair")
    }
}

fn check_clique_bound(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    if a.graph.n() < 2 {
        return vacuous("single vertex");
    }
    let omega = a.summary.clique_number;
    let k = a.report.k;
    if omega > k + 1 {
        return fails(a, format!("clique number {omega} exceeds k+1 = {}", k + 1), vec![], vec![]);
    }
    if (omega == k + 1) != a.graph.is_complete() {
        return fails(
            a,
            format!(
                "clique number {omega}, k = {k}: equality must hold exactly for complete graphs"
            ),
            vec![],
            vec![],
        );
    }
    Outcome::Holds
}

fn check_common_neighbors(a: &Analysis) -> Outcome {
    let n = a.graph.n();
    if n < 2 {
        return vacuous("no vertex pair");
    }
    // Applies to every graph: k is the resolving number, not a hypothesis.
    let k = a.report.res;
    for u in a.graph.vertices() {
        for v in u + 1..n {
            let common = a.graph.neighbors(u).intersection(a.graph.neighbors(v));
            if common.len() >= k {
                return fails(
                    a,
                    format!("{u} and {v} have {} common neighbors, res = {k}", common.len()),
                    vec![u, v],
                    vec![common],
                );
            }
        }
    }
    Outcome::Holds
}

fn check_max_degree_upper(a: &Analysis) -> Outcome {
    if !a.report.is_randomly_k {
        return vacuous("not randomly k-dimensional");
    }
    if a.graph.is_complete() {
        return vacuous("complete graph");
    }
    let n = a.graph.n();
    if a.summary.max_degree <= n - 2 {
        Outcome::Holds
    } else {
        let v = a
            .graph
            .vertices()
            .find(|&v| a.graph.degree(v) == n - 1)
            .expect("max_degree = n-1 names a dominating vertex");
        fails(a, format!("vertex {v} is adjacent to all others"), vec![v], vec![])
    }
}

fn check_randomly_2_characterization(a: &Analysis) -> Outcome {
    let lhs = a.report.is_randomly_k && a.report.k == 2;
    let rhs = is_odd_cycle(&a.graph);
    if lhs == rhs {
        Outcome::Holds
    } else {
        fails(
            a,
            format!("randomly 2-dimensional = {lhs} but odd cycle = {rhs}"),
            vec![],
            vec![],
        )
    }
}

/// A connected graph is a cycle iff every degree is 2; C_3 = K_3 counts.
fn is_odd_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.n() % 2 == 1 && g.vertices().all(|v| g.degree(v) == 2)
}

/// Per-theorem tally of a suite run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TheoremCounts {
    pub holds: usize,
    pub vacuous: usize,
    pub failed: usize,
}

/// The failure a suite run reports first: smallest corpus index, then
/// earliest check in [`TheoremId::ALL`] order, so parallel runs merge to
/// the same answer.
#[derive(Debug, Clone)]
pub struct FirstFailure {
    pub corpus_index: usize,
    pub theorem: TheoremId,
    pub counterexample: Counterexample,
}

impl FirstFailure {
    fn key(&self) -> (usize, usize) {
        (self.corpus_index, self.theorem as usize)
    }
}

/// Aggregate of a suite run. `counts` is indexed parallel to
/// [`TheoremId::ALL`].
#[derive(Debug, Clone)]
pub struct SuiteSummary {
    pub graphs_checked: usize,
    pub skipped_disconnected: usize,
    pub counts: Vec<TheoremCounts>,
    pub first_failure: Option<FirstFailure>,
}

impl Default for SuiteSummary {
    fn default() -> SuiteSummary {
        SuiteSummary::new()
    }
}

impl SuiteSummary {
    pub fn new() -> SuiteSummary {
        SuiteSummary {
            graphs_checked: 0,
            skipped_disconnected: 0,
            counts: vec![TheoremCounts::default(); TheoremId::ALL.len()],
            first_failure: None,
        }
    }

    pub fn for_theorem(&self, id: TheoremId) -> TheoremCounts {
        self.counts[id as usize]
    }

    pub fn record(&mut self, corpus_index: usize, verdict: &TheoremVerdict) {
        let slot = &mut self.counts[verdict.theorem as usize];
        match &verdict.outcome {
            Outcome::Holds => slot.holds += 1,
            Outcome::Vacuous { .. } => slot.vacuous += 1,
            Outcome::Fails { counterexample } => {
                slot.failed += 1;
                let candidate = FirstFailure {
                    corpus_index,
                    theorem: verdict.theorem,
                    counterexample: counterexample.clone(),
                };
                if self
                    .first_failure
                    .as_ref()
                    .map_or(true, |held| candidate.key() < held.key())
                {
                    self.first_failure = Some(candidate);
                }
            }
        }
    }

    pub fn merge(&mut self, other: SuiteSummary) {
        self.graphs_checked += other.graphs_checked;
        self.skipped_disconnected += other.skipped_disconnected;
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            mine.holds += theirs.holds;
            mine.vacuous += theirs.vacuous;
            mine.failed += theirs.failed;
        }
        if let Some(theirs) = other.first_failure {
            if self
                .first_failure
                .as_ref()
                .map_or(true, |mine| theirs.key() < mine.key())
            {
                self.first_failure = Some(theirs);
            }
        }
    }

    pub fn total_failures(&self) -> usize {
        self.counts.iter().map(|c| c.failed).sum()
    }
}

pub struct SuiteReport {
    pub verdicts: Vec<TheoremVerdict>,
    pub summary: SuiteSummary,
}

/// Runs every check on every record, keeping all verdicts. Disconnected
/// records are skipped and counted. Suitable for file-sized corpora;
/// exhaustive sweeps should aggregate into a [`SuiteSummary`] instead of
/// retaining millions of verdicts.
pub fn run_suite<I>(corpus: I) -> SuiteReport
where
    I: IntoIterator<Item = GraphRecord>,
{
    let mut verdicts = Vec::new();
    let mut summary = SuiteSummary::new();
    for (index, record) in corpus.into_iter().enumerate() {
        let analysis = match Analysis::with_id(record.id, record.graph) {
            Ok(a) => a,
            Err(_) => {
                summary.skipped_disconnected += 1;
                continue;
            }
        };
        summary.graphs_checked += 1;
        for verdict in check_graph(&analysis) {
            summary.record(index, &verdict);
            verdicts.push(verdict);
        }
    }
    SuiteReport { verdicts, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{generate, GenSpec, Source};

    fn analyze(spec: &str) -> Analysis {
        let g = generate(&spec.parse().unwrap()).unwrap();
        Analysis::new(g).unwrap()
    }

    fn outcome(a: &Analysis, id: TheoremId) -> Outcome {
        check(id, a).outcome
    }

    #[test]
    fn all_is_in_discriminant_order_with_unique_names() {
        for (i, id) in TheoremId::ALL.iter().enumerate() {
            assert_eq!(*id as usize, i);
        }
        let mut names: Vec<_> = TheoremId::ALL.iter().map(|id| id.name()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), TheoremId::ALL.len());
    }

    #[test]
    fn five_cycle_passes_everything() {
        let a = analyze("cycle:5");
        assert!(a.report.is_randomly_k && a.report.k == 2);
        for verdict in check_graph(&a) {
            match verdict.theorem {
                TheoremId::NoAdjacentDegreeTwo => assert_eq!(
                    verdict.outcome,
                    Outcome::Vacuous {
                        reason: "dimension below 4"
                    }
                ),
                TheoremId::SeparatingSetStructure => assert_eq!(
                    verdict.outcome,
                    Outcome::Vacuous {
                        reason: "no separating set of size k-1"
                    }
                ),
                _ => assert_eq!(verdict.outcome, Outcome::Holds, "{:?}", verdict.theorem),
            }
        }
    }

    #[test]
    fn complete_graph_exemptions() {
        let a = analyze("complete:4");
        assert_eq!(
            outcome(&a, TheoremId::TwinFree),
            Outcome::Vacuous {
                reason: "complete graph"
            }
        );
        assert_eq!(
            outcome(&a, TheoremId::MaxDegreeUpper),
            Outcome::Vacuous {
                reason: "complete graph"
            }
        );
        assert_eq!(
            outcome(&a, TheoremId::NonadjacentDegreeSum),
            Outcome::Vacuous {
                reason: "no non-adjacent vertex pair"
            }
        );
        // k = 3 for K_4: clique equality case, cut-vertex case both live.
        assert_eq!(outcome(&a, TheoremId::CliqueBound), Outcome::Holds);
        assert_eq!(outcome(&a, TheoremId::TwoConnected), Outcome::Holds);
        assert_eq!(outcome(&a, TheoremId::ResExtremes), Outcome::Holds);
    }

    #[test]
    fn single_vertex_vacuities() {
        let a = analyze("complete:1");
        assert!(a.report.is_randomly_k);
        assert_eq!(
            outcome(&a, TheoremId::MinDegree),
            Outcome::Vacuous {
                reason: "dimension below 2"
            }
        );
        assert_eq!(
            outcome(&a, TheoremId::CliqueBound),
            Outcome::Vacuous {
                reason: "single vertex"
            }
        );
        assert_eq!(
            outcome(&a, TheoremId::CommonNeighbors),
            Outcome::Vacuous {
                reason: "no vertex pair"
            }
        );
        assert_eq!(outcome(&a, TheoremId::ResExtremes), Outcome::Holds);
        assert_eq!(
            outcome(&a, TheoremId::Randomly2Characterization),
            Outcome::Holds
        );
    }

    #[test]
    fn non_randomly_graphs_are_vacuous_for_the_conditional_checks() {
        let star = analyze("star:3");
        assert!(!star.report.is_randomly_k);
        assert_eq!(
            outcome(&star, TheoremId::TwinFree),
            Outcome::Vacuous {
                reason: "not randomly k-dimensional"
            }
        );
        // Leaves are twins, so res = n-1 must hold non-vacuously.
        assert_eq!(outcome(&star, TheoremId::ResExtremes), Outcome::Holds);

        // Two triangles glued at a vertex: the cut vertex forces the graph
        // out of the randomly k-dimensional class, never into a failure.
        let bowtie = Graph::new(
            5,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let a = Analysis::new(bowtie).unwrap();
        assert!(!a.report.is_randomly_k);
        assert_eq!(
            outcome(&a, TheoremId::TwoConnected),
            Outcome::Vacuous {
                reason: "not randomly k-dimensional"
            }
        );
    }

    #[test]
    fn complete_graphs_exercise_the_k_ge_4_check() {
        let a = analyze("complete:5");
        assert_eq!(a.report.k, 4);
        assert_eq!(outcome(&a, TheoremId::NoAdjacentDegreeTwo), Outcome::Holds);
        assert_eq!(outcome(&a, TheoremId::MaxDegreeLower), Outcome::Holds);
        assert_eq!(outcome(&a, TheoremId::MinDegree), Outcome::Holds);
    }

    #[test]
    fn separating_set_check_logic_on_synthetic_reports() {
        // No graph on <= 7 vertices honestly fires this hypothesis, so the
        // branch logic is exercised by doctoring the solver report.
        let path = generate(&GenSpec::Path { n: 4 }).unwrap();
        let mut a = Analysis::new(path).unwrap();
        a.report.is_randomly_k = true;
        a.report.k = 3;
        // Every separating 2-set of P_4 leaves two components and no tied
        // pair shares one, so the doctored check reports Holds.
        assert_eq!(outcome(&a, TheoremId::SeparatingSetStructure), Outcome::Holds);

        let star = generate(&GenSpec::Star { leaves: 4 }).unwrap();
        let mut a = Analysis::new(star).unwrap();
        a.report.is_randomly_k = true;
        a.report.k = 2;
        // Removing the hub splits the star into four components, not two.
        match outcome(&a, TheoremId::SeparatingSetStructure) {
            Outcome::Fails { counterexample } => {
                assert!(counterexample.detail.contains("4 components"));
                assert_eq!(counterexample.sets[0], vec![0]);
            }
            other => panic!("expected a failure, got {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_predicate() {
        assert!(is_odd_cycle(&generate(&GenSpec::Cycle { n: 3 }).unwrap()));
        assert!(is_odd_cycle(&generate(&GenSpec::Cycle { n: 7 }).unwrap()));
        assert!(!is_odd_cycle(&generate(&GenSpec::Cycle { n: 6 }).unwrap()));
        assert!(!is_odd_cycle(&generate(&GenSpec::Path { n: 5 }).unwrap()));
        assert!(!is_odd_cycle(&generate(&GenSpec::Complete { n: 5 }).unwrap()));
    }

    #[test]
    fn suite_over_small_fixtures_has_zero_failures() {
        let specs = ["path:1", "path:2", "path:5", "cycle:5", "cycle:6", "complete:5", "star:3"];
        let records: Vec<GraphRecord> = specs
            .iter()
            .map(|s| {
                let graph = generate(&s.parse().unwrap()).unwrap();
                GraphRecord {
                    id: s.to_string(),
                    graph,
                    source: Source::Generator,
                }
            })
            .collect();
        let report = run_suite(records);
        assert_eq!(report.summary.graphs_checked, specs.len());
        assert_eq!(report.summary.skipped_disconnected, 0);
        assert_eq!(report.summary.total_failures(), 0);
        assert!(report.summary.first_failure.is_none());
        assert_eq!(report.verdicts.len(), specs.len() * TheoremId::ALL.len());
        // Verdicts keep corpus order.
        assert_eq!(report.verdicts[0].graph_id, "path:1");
    }

    #[test]
    fn suite_skips_and_counts_disconnected_records() {
        let disconnected = Graph::new(2, &[]).unwrap();
        let records = vec![GraphRecord {
            id: "A?".to_string(),
            graph: disconnected,
            source: Source::File,
        }];
        let report = run_suite(records);
        assert_eq!(report.summary.graphs_checked, 0);
        assert_eq!(report.summary.skipped_disconnected, 1);
        assert!(report.verdicts.is_empty());
    }

    #[test]
    fn summary_merge_keeps_the_earliest_failure() {
        let failure = |index: usize, tag: &str| FirstFailure {
            corpus_index: index,
            theorem: TheoremId::ResExtremes,
            counterexample: Counterexample {
                graph_id: tag.to_string(),
                detail: String::new(),
                vertices: vec![],
                sets: vec![],
            },
        };
        let mut left = SuiteSummary::new();
        left.graphs_checked = 2;
        left.counts[0].failed = 1;
        left.first_failure = Some(failure(7, "late"));
        let mut right = SuiteSummary::new();
        right.graphs_checked = 3;
        right.counts[0].failed = 1;
        right.first_failure = Some(failure(3, "early"));
        left.merge(right);
        assert_eq!(left.graphs_checked, 5);
        assert_eq!(left.counts[0].failed, 2);
        let first = left.first_failure.unwrap();
        assert_eq!(first.counterexample.graph_id, "early");
        assert_eq!(first.corpus_index, 3);
    }
}
