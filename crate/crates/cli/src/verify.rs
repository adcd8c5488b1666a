//! `verify`: run every theorem check over a corpus and aggregate the
//! verdicts per theorem. Any failure is a solver bug; the report then
//! carries a reproducer (graph6 id plus the offending vertices/sets) and
//! the process exits with code 5.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use resolvent::corpus::{emit_graph6, ConnectedGraphs, GraphRecord, MAX_ENUMERATION_ORDER};
use resolvent::theorems::{check_graph, Analysis, SuiteSummary, TheoremId};
use resolvent::Error;

use crate::input;
use crate::report::{plain_timing, write_csv, OutputFormat, Report};

#[derive(Args)]
pub struct VerifyArgs {
    /// Orders to sweep exhaustively: "A..B" (inclusive) or a single "N".
    #[arg(long, value_name = "RANGE", default_value = "1..6", value_parser = parse_range, conflicts_with = "file")]
    n: NRange,

    /// Verify the graphs in a file instead (disconnected lines are
    /// skipped and counted).
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy)]
pub struct NRange {
    lo: usize,
    hi: usize,
}

fn parse_range(text: &str) -> Result<NRange, String> {
    let parse_order = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| format!("bad order {t:?} (expected an integer)"))
    };
    let range = match text.split_once("..") {
        Some((lo, hi)) => NRange {
            lo: parse_order(lo)?,
            hi: parse_order(hi)?,
        },
        None => {
            let n = parse_order(text)?;
            NRange { lo: n, hi: n }
        }
    };
    if range.lo == 0 || range.lo > range.hi {
        return Err(format!("bad range {text:?} (need 1 <= A <= B)"));
    }
    Ok(range)
}

/// Debug builds accept a fault-injection hook so the failure path (and
/// exit code 5) stays testable end to end; release builds compile the
/// hook away.
#[cfg(debug_assertions)]
fn mutation_enabled() -> bool {
    std::env::var_os("RESOLVENT_TEST_MUTATION").is_some()
}

#[cfg(not(debug_assertions))]
fn mutation_enabled() -> bool {
    false
}

fn analyze(id: String, graph: resolvent::Graph) -> Result<Analysis, Error> {
    let mut analysis = Analysis::with_id(id, graph)?;
    if mutation_enabled() {
        analysis.report.res += 1;
    }
    Ok(analysis)
}

fn verify_mask_range(n: usize, base: usize, masks: std::ops::Range<u64>) -> SuiteSummary {
    let mut summary = SuiteSummary::new();
    for mask in masks {
        let graph = ConnectedGraphs::graph_for_mask(n, mask);
        if !graph.is_connected() {
            continue;
        }
        let id = emit_graph6(&graph).expect("enumeration stays below the size cap");
        let analysis = analyze(id, graph).expect("connected by construction");
        summary.graphs_checked += 1;
        for verdict in check_graph(&analysis) {
            summary.record(base + mask as usize, &verdict);
        }
    }
    summary
}

fn verify_enumeration(range: NRange) -> Result<SuiteSummary, Error> {
    if range.hi > MAX_ENUMERATION_ORDER {
        return Err(Error::UnsupportedSize { n: range.hi });
    }
    let mut summary = SuiteSummary::new();
    // Corpus indices stay globally unique across orders so the first
    // failure is the same graph no matter how the work is split.
    let mut base = 0usize;
    for n in range.lo..=range.hi {
        let started = Instant::now();
        let end = 1u64 << (n * (n - 1) / 2);
        const CHUNK: u64 = 1 << 12;
        let starts: Vec<u64> = (0..end).step_by(CHUNK as usize).collect();
        let merged = starts
            .par_iter()
            .map(|&start| verify_mask_range(n, base, start..(start + CHUNK).min(end)))
            .reduce(SuiteSummary::new, |mut acc, chunk| {
                acc.merge(chunk);
                acc
            });
        eprintln!(
            "verify: n={n} swept ({} connected graphs, {:.1} s)",
            merged.graphs_checked,
            started.elapsed().as_secs_f64()
        );
        summary.merge(merged);
        base += end as usize;
    }
    Ok(summary)
}

fn verify_file(path: &Path) -> Result<SuiteSummary, Error> {
    let records = input::load(&[], Some(path), false)?;
    let mut summary = SuiteSummary::new();
    for (index, record) in records.into_iter().enumerate() {
        let GraphRecord { id, graph, .. } = record;
        match analyze(id, graph) {
            Ok(analysis) => {
                summary.graphs_checked += 1;
                for verdict in check_graph(&analysis) {
                    summary.record(index, &verdict);
                }
            }
            Err(Error::Disconnected) => summary.skipped_disconnected += 1,
            Err(other) => return Err(other),
        }
    }
    Ok(summary)
}

#[derive(Serialize)]
struct VerifyInputs {
    n_range: Option<(usize, usize)>,
    file: Option<String>,
}

#[derive(Serialize)]
struct TheoremRow {
    theorem: &'static str,
    statement: &'static str,
    holds: usize,
    vacuous: usize,
    failed: usize,
    status: &'static str,
}

#[derive(Serialize)]
struct FailureJson {
    theorem: &'static str,
    graph_id: String,
    detail: String,
    vertices: Vec<usize>,
    sets: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct VerifySummary {
    graphs_checked: usize,
    skipped_disconnected: usize,
    failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<FailureJson>,
}

pub fn run(args: &VerifyArgs, format: OutputFormat) -> Result<i32, Error> {
    let started = Instant::now();
    let summary = match &args.file {
        Some(path) => verify_file(path)?,
        None => verify_enumeration(args.n)?,
    };

    let rows: Vec<TheoremRow> = TheoremId::ALL
        .iter()
        .map(|&id| {
            let counts = summary.for_theorem(id);
            TheoremRow {
                theorem: id.name(),
                statement: id.statement(),
                holds: counts.holds,
                vacuous: counts.vacuous,
                failed: counts.failed,
                status: if counts.failed == 0 { "ok" } else { "failed" },
            }
        })
        .collect();
    let failures = summary.total_failures();
    let first_failure = summary.first_failure.as_ref().map(|f| FailureJson {
        theorem: f.theorem.name(),
        graph_id: f.counterexample.graph_id.clone(),
        detail: f.counterexample.detail.clone(),
        vertices: f.counterexample.vertices.clone(),
        sets: f.counterexample.sets.clone(),
    });
    let inputs = VerifyInputs {
        n_range: args.file.is_none().then_some((args.n.lo, args.n.hi)),
        file: args.file.as_ref().map(|p| p.display().to_string()),
    };
    let verify_summary = VerifySummary {
        graphs_checked: summary.graphs_checked,
        skipped_disconnected: summary.skipped_disconnected,
        failures,
        first_failure,
    };
    let report = Report::new("verify", inputs, rows, verify_summary, started);

    match format {
        OutputFormat::Json => report.print_json(),
        OutputFormat::Csv => write_csv(
            &["theorem", "holds", "vacuous", "failed", "status"],
            report.results.iter().map(|row| {
                vec![
                    row.theorem.to_string(),
                    row.holds.to_string(),
                    row.vacuous.to_string(),
                    row.failed.to_string(),
                    row.status.to_string(),
                ]
            }),
        ),
        OutputFormat::Plain => {
            for row in &report.results {
                println!(
                    "{}: {} holds, {} vacuous, {} failed [{}]",
                    row.theorem, row.holds, row.vacuous, row.failed, row.status
                );
            }
            println!(
                "graphs checked: {} (skipped disconnected: {})",
                report.summary.graphs_checked, report.summary.skipped_disconnected
            );
            if let Some(failure) = &report.summary.first_failure {
                println!(
                    "FAILURE {} on {}: {}",
                    failure.theorem, failure.graph_id, failure.detail
                );
            } else {
                println!("all checks passed");
            }
            plain_timing(started);
        }
    }
    Ok(if failures > 0 { 5 } else { 0 })
}
