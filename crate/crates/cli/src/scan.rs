//! `scan`: sweep a corpus (exhaustive enumeration or a file), solve every
//! graph, and report the ones matching the filter.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Args};
use rayon::prelude::*;
use serde::Serialize;

use resolvent::corpus::{emit_graph6, ConnectedGraphs, MAX_ENUMERATION_ORDER};
use resolvent::metric::{solve_report, SolveReport};
use resolvent::summary::twin_pairs;
use resolvent::{DistanceMatrix, Error, Graph};

use crate::input;
use crate::report::{plain_timing, write_csv, OutputFormat, Report, SolveRow};

#[derive(Args)]
#[command(group(ArgGroup::new("corpus").required(true).args(["n", "file"])))]
pub struct ScanArgs {
    /// Enumerate every connected labeled graph of this order (1..=7).
    #[arg(long)]
    n: Option<usize>,

    /// Scan a graph file instead of enumerating.
    #[arg(long)]
    file: Option<PathBuf>,

    /// Keep only randomly k-dimensional graphs.
    #[arg(long)]
    randk: bool,

    /// Keep only graphs with this metric dimension.
    #[arg(long, value_name = "K")]
    beta: Option<usize>,

    /// Keep only graphs with this resolving number.
    #[arg(long, value_name = "K")]
    res: Option<usize>,

    /// Keep only graphs with a twin pair.
    #[arg(long, conflicts_with = "no_twins")]
    twins: bool,

    /// Keep only twin-free graphs.
    #[arg(long)]
    no_twins: bool,
}

#[derive(Clone, Copy)]
struct Filter {
    randk: bool,
    beta: Option<usize>,
    res: Option<usize>,
    twins: Option<bool>,
}

impl Filter {
    fn from_args(args: &ScanArgs) -> Filter {
        Filter {
            randk: args.randk,
            beta: args.beta,
            res: args.res,
            twins: if args.twins {
                Some(true)
            } else if args.no_twins {
                Some(false)
            } else {
                None
            },
        }
    }

    fn matches(self, graph: &Graph, report: &SolveReport) -> bool {
        if self.randk && !report.is_randomly_k {
            return false;
        }
        if self.beta.is_some_and(|k| report.beta != k) {
            return false;
        }
        if self.res.is_some_and(|k| report.res != k) {
            return false;
        }
        if let Some(want_twins) = self.twins {
            if twin_pairs(graph).is_empty() == want_twins {
                return false;
            }
        }
        true
    }
}

#[derive(Serialize)]
struct ScanInputs {
    n: Option<usize>,
    file: Option<String>,
    randk: bool,
    beta: Option<usize>,
    res: Option<usize>,
    twins: Option<bool>,
}

/// How many scanned graphs landed on each (beta, res) pair; ascending.
#[derive(Serialize)]
struct CellCount {
    beta: usize,
    res: usize,
    count: usize,
}

#[derive(Serialize)]
struct ScanSummary {
    scanned: usize,
    matched: usize,
    cells: Vec<CellCount>,
}

#[derive(Default)]
struct Partial {
    scanned: usize,
    rows: Vec<SolveRow>,
    cells: BTreeMap<(usize, usize), usize>,
}

impl Partial {
    fn absorb(&mut self, id: String, graph: &Graph, report: &SolveReport, filter: Filter) {
        self.scanned += 1;
        *self.cells.entry((report.beta, report.res)).or_insert(0) += 1;
        if filter.matches(graph, report) {
            self.rows.push(SolveRow::full(id, graph, report));
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.rows.extend(other.rows);
        for (cell, count) in other.cells {
            *self.cells.entry(cell).or_insert(0) += count;
        }
        self
    }
}

fn scan_mask_range(n: usize, masks: std::ops::Range<u64>, filter: Filter) -> Partial {
    let mut partial = Partial::default();
    for mask in masks {
        let graph = ConnectedGraphs::graph_for_mask(n, mask);
        if !graph.is_connected() {
            continue;
        }
        let dm = DistanceMatrix::new(&graph).expect("connected by construction");
        let report = solve_report(&dm);
        let id = emit_graph6(&graph).expect("enumeration stays below the size cap");
        partial.absorb(id, &graph, &report, filter);
    }
    partial
}

fn scan_enumeration(n: usize, filter: Filter) -> Result<Partial, Error> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::UnsupportedSize { n });
    }
    let end = 1u64 << (n * (n - 1) / 2);
    const CHUNK: u64 = 1 << 12;
    let starts: Vec<u64> = (0..end).step_by(CHUNK as usize).collect();
    // Chunks are merged in mask order, so the report is identical for
    // any worker count.
    Ok(starts
        .par_iter()
        .map(|&start| scan_mask_range(n, start..(start + CHUNK).min(end), filter))
        .reduce(Partial::default, Partial::merge))
}

fn scan_file(path: &Path, filter: Filter) -> Result<Partial, Error> {
    let records = input::load(&[], Some(path), false)?;
    let mut partial = Partial::default();
    for record in records {
        let dm = DistanceMatrix::new(&record.graph)?;
        let report = solve_report(&dm);
        partial.absorb(record.id, &record.graph, &report, filter);
    }
    Ok(partial)
}

pub fn run(args: &ScanArgs, format: OutputFormat) -> Result<i32, Error> {
    let started = Instant::now();
    let filter = Filter::from_args(args);
    let partial = match (args.n, &args.file) {
        (Some(n), None) => scan_enumeration(n, filter)?,
        (None, Some(path)) => scan_file(path, filter)?,
        _ => unreachable!("clap enforces exactly one corpus source"),
    };

    let inputs = ScanInputs {
        n: args.n,
        file: args.file.as_ref().map(|p| p.display().to_string()),
        randk: filter.randk,
        beta: filter.beta,
        res: filter.res,
        twins: filter.twins,
    };
    let summary = ScanSummary {
        scanned: partial.scanned,
        matched: partial.rows.len(),
        cells: partial
            .cells
            .iter()
            .map(|(&(beta, res), &count)| CellCount { beta, res, count })
            .collect(),
    };
    let report = Report::new("scan", inputs, partial.rows, summary, started);

    match format {
        OutputFormat::Json => report.print_json(),
        OutputFormat::Csv => write_csv(
            &SolveRow::CSV_HEADERS,
            report.results.iter().map(SolveRow::csv_fields),
        ),
        OutputFormat::Plain => {
            for row in &report.results {
                println!("{}", row.plain_line());
            }
            println!(
                "scanned {} connected graphs, {} matched",
                report.summary.scanned, report.summary.matched
            );
            for cell in &report.summary.cells {
                println!(
                    "  beta={} res={}: {} graphs",
                    cell.beta, cell.res, cell.count
                );
            }
            plain_timing(started);
        }
    }
    Ok(0)
}
