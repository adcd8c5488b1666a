//! Report envelope and row types shared by the subcommands.
//!
//! Reports are deterministic: key order is fixed by struct declaration,
//! result rows carry no timestamps or durations, and wall-clock numbers
//! live only in the top-level `timing` block. Running with different
//! `--jobs` values changes timing and nothing else.

use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;

use resolvent::metric::SolveReport;
use resolvent::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// The canonical schema; documented in the repository README.
    Json,
    /// One row per result, aggregate blocks omitted.
    Csv,
    /// Human-readable lines.
    Plain,
}

#[derive(Serialize)]
pub struct Timing {
    pub total_ms: f64,
}

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct Report<I: Serialize, R: Serialize, S: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: I,
    pub results: Vec<R>,
    pub summary: S,
    pub timing: Timing,
}

impl<I: Serialize, R: Serialize, S: Serialize> Report<I, R, S> {
    pub fn new(
        command: &'static str,
        inputs: I,
        results: Vec<R>,
        summary: S,
        started: Instant,
    ) -> Report<I, R, S> {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            results,
            summary,
            timing: Timing {
                total_ms: started.elapsed().as_secs_f64() * 1e3,
            },
        }
    }

    pub fn print_json(&self) {
        println!(
            "{}",
            serde_json::to_string_pretty(self).expect("reports always serialize")
        );
    }
}

/// One solved graph. Fields the command did not compute stay `None` and
/// are omitted from JSON (empty in CSV).
#[derive(Serialize)]
pub struct SolveRow {
    pub id: String,
    pub n: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub res: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bas: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub randk: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_basis: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_pair: Option<(usize, usize)>,
}

impl SolveRow {
    pub fn shell(id: String, graph: &Graph) -> SolveRow {
        SolveRow {
            id,
            n: graph.n(),
            edges: graph.edge_count(),
            beta: None,
            res: None,
            bas: None,
            randk: None,
            k: None,
            sample_basis: None,
            bases_count: None,
            witness_set: None,
            witness_pair: None,
        }
    }

    pub fn full(id: String, graph: &Graph, report: &SolveReport) -> SolveRow {
        let mut row = SolveRow::shell(id, graph);
        row.beta = Some(report.beta);
        row.res = Some(report.res);
        row.bas = Some(report.bas);
        row.randk = Some(report.is_randomly_k);
        row.k = Some(report.k);
        row.sample_basis = Some(report.sample_basis.to_vec());
        row.bases_count = Some(report.all_bases_count);
        if let Some(witness) = &report.non_resolving_witness {
            row.witness_set = Some(witness.set.to_vec());
            row.witness_pair = Some(witness.pair);
        }
        row
    }

    pub const CSV_HEADERS: [&'static str; 12] = [
        "id",
        "n",
        "edges",
        "beta",
        "res",
        "bas",
        "randk",
        "k",
        "sample_basis",
        "bases_count",
        "witness_set",
        "witness_pair",
    ];

    pub fn csv_fields(&self) -> Vec<String> {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        fn set(v: &Option<Vec<usize>>) -> String {
            v.as_ref().map(|s| join(s)).unwrap_or_default()
        }
        vec![
            self.id.clone(),
            self.n.to_string(),
            self.edges.to_string(),
            opt(&self.beta),
            opt(&self.res),
            opt(&self.bas),
            opt(&self.randk),
            opt(&self.k),
            set(&self.sample_basis),
            opt(&self.bases_count),
            set(&self.witness_set),
            self.witness_pair
                .map(|(u, v)| format!("{u} {v}"))
                .unwrap_or_default(),
        ]
    }

    pub fn plain_line(&self) -> String {
        let mut line = format!("{}: n={} edges={}", self.id, self.n, self.edges);
        if let Some(beta) = self.beta {
            line.push_str(&format!(" beta={beta}"));
        }
        if let Some(res) = self.res {
            line.push_str(&format!(" res={res}"));
        }
        if let Some(bas) = self.bas {
            line.push_str(&format!(" bas={bas}"));
        }
        if let Some(randk) = self.randk {
            line.push_str(&format!(" randk={randk}"));
        }
        if let Some(basis) = &self.sample_basis {
            line.push_str(&format!(" basis=[{}]", join(basis)));
        }
        if let Some(count) = self.bases_count {
            line.push_str(&format!(" bases={count}"));
        }
        if let (Some(set), Some((u, v))) = (&self.witness_set, self.witness_pair) {
            line.push_str(&format!(" non_resolving=[{}] ties ({u}, {v})", join(set)));
        }
        line
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// CSV goes through the `csv` crate so fields containing delimiters are
/// quoted correctly.
pub fn write_csv(headers: &[&str], rows: impl Iterator<Item = Vec<String>>) {
    let mut writer = csv::Writer::from_writer(std::io::stdout());
    writer.write_record(headers).expect("csv header");
    for row in rows {
        writer.write_record(&row).expect("csv row");
    }
    writer.flush().expect("csv flush");
}

pub fn plain_timing(started: Instant) {
    println!("elapsed: {:.1} ms", started.elapsed().as_secs_f64() * 1e3);
}
