//! `solve`: invariants of explicitly named graphs.

use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use serde::Serialize;

use resolvent::corpus::GraphRecord;
use resolvent::metric::{
    basis_number, is_randomly_k_dimensional, metric_dimension, resolving_number, solve_report,
};
use resolvent::{DistanceMatrix, Error};

use crate::input;
use crate::report::{plain_timing, write_csv, OutputFormat, Report, SolveRow};

#[derive(Args)]
pub struct SolveArgs {
    /// Generator spec, repeatable: path:N, cycle:N, complete:N,
    /// complete_bipartite:M:N, star:K, petersen, random:N:P:SEED.
    #[arg(long = "gen", value_name = "SPEC")]
    gens: Vec<String>,

    /// Graph file: graph6 lines, or one edge list headed by a vertex
    /// count. Reads stdin when neither --gen nor --file is given.
    #[arg(long)]
    file: Option<PathBuf>,

    /// Compute the metric dimension.
    #[arg(long)]
    beta: bool,

    /// Compute the resolving number.
    #[arg(long)]
    res: bool,

    /// Compute the basis number.
    #[arg(long)]
    bas: bool,

    /// Decide the randomly k-dimensional property.
    #[arg(long)]
    randk: bool,

    /// Compute everything (the default when no selector is given).
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy)]
struct Fields {
    beta: bool,
    res: bool,
    bas: bool,
    randk: bool,
}

impl Fields {
    fn from_args(args: &SolveArgs) -> Fields {
        if args.all || !(args.beta || args.res || args.bas || args.randk) {
            return Fields {
                beta: true,
                res: true,
                bas: true,
                randk: true,
            };
        }
        Fields {
            beta: args.beta,
            res: args.res,
            bas: args.bas,
            randk: args.randk,
        }
    }

    fn all(self) -> bool {
        self.beta && self.res && self.bas && self.randk
    }

    fn names(self) -> Vec<&'static str> {
        let mut names = Vec::new();
        if self.beta {
            names.push("beta");
        }
        if self.res {
            names.push("res");
        }
        if self.bas {
            names.push("bas");
        }
        if self.randk {
            names.push("randk");
        }
        names
    }
}

#[derive(Serialize)]
struct SolveInputs {
    gens: Vec<String>,
    file: Option<String>,
    stdin: bool,
    fields: Vec<&'static str>,
}

#[derive(Serialize)]
struct SolveSummary {
    graphs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    randomly_k: Option<usize>,
}

fn solve_one(record: &GraphRecord, fields: Fields) -> Result<SolveRow, Error> {
    let dm = DistanceMatrix::new(&record.graph)?;
    if fields.all() {
        let report = solve_report(&dm);
        return Ok(SolveRow::full(record.id.clone(), &record.graph, &report));
    }
    // Partial selections skip the expensive solvers they don't need:
    // res alone is polynomial, randk alone avoids the full beta search
    // on a negative answer.
    let mut row = SolveRow::shell(record.id.clone(), &record.graph);
    if fields.beta {
        let (beta, basis) = metric_dimension(&dm);
        row.beta = Some(beta);
        row.sample_basis = Some(basis.to_vec());
    }
    if fields.res {
        let (res, witness) = resolving_number(&dm);
        row.res = Some(res);
        if let Some(witness) = witness {
            row.witness_set = Some(witness.set.to_vec());
            row.witness_pair = Some(witness.pair);
        }
    }
    if fields.bas {
        row.bas = Some(basis_number(&dm));
    }
    if fields.randk {
        let (randk, k) = is_randomly_k_dimensional(&dm);
        row.randk = Some(randk);
        row.k = Some(k);
    }
    Ok(row)
}

pub fn run(args: &SolveArgs, format: OutputFormat) -> Result<i32, Error> {
    let started = Instant::now();
    let fields = Fields::from_args(args);
    let records = input::load(&args.gens, args.file.as_deref(), true)?;
    let rows = records
        .iter()
        .map(|record| solve_one(record, fields))
        .collect::<Result<Vec<_>, _>>()?;

    let randomly_k = fields
        .randk
        .then(|| rows.iter().filter(|r| r.randk == Some(true)).count());
    let inputs = SolveInputs {
        gens: args.gens.clone(),
        file: args.file.as_ref().map(|p| p.display().to_string()),
        stdin: args.gens.is_empty() && args.file.is_none(),
        fields: fields.names(),
    };
    let summary = SolveSummary {
        graphs: rows.len(),
        randomly_k,
    };
    let report = Report::new("solve", inputs, rows, summary, started);

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
            println!("graphs: {}", report.summary.graphs);
            if let Some(count) = report.summary.randomly_k {
                println!("randomly k-dimensional: {count}");
            }
            plain_timing(started);
        }
    }
    Ok(0)
}
