//! Resolves command-line graph sources (generator specs, files, stdin)
//! into [`GraphRecord`]s.

use std::fs;
use std::io::Read;
use std::path::Path;

use resolvent::corpus::{
    emit_graph6, generate, parse_edge_list, parse_graph6, GenSpec, GraphRecord, Source,
};
use resolvent::Error;

/// Loads every graph named by the arguments, in argument order. Falls
/// back to stdin when nothing else is given and `allow_stdin` is set.
pub fn load(
    gens: &[String],
    file: Option<&Path>,
    allow_stdin: bool,
) -> Result<Vec<GraphRecord>, Error> {
    let mut records = Vec::new();
    for text in gens {
        let spec: GenSpec = text.parse()?;
        let graph = generate(&spec)?;
        records.push(GraphRecord {
            id: spec.to_string(),
            graph,
            source: Source::Generator,
        });
    }
    if let Some(path) = file {
        let text = fs::read_to_string(path).map_err(|e| Error::ParseError {
            message: format!("{}: {e}", path.display()),
        })?;
        records.extend(parse_text(&text)?);
    } else if gens.is_empty() && allow_stdin {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::ParseError {
                message: format!("stdin: {e}"),
            })?;
        records.extend(parse_text(&text)?);
    }
    if records.is_empty() {
        return Err(Error::ParseError {
            message: "no input graphs".into(),
        });
    }
    Ok(records)
}

/// A file is either one edge list (first line is the vertex count) or
/// graph6 lines, one graph per line; the first non-empty line decides.
pub fn parse_text(text: &str) -> Result<Vec<GraphRecord>, Error> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|line| !line.is_empty())
        .ok_or_else(|| Error::ParseError {
            message: "empty input".into(),
        })?;
    if first.chars().all(|c| c.is_ascii_digit()) {
        let graph = parse_edge_list(text)?;
        let id = emit_graph6(&graph).unwrap_or_else(|_| format!("edge-list:n={}", graph.n()));
        return Ok(vec![GraphRecord {
            id,
            graph,
            source: Source::File,
        }]);
    }
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty())
        .map(|line| {
            let graph = parse_graph6(line)?;
            Ok(GraphRecord {
                id: line.to_string(),
                graph,
                source: Source::File,
            })
        })
        .collect()
}
