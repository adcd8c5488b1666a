//! Graph input and output: the graph6 line format, a plain edge-list
//! format, parameterized generators, and exhaustive enumeration of small
//! connected graphs.
//!
//! # graph6
//!
//! One graph per line. The first byte stores `n + 63` (so `n <= 62` here;
//! larger graphs would need the multi-byte header, which this codec
//! deliberately rejects as [`Error::UnsupportedSize`]). Each following byte
//! carries six bits (`byte - 63`, most significant first) of the upper
//! triangle of the adjacency matrix in column-major order:
//! x(0,1), x(0,2), x(1,2), x(0,3), x(1,3), x(2,3), ... The final byte is
//! zero-padded; nonzero padding is rejected as [`Error::TrailingBits`].
//!
//! # Edge list
//!
//! First line: the number of vertices. Each further non-empty line: one
//! edge as two whitespace-separated vertex ids.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::Graph;

/// Position of the pair `(i, j)`, `i < j`, in graph6 column-major order.
fn pair_bit_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub fn parse_graph6(line: &str) -> Result<Graph, Error> {
    let bytes = line.as_bytes();
    let &header = bytes.first().ok_or_else(|| Error::MalformedHeader {
        reason: "empty line".into(),
    })?;
    if !(63..=126).contains(&header) {
        return Err(Error::MalformedHeader {
            reason: format!("header byte {header} outside the printable range 63..=126"),
        });
    }
    let n = (header - 63) as usize;
    if n > 62 {
        return Err(Error::UnsupportedSize { n });
    }
    let payload = &bytes[1..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(Error::TruncatedPayload {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Error::TrailingBits);
    }
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(format!(
                "graph6 payload byte {b} outside the printable range 63..=126"
            )));
        }
    }
    let bit = |idx: usize| (payload[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    for idx in bits..expected * 6 {
        if bit(idx) {
            return Err(Error::TrailingBits);
        }
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bit(pair_bit_index(i, j)) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

pub fn emit_graph6(g: &Graph) -> Result<String, Error> {
    let n = g.n();
    if n > 62 {
        return Err(Error::UnsupportedSize { n });
    }
    let bits = n * (n - 1) / 2;
    let mut payload = vec![0u8; bits.div_ceil(6)];
    for (u, v) in g.edges() {
        let idx = pair_bit_index(u, v);
        payload[idx / 6] |= 1 << (5 - idx % 6);
    }
    let mut out = String::with_capacity(1 + payload.len());
    out.push((n as u8 + 63) as char);
    out.extend(payload.iter().map(|&b| (b + 63) as char));
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::parse("empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(format!("expected a vertex count, got {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::parse(format!(
                    "expected an edge as two vertex ids, got {line:?}"
                )))
            }
        };
        let parse_vertex = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(format!("bad vertex id {t:?}")))
        };
        edges.push((parse_vertex(u)?, parse_vertex(v)?));
    }
    Graph::new(n, &edges)
}

/// Where a [`GraphRecord`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Enumeration,
    File,
    Generator,
}

/// One corpus entry: a graph plus a stable identifier (its graph6 string,
/// or the generator spec that produced it).
#[derive(Debug, Clone)]
pub struct GraphRecord {
    pub id: String,
    pub graph: Graph,
    pub source: Source,
}

/// A parameterized graph family, parsed from `name:param[:param..]`.
///
/// `star:k` is the star with `k` leaves (order `k + 1`, center 0).
/// `random:n:p:seed` samples each pair independently with probability `p`
/// and retries until connected; the seed may be written `7` or `seed7`.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Petersen,
    Star { leaves: usize },
    Random { n: usize, p: f64, seed: u64 },
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenSpec, Error> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let arity = |want: usize| {
            if args.len() == want {
                Ok(())
            } else {
                Err(Error::bad_params(format!(
                    "{name} takes {want} parameter(s), got {}",
                    args.len()
                )))
            }
        };
        let int = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::bad_params(format!("bad integer {t:?}")))
        };
        match name {
            "path" => {
                arity(1)?;
                Ok(GenSpec::Path { n: int(args[0])? })
            }
            "cycle" => {
                arity(1)?;
                Ok(GenSpec::Cycle { n: int(args[0])? })
            }
            "complete" => {
                arity(1)?;
                Ok(GenSpec::Complete { n: int(args[0])? })
            }
            "complete_bipartite" => {
                arity(2)?;
                Ok(GenSpec::CompleteBipartite {
                    m: int(args[0])?,
                    n: int(args[1])?,
                })
            }
            "petersen" => {
                arity(0)?;
                Ok(GenSpec::Petersen)
            }
            "star" => {
                arity(1)?;
                Ok(GenSpec::Star { leaves: int(args[0])? })
            }
            "random" => {
                arity(3)?;
                let n = int(args[0])?;
                let p: f64 = args[1]
                    .parse()
                    .map_err(|_| Error::bad_params(format!("bad probability {:?}", args[1])))?;
                let seed_text = args[2].strip_prefix("seed").unwrap_or(args[2]);
                let seed: u64 = seed_text
                    .parse()
                    .map_err(|_| Error::bad_params(format!("bad seed {:?}", args[2])))?;
                Ok(GenSpec::Random { n, p, seed })
            }
            other => Err(Error::bad_params(format!("unknown generator {other:?}"))),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Path { n } => write!(f, "path:{n}"),
            GenSpec::Cycle { n } => write!(f, "cycle:{n}"),
            GenSpec::Complete { n } => write!(f, "complete:{n}"),
            GenSpec::CompleteBipartite { m, n } => write!(f, "complete_bipartite:{m}:{n}"),
            GenSpec::Petersen => write!(f, "petersen"),
            GenSpec::Star { leaves } => write!(f, "star:{leaves}"),
            GenSpec::Random { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
        }
    }
}

const RANDOM_RETRIES: usize = 1000;

pub fn generate(spec: &GenSpec) -> Result<Graph, Error> {
    match *spec {
        GenSpec::Path { n } => {
            require(n >= 1, "path needs n >= 1")?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)
        }
        GenSpec::Cycle { n } => {
            require(n >= 3, "cycle needs n >= 3")?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        GenSpec::Complete { n } => {
            require(n >= 1, "complete needs n >= 1")?;
            Graph::new(n, &all_pairs(0..n))
        }
        GenSpec::CompleteBipartite { m, n } => {
            require(m >= 1 && n >= 1, "complete_bipartite needs both sides non-empty")?;
            let mut edges = Vec::new();
            for u in 0..m {
                for v in m..m + n {
                    edges.push((u, v));
                }
            }
            Graph::new(m + n, &edges)
        }
        GenSpec::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, i + 5));
            }
            Graph::new(10, &edges)
        }
        GenSpec::Star { leaves } => {
            require(leaves >= 1, "star needs at least one leaf")?;
            let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
            Graph::new(leaves + 1, &edges)
        }
        GenSpec::Random { n, p, seed } => {
            require(n >= 1, "random needs n >= 1")?;
            require((0.0..=1.0).contains(&p), "probability must lie in [0, 1]")?;
            if n > crate::graph::MAX_VERTICES {
                return Err(Error::CapacityExceeded { n });
            }
            // ChaCha8 rather than StdRng so a seed reproduces the same
            // graph across toolchain and dependency upgrades.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..RANDOM_RETRIES {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::new(n, &edges)?;
                if g.is_connected() {
                    return Ok(g);
                }
            }
            Err(Error::ConnectivityRetryExhausted {
                attempts: RANDOM_RETRIES,
            })
        }
    }
}

fn require(cond: bool, message: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::bad_params(message))
    }
}

fn all_pairs(range: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in range.clone() {
        for v in u + 1..range.end {
            edges.push((u, v));
        }
    }
    edges
}

/// Largest order for which exhaustive enumeration stays affordable:
/// 2^21 candidate graphs at n = 7.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Streams every connected labeled graph on `n` vertices, in ascending
/// order of the adjacency bitmask (bit b of the mask is pair b in graph6
/// column-major order). No isomorphism reduction: each labeled graph
/// appears once.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs, Error> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::UnsupportedSize { n });
    }
    Ok(ConnectedGraphs {
        n,
        next_mask: 0,
        end: 1u64 << (n * (n - 1) / 2),
    })
}

pub struct ConnectedGraphs {
    n: usize,
    next_mask: u64,
    end: u64,
}

impl ConnectedGraphs {
    /// Builds the graph for one adjacency bitmask.
    pub fn graph_for_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::with_capacity(mask.count_ones() as usize);
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_bit_index(i, j) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges).expect("mask indices lie in range")
    }
}

impl Iterator for ConnectedGraphs {
    type Item = GraphRecord;

    fn next(&mut self) -> Option<GraphRecord> {
        while self.next_mask < self.end {
            let g = Self::graph_for_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if g.is_connected() {
                let id = emit_graph6(&g).expect("enumeration order is far below 62");
                return Some(GraphRecord {
                    id,
                    graph: g,
                    source: Source::Enumeration,
                });
            }
        }
        None
    }
}
