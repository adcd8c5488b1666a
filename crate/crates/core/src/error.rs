use thiserror::Error;

/// Everything that can go wrong while building, parsing, or solving a graph.
///
/// Solver routines themselves are total once they hold a connected graph;
/// all failure happens at the boundary (construction, parsing, generation).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph on {n} vertices exceeds the supported maximum of 64")]
    CapacityExceeded { n: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("landmark set must be non-empty")]
    EmptySet,

    #[error("malformed graph6 header: {reason}")]
    MalformedHeader { reason: String },

    #[error("graph6 payload too short: expected {expected} bytes, got {got}")]
    TruncatedPayload { expected: usize, got: usize },

    #[error("graph6 payload carries bits beyond the adjacency matrix")]
    TrailingBits,

    #[error("graphs on {n} vertices are outside the graph6 single-byte range (max 62)")]
    UnsupportedSize { n: usize },

    #[error("parse error: {message}")]
    ParseError { message: String },

    #[error("bad generator parameters: {message}")]
    BadParams { message: String },

    #[error("no connected graph found after {attempts} sampling attempts")]
    ConnectivityRetryExhausted { attempts: usize },
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::ParseError {
            message: message.into(),
        }
    }

    pub(crate) fn bad_params(message: impl Into<String>) -> Self {
        Error::BadParams {
            message: message.into(),
        }
    }
}
