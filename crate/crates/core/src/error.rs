use thiserror::Error;

use crate::graph::Vertex;

/// Errors produced by graph construction, the exact solvers and the I/O layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    Range { vertex: Vertex, n: usize },

    #[error("self-loop at vertex {vertex}")]
    Loop { vertex: Vertex },

    #[error("the vertex set must be nonempty")]
    EmptySet,

    #[error("the given vertex set is not an open packing")]
    NotAPacking,

    #[error("graph of order {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: Vertex },

    #[error("the graph is disconnected")]
    Disconnected,

    #[error("vertex {vertex} is not a support vertex")]
    NotASupport { vertex: Vertex },

    #[error("vertex {vertex} is not a strong support vertex")]
    NotAStrongSupport { vertex: Vertex },

    #[error("invalid double star specification: {0}")]
    Spec(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A graph-level error raised while reading a specific input line.
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{what} must be at least {min}, got {value}")]
    ParameterRange { what: &'static str, value: usize, min: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
