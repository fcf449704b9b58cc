use thiserror::Error;

/// Errors produced by the library.
///
/// `Defect` is reserved for results that would contradict a proven theorem
/// (for example a greedy orientation whose largest eigenvalue exceeds the
/// matching-polynomial root). It always signals a bug, never bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected: vertex {vertex} is unreachable from {root}")]
    Disconnected { root: usize, vertex: usize },

    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),

    #[error("edge {{{0}, {1}}} is a tree edge")]
    TreeEdge(usize, usize),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("{what} = {value} exceeds guard {limit}")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("zero polynomial has no roots")]
    ZeroPolynomial,

    #[error("polynomial {0} has no real root")]
    NoRealRoot(String),

    #[error("polynomial {0} is not real-rooted")]
    NotRealRooted(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("switching is inadmissible on edge {{{0}, {1}}}")]
    Inadmissible(usize, usize),

    #[error("defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Guard { what, value, limit })
    } else {
        Ok(())
    }
}
