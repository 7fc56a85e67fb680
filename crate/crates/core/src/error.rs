use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph is not triconnected")]
    NotTriconnected,
    /// A vertex pair is joined by more than one latching edge; the base
    /// plane graph cannot be triconnected.
    #[error("latching graph has parallel edges between {0} and {1}")]
    MultiEdge(usize, usize),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    /// Some block admits no potential maximal clique from the supplied set.
    #[error("potential maximal clique set is incomplete: no candidate for block with separator {separator:?}")]
    IncompletePmcSet { separator: Vec<usize> },
    #[error("graph with {n} vertices exceeds the brute-force limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
