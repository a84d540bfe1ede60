use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("unsupported order {0}: operation requires n >= 5")]
    UnsupportedOrder(usize),

    #[error("cycle length bound {0} outside 3..=8")]
    CycleBound(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not a connected md2 graph")]
    NotConnectedMd2,

    #[error("interpolation inconsistent with degree bound {0}")]
    Interpolation(usize),

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),

    #[error("malformed partition: {0}")]
    Partition(String),

    #[error("switching condition violated: {0}")]
    Condition(String),

    #[error("invalid construction spec: {0}")]
    Construction(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconsistent observations: {0}")]
    Inconsistent(String),

    #[error("ambiguous degree sequence: {0} candidate solutions")]
    Ambiguous(usize),

    #[error("walk budget of {0} exceeded")]
    Budget(u64),

    #[error("unknown method tag {0:?}")]
    UnknownMethod(String),

    #[error("source is not isomorph-free: {0} and {1} are isomorphic")]
    NotIsomorphFree(String, String),

    #[error("missing report for method {0}")]
    MissingReport(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
