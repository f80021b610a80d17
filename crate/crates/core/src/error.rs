use thiserror::Error;

use crate::graph::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("graph order {n} is above the search cap {cap}; refusing to approximate")]
    OrderAboveCap { n: usize, cap: usize },

    #[error("ranking has {got} labels but the graph has {n} vertices")]
    LabelCountMismatch { got: usize, n: usize },

    #[error("vertex {vertex} has label 0; labels must be positive")]
    ZeroLabel { vertex: usize },

    #[error("edge {0} is already present in the graph")]
    EdgeAlreadyPresent(Edge),

    #[error("vertex {vertex} is not in the given vertex set")]
    VertexNotInSet { vertex: usize },

    #[error("{what} = {value} is out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        expected: String,
    },

    #[error("{what}: {count} results exceed the limit of {limit}")]
    TooManyResults {
        what: &'static str,
        count: u128,
        limit: u128,
    },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn out_of_range(
        what: &'static str,
        value: impl TryInto<i64>,
        expected: impl Into<String>,
    ) -> Self {
        Error::OutOfRange {
            what,
            value: value.try_into().unwrap_or(i64::MAX),
            expected: expected.into(),
        }
    }
}
