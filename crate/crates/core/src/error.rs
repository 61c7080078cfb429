use thiserror::Error;

use crate::tree::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a perfect matching: {0}")]
    NotAMatching(String),

    #[error("links {0}-{1} and {2}-{3} cross")]
    Crossing(usize, usize, usize, usize),

    #[error("index {index} out of range (must be below {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("pattern has no link between {0} and {1}")]
    NoSuchStrand(usize, usize),

    #[error("pattern is missing the required link {0}-{1}")]
    MissingLink(usize, usize),

    #[error("child rank {rank} out of range (node has {children} children)")]
    RankOutOfRange { rank: usize, children: usize },

    #[error("the root has no parent")]
    AtRoot,

    #[error("invalid path code: {0}")]
    InvalidCode(String),

    #[error("argument outside domain: {0}")]
    DomainError(String),

    #[error("size {size} exceeds the oracle limit {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("invalid Dyck path: {0}")]
    InvalidDyck(String),

    #[error("invalid 123-avoiding permutation: {0}")]
    InvalidPerm(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error("{what} is not available for the {family} family")]
    Unsupported { what: String, family: Family },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}
