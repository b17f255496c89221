use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A request exceeds a configured size ceiling.
    #[error("resource limit: {what} = {requested} exceeds ceiling {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element {value} outside the ground set [1..{n}]")]
    OutOfRange { value: usize, n: usize },
    #[error("universe mismatch: [1..{left}] vs [1..{right}]")]
    UniverseMismatch { left: usize, right: usize },
    #[error("set is not sum-free: {0}")]
    NotSumFree(String),
    #[error("source and base sets intersect at {0}")]
    Overlap(usize),
    #[error("not a maximal independent set: {0}")]
    NotMaximalIndependent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
