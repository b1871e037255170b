use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KdmvError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid family spec: {0}")]
    Spec(String),
    #[error("graph too large: {0} vertices (limit {limit})", limit = crate::MAX_VERTICES)]
    Size(usize),
    #[error("graph must be connected")]
    Connectivity,
    #[error("vertices {0} and {1} are in different components")]
    Distance(usize, usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("condition not satisfied: {0}")]
    Condition(String),
    #[error("construction produced an invalid coloring: {0}")]
    Construction(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, KdmvError>;
