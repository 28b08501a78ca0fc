use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("rank m = {0} is not supported here")]
    UnsupportedRank(usize),
    #[error("invalid weight diagram: {0}")]
    InvalidDiagram(String),
    #[error("weight is typical")]
    Typical,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("bipartition ({0}) does not fit into rank {1}")]
    BipartitionTooLong(usize, usize),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("label is negligible (superdimension 0)")]
    Negligible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("oracle dimension bound exceeded: {dim} > {bound}")]
    DimensionBound { dim: usize, bound: usize },
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("oracle: {0}")]
    Oracle(String),
    #[error("summand could not be identified: {0}")]
    Identification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
