use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree {0}: must be at least 1")]
    InvalidDegree(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("{what} {requested} exceeds the configured cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("empty interval: {lower} is not below {upper} in Bruhat order")]
    EmptyInterval { lower: String, upper: String },

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weights {left} and {right} have different coordinate sums")]
    UnequalSums { left: String, right: String },

    #[error("{0}")]
    Domain(String),

    #[error("no explicit formula for {0}")]
    UnsupportedCase(String),

    #[error("parse error: {0}")]
    Parse(String),
}
