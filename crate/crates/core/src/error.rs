use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("element budget of {budget} exceeded")]
    ElementBudget { budget: usize },

    #[error("graph has {vertices} vertices, more than the budget of {budget}")]
    VertexBudget { vertices: usize, budget: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid group descriptor: {0}")]
    InvalidSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("group too large for exhaustive subgroup search: order {order} > {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("graph construction failed verification: {0}")]
    Construction(String),

    #[error("empty corpus: {0}")]
    EmptyCorpus(String),
}

impl Error {
    /// True for errors that mean a search budget was exhausted.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::ElementBudget { .. } | Error::VertexBudget { .. } | Error::TooLarge { .. })
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
