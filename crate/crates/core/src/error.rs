use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are grouped so that front ends can map them onto exit codes:
/// [`Error::is_parse`] covers malformed input, [`Error::is_domain`] covers
/// well-formed input violating a mathematical precondition, and
/// [`Error::Infeasible`] signals an internal inconsistency.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("rank mismatch: expected {expected}, got {actual}")]
    RankMismatch { expected: usize, actual: usize },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("GL_n coordinates must sum to zero (sum is {sum}); subtract the mean to recenter")]
    NonzeroSum { sum: String },

    #[error("GL_n needs n >= 2, got {0}")]
    GlnTooSmall(usize),

    #[error("coweight is not in the open positive chamber: <alpha_{index}, mu> = {value} <= 0")]
    NotDominant { index: usize, value: String },

    #[error("Weyl group order exceeds the enumeration bound {bound}")]
    GroupTooLarge { bound: usize },

    #[error("elements belong to different Weyl groups")]
    GroupMismatch,

    #[error("J = {j} is not contained in I(v) = {i}")]
    NotSubset { j: String, i: String },

    #[error("subset must be a proper subset of the simple roots")]
    FullSubset,

    #[error("infeasible homology constraints: {0}")]
    Infeasible(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }

    pub fn is_domain(&self) -> bool {
        !self.is_parse() && !matches!(self, Error::Infeasible(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
