use thiserror::Error;

/// Errors produced by the algebra, linear-algebra and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must be nonempty with distinct labels: {0}")]
    InvalidAlphabet(String),

    #[error("word {0:?} is not a Lyndon word")]
    NotLyndon(Vec<u8>),

    #[error("degree-1 word has no standard factorization")]
    DegreeOneFactorization,

    #[error("unknown generator label `{0}`")]
    UnknownLabel(String),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeAboveCap { degree: usize, cap: usize },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("strand count {n} invalid: {reason}")]
    InvalidStrandCount { n: usize, reason: &'static str },

    #[error("invalid generator B({i},{j}) for n = {n}")]
    InvalidGenerator { i: usize, j: usize, n: usize },

    #[error("elements live over different strand counts ({0} vs {1})")]
    MismatchedStrands(usize, usize),

    #[error("not a permutation of 1..={0}")]
    NotBijective(usize),

    #[error("expected a nonzero element")]
    ZeroElement,

    #[error("expected a homogeneous element of degree 1")]
    NotDegreeOne,

    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("braid word invalid: {0}")]
    InvalidBraid(String),

    #[error("representation spec invalid: {0}")]
    InvalidSpec(String),

    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),

    #[error("matrix is not invertible over the integers")]
    NotInvertible,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
