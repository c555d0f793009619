use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("quaternionic rank {0} is not supported (expected 0..={max})", max = crate::exterior::MAX_RANK)]
    RankOutOfRange(usize),

    #[error("coframe index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("blade indices must be strictly increasing: {0:?}")]
    UnorderedBlade(Vec<usize>),

    #[error("axis {0} is not one of 1, 2, 3")]
    InvalidAxis(u8),

    #[error("frame position {s} out of range 1..={n}")]
    InvalidFramePosition { s: usize, n: usize },

    #[error("expected a homogeneous multivector")]
    NotHomogeneous,

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("parameter {name} = {value} out of range: {reason}")]
    ParameterOutOfRange {
        name: &'static str,
        value: usize,
        reason: String,
    },

    #[error("operator image leaves the basis at blade {0}")]
    OutsideBasis(String),

    #[error("operators {left} and {right} act on different bases or degree shifts")]
    IncompatibleOperators { left: String, right: String },

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("matrix is not in so(4,1): A E1 != -E1 A^t")]
    NotInLieAlgebra,

    #[error("sequence length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("boundary of boundary is nonzero on cell {0}")]
    BoundarySquareNonzero(String),

    #[error("twist is not a signed permutation of the quaternion coordinates")]
    InvalidTwist,
}

pub type Result<T> = std::result::Result<T, Error>;
