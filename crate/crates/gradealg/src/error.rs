//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("algebras are graded by different groups")]
    GroupMismatch,

    #[error("tensor factor is not trivially graded: basis element `{label}` has degree {degree}")]
    NotTriviallyGraded { label: String, degree: String },

    #[error("cocycle law fails at triple ({g}, {h}, {k})")]
    CocycleLawViolated { g: String, h: String, k: String },

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("size {n} exceeds the supported bound {max}")]
    TooLarge { n: usize, max: usize },

    #[error("Grassmann elements have different generator counts ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("assignment for variable x{index} is not homogeneous of degree {degree}")]
    DegreeMismatch { index: usize, degree: String },

    #[error("search budget exceeded: {required} elementary steps over the bound {budget}")]
    SearchBudgetExceeded { required: u128, budget: u128 },

    #[error("generator at position {position} is not homogeneous")]
    NotHomogeneous { position: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no witness: {0}")]
    NoWitness(String),

    #[error("independence failure: {0}")]
    IndependenceFailure(String),
}
