use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A bounded search (path length, resolution length, roster size) did
    /// not terminate within its cap.
    #[error("{what}: cap {cap} exceeded")]
    CapExceeded { what: String, cap: usize },

    #[error("ill-formed relation: {0}")]
    RelationIllFormed(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    /// The endomorphism ring modulo its radical has dimension > 1 but no
    /// element with a rational eigenvalue splitting was found.
    #[error("possible division algebra: End/rad of a module with dimension vector {dims:?} has dimension {top_dim} and no splitting element was found")]
    PossibleDivisionAlgebra { dims: Vec<usize>, top_dim: usize },

    #[error(
        "not triangular: nonzero path class {path} runs from the inner part to the outer part"
    )]
    NotTriangular { path: String },

    /// A theorem's hypothesis is not met; `culprit` names it (e.g. `j_!`).
    #[error("hypothesis failed ({culprit}): {detail}")]
    HypothesisFailed { culprit: String, detail: String },

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("not exact: {0}")]
    NotExact(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two independent routes to the same verdict disagreed.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
