use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected order {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square and non-empty")]
    NotSquare,

    #[error("block list is empty")]
    EmptyBlockList,

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid sign pattern: {0}")]
    InvalidPattern(String),

    #[error("unknown pattern name `{0}`")]
    UnknownPattern(String),

    #[error("polynomial is not monic (leading coefficient {0})")]
    NotMonic(String),

    #[error("polynomial has no coefficients")]
    EmptyPolynomial,

    #[error(
        "root finding did not converge after {iterations} iterations (best residual {residual:e})"
    )]
    RootFinding { iterations: usize, residual: f64 },

    #[error("odd total multiplicity {0}; cannot group roots into quadratics")]
    OddDegree(usize),

    #[error("root {0} has no complex-conjugate partner within tolerance")]
    ConjugateClosure(String),

    #[error("target violates the T-realizability gate: a3 = {a3}, a5 = {a5} (need a3/a5 > 0)")]
    Gate { a3: String, a5: String },

    #[error("refined inertia total {0} is not 8")]
    InertiaTotal(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("parse error: {0}")]
    Parse(String),
}
