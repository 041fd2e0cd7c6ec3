//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by operator arithmetic, linear algebra and the closure
/// constructions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An input operator (or polynomial) that must be nonzero was zero.
    #[error("zero input")]
    ZeroInput,

    /// An operation that needs at least one operand got an empty list.
    #[error("empty input list")]
    EmptyInput,

    /// The matrix has a trivial kernel (full column rank), so no nonzero
    /// nullspace vector exists.
    #[error("trivial kernel")]
    TrivialKernel,

    /// A requested (order, degree) pair lies below the feasibility curve:
    /// the ansatz has at least as many equations as variables.
    #[error("infeasible size request")]
    InfeasibleSize,

    /// The requested order is at or below the pole of an order-degree curve.
    #[error("order too small")]
    OrderTooSmall,

    /// An algebra/domain/height-mode combination that is not defined.
    #[error("configuration error: {0}")]
    Config(String),

    /// Mixing elements of different coefficient domains (e.g. different
    /// moduli) or operators of different algebras.
    #[error("mismatched domains or algebras: {0}")]
    Mismatch(String),

    /// A precondition on orders (`Ord`) of an extended-ring polynomial was
    /// violated.
    #[error("order precondition violated: {0}")]
    OrdPrecondition(String),

    /// The verification window is too small for the requested check.
    #[error("window too small")]
    WindowTooSmall,

    /// No start index admits the required nonsingular unrolling window.
    #[error("no regular solution window")]
    NoRegularWindow,

    /// Parse error in the operator / polynomial text grammar.
    #[error("parse error: {0}")]
    Parse(String),

    /// A structurally valid request whose size is beyond what this
    /// implementation is prepared to compute.
    #[error("unsupported size: {0}")]
    Unsupported(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
