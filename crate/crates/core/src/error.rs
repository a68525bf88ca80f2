use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,
    #[error("y does not satisfy y^2 = (t0 - 1)(1 - t1) at this point")]
    InconsistentY,
    #[error("malformed braid token {0:?}")]
    MalformedToken(String),
    #[error("generator index 0 is not allowed")]
    ZeroGenerator,
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("strand count must be positive")]
    NoStrands,
    #[error("operation needs at least {needed} strands, got {got}")]
    TooFewStrands { needed: usize, got: usize },
    #[error("braids live in different braid groups ({0} vs {1} strands)")]
    StrandMismatch(usize, usize),
    #[error("matrix is not invertible by unit-pivot elimination")]
    NotInvertible,
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("parameter out of bounds: {0}")]
    OutOfBounds(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
