use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` has a negative exponent and was assigned 0")]
    ZeroToNegativePower(String),

    #[error("variable `{0}` is neither assigned nor consumed by the evaluation hook")]
    UnassignedVariable(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("derivative order {order} exceeds the configured cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("unexpected term shape: {0}")]
    ShapeViolation(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("sequence length {len} exceeds the enumeration cap {cap}")]
    TooLarge { len: usize, cap: usize },

    #[error("entry {entry} is outside 1..={max}")]
    EntryOutOfRange { entry: u32, max: u32 },

    #[error("not a parking function: {0}")]
    NotAParkingFunction(String),

    #[error("gcd({a}, {b}) != 1")]
    GcdViolation { a: u64, b: u64 },

    #[error("{a} is not congruent to 1 modulo {b}")]
    ModViolation { a: u64, b: u64 },

    #[error("block shift {0} does not leave positive integer entries")]
    NonIntegralShift(String),

    #[error("expected an integer result, got {0}")]
    NonIntegerResult(String),

    #[error("argument {index} must be nonzero")]
    ZeroArgument { index: usize },

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("unknown grammar `{0}`")]
    UnknownGrammar(String),

    #[error("parse error: {0}")]
    Parse(String),
}
