use alloc::string::String;

/// Errors raised by constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("modulus does not define a primitive element")]
    NotPrimitive,
    #[error("division by zero")]
    DivByZero,
    #[error("value {value} out of range {range}")]
    OutOfRange { value: u64, range: String },
    #[error("minimal polynomial coefficient escaped the subfield GF({q})")]
    CoefficientLeak { q: u64 },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("set is not closed under multiplication by q modulo N (offending element {0})")]
    NotCosetClosed(u64),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("codes use different shift constants or towers")]
    ShiftMismatch,
    #[error("no arithmetic progression of length >= 1 in the target set")]
    NoProgression,
    #[error("operation budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}
