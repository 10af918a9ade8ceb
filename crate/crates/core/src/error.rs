use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field order {0}")]
    InvalidOrder(u32),
    #[error("field order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("order {order} does not divide {target}")]
    NotDivisible { order: u32, target: u32 },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid element {elem} for {group}")]
    InvalidElement { elem: String, group: String },
    #[error("group mismatch: {0} vs {1}")]
    KindMismatch(String, String),
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("{0} has no two-dimensional irreducible representation")]
    NoTwoDimensionalRep(String),
    #[error("singular linear system: {0}")]
    Singular(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
