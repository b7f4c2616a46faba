use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series truncated in different variables: {left} vs {right}")]
    CapVarMismatch { left: Var, right: Var },

    #[error("geometric inverse does not terminate: monomial has no positive power of {0}")]
    NonConvergent(Var),

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("operation requires a nonempty composition")]
    EmptyComposition,

    #[error("{what} = {value} exceeds the supported bound {max}")]
    TooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("length mismatch: permutation has {perm} letters, partition has {partition} parts")]
    LengthMismatch { perm: usize, partition: usize },

    #[error("truncation cap {cap} is below the minimum degree {k}")]
    CapTooSmall { cap: u32, k: usize },

    #[error("constant term of the denominator is not divisible into the right-hand side")]
    DenominatorNotUnit,

    #[error("invalid {what}: {msg}")]
    Invalid { what: &'static str, msg: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown sequence {0}")]
    UnknownSequence(String),

    #[error("network unavailable: {0}")]
    NetworkUnavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
