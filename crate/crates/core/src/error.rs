use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable sets differ: {left:?} vs {right:?}")]
    RingMismatch { left: Vec<String>, right: Vec<String> },

    #[error("truncation bounds differ: {left} vs {right}")]
    BoundMismatch { left: u32, right: u32 },

    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("division by zero")]
    DivisionByZero,

    #[error("variable {0} has no image under the substitution")]
    UnmappedVariable(String),

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("polynomial is not symmetric in the root variables")]
    NotSymmetric,

    #[error("parity violation: n - r = {n} - {r} must be even for the skew-symmetric family")]
    Parity { n: usize, r: usize },

    #[error("corank r = {r} out of range 0..={n}")]
    RankOutOfRange { n: usize, r: usize },

    #[error("{param} = {value} exceeds the supported bound {max}")]
    ScopeBound {
        param: &'static str,
        value: usize,
        max: usize,
    },

    #[error("expected an integer coefficient, found {0}")]
    NonInteger(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
