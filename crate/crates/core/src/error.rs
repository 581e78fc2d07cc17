use alloc::string::String;
use core::fmt;

/// Errors raised by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed polynomial text; `pos` is a byte offset into the input.
    Syntax {
        pos: usize,
        msg: &'static str,
    },
    NonIntegerCoefficient {
        pos: usize,
    },
    ZeroPolynomial,
    /// Constant term vanishes where a nonzero root product is required.
    ZeroConstantTerm,
    DegreeLimit {
        degree: usize,
        limit: usize,
    },
    IndexOutOfRange {
        index: usize,
        count: usize,
    },
    DivisionByZero,
    NotMonic,
    Reducible,
    NotSquarefree,
    NotInField,
    /// The base field of a splitting context is not normal over Q.
    BaseNotNormal,
    TorsionInput,
    ZeroInput,
    NotDependent,
    /// The degree bound is vacuous because w = 0.
    VacuousBound,
    CompactPlaceViolation {
        place: usize,
    },
    InvalidSpec(String),
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Syntax { pos, msg } => write!(f, "syntax error at position {pos}: {msg}"),
            Error::NonIntegerCoefficient { pos } => {
                write!(f, "non-integer coefficient at position {pos}")
            }
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::ZeroConstantTerm => f.write_str("polynomial has zero constant term"),
            Error::DegreeLimit { degree, limit } => {
                write!(f, "degree {degree} exceeds the configured limit {limit}")
            }
            Error::IndexOutOfRange { index, count } => {
                write!(f, "root index {index} out of range ({count} distinct roots)")
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NotMonic => f.write_str("polynomial is not monic"),
            Error::Reducible => f.write_str("polynomial is reducible"),
            Error::NotSquarefree => f.write_str("polynomial is not squarefree"),
            Error::NotInField => f.write_str("element does not lie in the field"),
            Error::BaseNotNormal => f.write_str("base field is not normal over Q"),
            Error::TorsionInput => f.write_str("input is a root of unity"),
            Error::ZeroInput => f.write_str("input is zero"),
            Error::NotDependent => f.write_str("no multiplicative relation within the exponent bound"),
            Error::VacuousBound => f.write_str("w = 0, the degree bound is vacuous"),
            Error::CompactPlaceViolation { place } => {
                write!(f, "eigenvalue modulus differs from 1 at compact place {place}")
            }
            Error::InvalidSpec(m) => write!(f, "invalid element spec: {m}"),
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
