//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero polynomial.
    DivisionByZeroPoly,
    /// Exact polynomial division left a nonzero remainder.
    InexactDivision,
    /// A polynomial expected to be even had an odd-degree coefficient.
    OddCoefficient(usize),
    /// Sturm counting requires a squarefree polynomial.
    NotSquarefree,
    /// Matrix inversion / negative matrix power of a singular matrix.
    SingularMatrix,
    /// A denominator sequence term vanished at the requested index.
    ZeroDenominator { m: u32, j: u32, r: i64 },
    /// A certified comparison stayed inconclusive at the precision cap.
    InconclusivePrecision,
    /// Integer-numerator scaling failed to clear the denominator (must never fire).
    NonIntegerNumerator(String),
    /// An index outside the defined range of a family or sequence.
    UndefinedIndex(String),
    /// No linear recurrence of the allowed order fits the data.
    NoRecurrence { max_order: usize },
    /// Division by an interval that contains zero.
    IntervalDivByZero,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZeroPoly => write!(f, "division by zero polynomial"),
            Error::InexactDivision => write!(f, "polynomial division left a remainder"),
            Error::OddCoefficient(k) => {
                write!(f, "expected even polynomial, found x^{k} term")
            }
            Error::NotSquarefree => write!(f, "polynomial is not squarefree"),
            Error::SingularMatrix => write!(f, "singular matrix"),
            Error::ZeroDenominator { m, j, r } => {
                write!(f, "sequence term F^({m},{j}) vanishes at r = {r}")
            }
            Error::InconclusivePrecision => {
                write!(f, "comparison inconclusive at precision cap")
            }
            Error::NonIntegerNumerator(s) => write!(f, "non-integer numerator: {s}"),
            Error::UndefinedIndex(s) => write!(f, "undefined index: {s}"),
            Error::NoRecurrence { max_order } => {
                write!(f, "no linear recurrence of order <= {max_order} fits")
            }
            Error::IntervalDivByZero => write!(f, "division by interval containing zero"),
        }
    }
}
