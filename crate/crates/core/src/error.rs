use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A cyclic summand of order `<= 0` was requested.
    NonFiniteGroup {
        index: usize,
        order: i64,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Generator `col` is sent to an element whose order does not divide
    /// the order of generator `col` (violation seen in row `row`).
    IllDefinedHom {
        row: usize,
        col: usize,
    },
    NotInvertible,
    NotConnected,
    CapExceeded {
        size: u128,
        cap: usize,
    },
    InfiniteQuotient,
    TableEntryOutOfRange {
        row: usize,
        col: usize,
    },
    /// An exact result does not fit a machine integer.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteGroup { index, order } => {
                write!(f, "summand {index} has order {order}; only finite cyclic summands are supported")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::IllDefinedHom { row, col } => write!(
                f,
                "matrix does not define a homomorphism: entry ({}, {}) times the order of generator {} is nonzero",
                row + 1,
                col + 1,
                col + 1
            ),
            Error::NotInvertible => write!(f, "endomorphism is not an automorphism"),
            Error::NotConnected => write!(f, "quandle is not connected (1 - T is not invertible)"),
            Error::CapExceeded { size, cap } => {
                write!(f, "group has {size} elements, above the cap of {cap}")
            }
            Error::InfiniteQuotient => write!(f, "quotient is infinite"),
            Error::TableEntryOutOfRange { row, col } => {
                write!(f, "table entry at row {row}, column {col} is out of range")
            }
            Error::Overflow => write!(f, "value does not fit in 64 bits"),
        }
    }
}

impl core::error::Error for Error {}
