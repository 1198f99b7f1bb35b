use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A set needs at least one row and one column.
    Empty,
    /// Row `row` has `found` columns where `expected` were required.
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    /// Coordinate outside `[0, 1)` (NaN included).
    OutOfRange { row: usize, col: usize, value: f64 },
    /// Flat buffer length does not match `n * p`.
    ShapeMismatch { n: usize, p: usize, len: usize },
    InvalidBinCount,
    /// The minimum pairwise distance needs two rows.
    TooFewSamples { needed: usize, found: usize },
    NegativeRatio(f64),
    InvalidConfig(&'static str),
    /// Fewer empty bins than requested voids; a regrid bug if it ever shows up.
    VoidShortage { dim: usize, empty: usize, m: usize },
    DuplicateVoid { dim: usize, bin: usize },
    /// Void list for `dim` is malformed (wrong length or bin outside the grid).
    BadVoids { dim: usize },
    EmptyRange { lo: usize, hi: usize },
    /// Expansion size above [`crate::MAX_EXPANSION`].
    ExpansionTooLarge { m: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty => write!(f, "sample set must have at least one row and one column"),
            Error::Ragged {
                row,
                expected,
                found,
            } => write!(f, "row {row} has {found} columns, expected {expected}"),
            Error::OutOfRange { row, col, value } => {
                write!(f, "coordinate {value} at row {row}, column {col} is outside [0, 1)")
            }
            Error::ShapeMismatch { n, p, len } => {
                write!(f, "buffer of length {len} does not hold {n} x {p} coordinates")
            }
            Error::InvalidBinCount => write!(f, "bin count must be positive"),
            Error::TooFewSamples { needed, found } => {
                write!(f, "need at least {needed} samples, found {found}")
            }
            Error::NegativeRatio(r) => write!(f, "expansion ratio {r} is negative"),
            Error::InvalidConfig(msg) => write!(f, "invalid expansion config: {msg}"),
            Error::VoidShortage { dim, empty, m } => write!(
                f,
                "dimension {dim} has {empty} empty bins but {m} voids were requested"
            ),
            Error::DuplicateVoid { dim, bin } => {
                write!(f, "bin {bin} selected twice in dimension {dim}")
            }
            Error::BadVoids { dim } => write!(f, "malformed void list for dimension {dim}"),
            Error::EmptyRange { lo, hi } => write!(f, "empty expansion range [{lo}, {hi}]"),
            Error::ExpansionTooLarge { m, max } => {
                write!(f, "expansion size {m} exceeds the supported maximum {max}")
            }
        }
    }
}

impl core::error::Error for Error {}
