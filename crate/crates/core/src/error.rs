use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Result alias for fallible operations in this crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A siteswap with no throws.
    EmptySiteswap,
    /// A token in a siteswap that is not a non-negative integer.
    BadSiteswapToken(String),
    /// A throw outside `[0, n]`.
    ThrowOutOfRange {
        /// 1-based position.
        index: usize,
        /// The offending value.
        throw: i64,
        /// Period.
        period: usize,
    },
    /// Two throws land on the same residue.
    NotBijective {
        /// First 1-based position.
        first: usize,
        /// Second 1-based position.
        second: usize,
    },
    /// Matrix dimensions are inconsistent with the request.
    Dimension(String),
    /// A square system had no unique solution.
    Singular,
    /// The matrix has lower rank than required.
    RankDeficient {
        /// Actual rank.
        rank: usize,
        /// Required rank.
        expected: usize,
    },
    /// A matrix is not π-unimodular (or not consecutively unimodular).
    NotUnimodular(String),
    /// A positive complement failed its exhaustive verification.
    ComplementMismatch {
        /// The k-subset (1-based columns) where the identity broke.
        subset: Vec<usize>,
    },
    /// A frieze shape or value requirement was violated.
    InvalidFrieze(String),
    /// The input is not a frieze where one is required.
    NotFrieze,
    /// The solution space of a frieze recurrence has the wrong dimension.
    KernelDimension {
        /// Dimension found.
        found: usize,
        /// Dimension required.
        expected: usize,
    },
    /// The normalizing necklace minor vanished.
    ZeroNormalization,
    /// Reconstruction did not reproduce its input.
    RoundTrip(String),
    /// A sequence window does not cover the rows a computation needs.
    InsufficientWindow {
        /// First index needed.
        need_from: i64,
        /// Last index needed.
        need_to: i64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySiteswap => write!(f, "empty siteswap"),
            Error::BadSiteswapToken(t) => write!(f, "invalid siteswap token {t:?}"),
            Error::ThrowOutOfRange { index, throw, period } => {
                write!(f, "throw {throw} at position {index} is outside [0, {period}]")
            }
            Error::NotBijective { first, second } => {
                write!(f, "throws at positions {first} and {second} land on the same residue")
            }
            Error::Dimension(m) => write!(f, "dimension mismatch: {m}"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::RankDeficient { rank, expected } => {
                write!(f, "rank {rank} is below the required {expected}")
            }
            Error::NotUnimodular(m) => write!(f, "not unimodular: {m}"),
            Error::ComplementMismatch { subset } => {
                write!(f, "complementary minor identity fails on columns {subset:?}")
            }
            Error::InvalidFrieze(m) => write!(f, "invalid frieze: {m}"),
            Error::NotFrieze => write!(f, "input is not a frieze"),
            Error::KernelDimension { found, expected } => {
                write!(f, "solution space has dimension {found}, expected {expected}")
            }
            Error::ZeroNormalization => write!(f, "normalizing minor is zero"),
            Error::RoundTrip(m) => write!(f, "round trip failed: {m}"),
            Error::InsufficientWindow { need_from, need_to } => {
                write!(f, "sequence must cover [{need_from}, {need_to}]")
            }
        }
    }
}

impl core::error::Error for Error {}
