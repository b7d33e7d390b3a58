//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the core algorithms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two braids on different numbers of strands were combined.
    StrandMismatch {
        /// Strands of the left operand.
        left: usize,
        /// Strands of the right operand.
        right: usize,
    },
    /// A generator index outside `1..n` for the given number of strands.
    GeneratorOutOfRange {
        /// Offending index.
        index: i64,
        /// Strand count or free rank.
        bound: usize,
    },
    /// A strand position outside the braid.
    PositionOutOfRange {
        /// Offending position.
        position: usize,
        /// Strand count.
        strands: usize,
    },
    /// A label that the label map does not know.
    UnknownLabel(String),
    /// A band between a label and itself.
    DegenerateBand(String),
    /// A factor shape that cannot be expanded.
    Unsupported(String),
    /// A regeneration rule applied to a factor of the wrong power.
    RuleMismatch {
        /// Rule number.
        rule: u8,
        /// Power of the factor.
        power: i32,
    },
    /// Arithmetic left the range of the integer type.
    Overflow,
    /// The fiber order is not a permutation of the generators.
    BadFiberOrder,
    /// A monodromy image that is not a transposition.
    NotTransposition(String),
    /// The monodromy graph is not connected.
    Disconnected,
    /// The monodromy map does not kill a relator.
    RelatorNotKilled(String),
    /// A factor for which no lift to the mapping class group was found.
    Unliftable(usize),
    /// Input data that is inconsistent in some other way.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::StrandMismatch { left, right } => {
                write!(f, "strand count mismatch: {left} vs {right}")
            }
            Error::GeneratorOutOfRange { index, bound } => {
                write!(f, "generator index {index} out of range for {bound}")
            }
            Error::PositionOutOfRange { position, strands } => {
                write!(f, "position {position} out of range for {strands} strands")
            }
            Error::UnknownLabel(l) => write!(f, "unknown label {l}"),
            Error::DegenerateBand(l) => write!(f, "band joins {l} to itself"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::RuleMismatch { rule, power } => {
                write!(f, "regeneration rule {rule} does not apply to power {power}")
            }
            Error::Overflow => f.write_str("integer overflow"),
            Error::BadFiberOrder => f.write_str("fiber order is not a permutation of the generators"),
            Error::NotTransposition(g) => write!(f, "image of {g} is not a transposition"),
            Error::Disconnected => f.write_str("monodromy graph is disconnected"),
            Error::RelatorNotKilled(r) => write!(f, "monodromy does not kill relator {r}"),
            Error::Unliftable(i) => write!(f, "factor {i} has no lift"),
            Error::Invalid(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for Error {}
