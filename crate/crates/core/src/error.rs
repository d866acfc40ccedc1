//! Error type shared by all modules.

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A multiplicity exceeds [`crate::types::MAX_MULTIPLICITY`].
    MultiplicityTooLarge(u32),
    /// A two-point base case was asked for with both multiplicities zero.
    EmptyConfiguration,
    /// An operation with a normalization precondition (`m12 >= m21`) was
    /// called on a non-normalized configuration.
    NotNormalized,
    /// D-sets are only defined in the case `m11 > m21`.
    NotCaseTwo,
    /// `phi_td(t, d, _)` requires `t >= d`.
    PhiOrder { t: i64, d: i64 },
    /// The Taylor oracle refuses ideals with too many minimal generators.
    OracleScaleExceeded { generators: usize },
    /// A Taylor strand had nonvanishing homology above the resolution length.
    HomologyTruncation { a: i64, b: i64 },
    /// A first-difference matrix violates the zero-border invariant or is
    /// not rectangular.
    MalformedMatrix(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MultiplicityTooLarge(m) => {
                write!(f, "multiplicity {m} exceeds the supported maximum")
            }
            Error::EmptyConfiguration => write!(f, "empty configuration"),
            Error::NotNormalized => write!(f, "configuration is not normalized (m12 < m21)"),
            Error::NotCaseTwo => write!(f, "D-sets require m11 > m21"),
            Error::PhiOrder { t, d } => write!(f, "phi_td requires t >= d (got t={t}, d={d})"),
            Error::OracleScaleExceeded { generators } => {
                write!(f, "oracle scale exceeded: {generators} minimal generators")
            }
            Error::HomologyTruncation { a, b } => {
                write!(
                    f,
                    "nonzero strand homology above level 3 at bidegree ({a},{b})"
                )
            }
            Error::MalformedMatrix(what) => write!(f, "malformed matrix: {what}"),
        }
    }
}

impl core::error::Error for Error {}
