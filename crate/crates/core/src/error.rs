use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors reported by the numerical kernels.
#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// A parameter is outside its documented range.
    InvalidArgument(String),
    /// An index or count exceeds the available data.
    OutOfRange {
        what: &'static str,
        requested: usize,
        available: usize,
    },
    /// A continued-fraction coefficient is zero.
    ZeroCoefficient { index: usize },
    /// A coefficient that must be positive is not.
    NonPositive { what: &'static str, index: usize, value: f64 },
    /// The convergent denominator vanished at the evaluation point.
    Pole { n: usize, denominator: f64 },
    /// An iteration hit its cap before meeting its tolerance.
    NoConvergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },
    /// Hankel factorization pivot at or below tolerance at the given level
    /// (1-based size of the leading block).
    NotPositiveDefinite {
        level: usize,
        pivot: f64,
        ill_conditioned: bool,
    },
    /// A dense linear system is singular to working precision.
    Singular { what: &'static str, condition: f64 },
    /// Two independent evaluations of the same quantity disagree.
    CrossCheck {
        what: &'static str,
        index: usize,
        discrepancy: f64,
    },
    /// The evaluation point lies on the singular set.
    Singularity { what: &'static str, at: f64 },
    /// Charges or positions violate ordering, distinctness or the domain.
    Infeasible(String),
    /// Zeros of a Stieltjes polynomial that are complex, outside the
    /// interval or colliding with Gauss nodes, as `(re, im)` pairs.
    KronrodNodes { offending: Vec<(f64, f64)> },
    /// A root search found the wrong number of zeros.
    ZeroCount { expected: usize, found: usize },
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::OutOfRange {
                what,
                requested,
                available,
            } => write!(f, "{what}: requested {requested}, only {available} available"),
            Error::ZeroCoefficient { index } => write!(f, "coefficient {index} is zero"),
            Error::NonPositive { what, index, value } => {
                write!(f, "{what} at index {index} is not positive ({value:e})")
            }
            Error::Pole { n, denominator } => {
                write!(f, "pole at z: convergent {n} has denominator {denominator:e}")
            }
            Error::NoConvergence {
                what,
                iterations,
                residual,
            } => write!(
                f,
                "{what} did not converge in {iterations} iterations (residual {residual:e})"
            ),
            Error::NotPositiveDefinite {
                level,
                pivot,
                ill_conditioned,
            } => {
                write!(
                    f,
                    "moment sequence not strictly positive definite at level {level} (pivot {pivot:e})"
                )?;
                if *ill_conditioned {
                    f.write_str(", ill-conditioned")?;
                }
                Ok(())
            }
            Error::Singular { what, condition } => {
                write!(f, "{what}: singular system (condition estimate {condition:e})")
            }
            Error::CrossCheck {
                what,
                index,
                discrepancy,
            } => write!(
                f,
                "{what}: cross-check failed at index {index} (relative discrepancy {discrepancy:e})"
            ),
            Error::Singularity { what, at } => write!(f, "{what}: singular at {at}"),
            Error::Infeasible(msg) => write!(f, "infeasible configuration: {msg}"),
            Error::KronrodNodes { offending } => {
                f.write_str("Stieltjes polynomial has unusable zeros:")?;
                for (re, im) in offending {
                    write!(f, " ({re:.6e}{im:+.6e}i)")?;
                }
                Ok(())
            }
            Error::ZeroCount { expected, found } => {
                write!(f, "expected {expected} zeros, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
