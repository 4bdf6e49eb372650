use alloc::string::String;
use core::fmt;

/// Which feasibility condition a requested `(n, d)` pair violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailedCondition {
    /// `d > 0`
    PositiveDegree,
    /// `4 | d` for odd `d`.
    DegreeDivisibleByFour,
    /// `d ≡ 2 (mod 4)`: the existence question is open, nothing is constructed.
    DegreeTwoModFourOpen,
    /// `2 | n`
    EvenOrder,
    /// `n ≥ d + 4`
    OrderAtLeastDegreePlusFour,
    /// `8 | d` and `d ≥ 8`, required by the prism-complement family.
    PrismDegree,
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailedCondition::PositiveDegree => "d > 0",
            FailedCondition::DegreeDivisibleByFour => "4 | d",
            FailedCondition::DegreeTwoModFourOpen => {
                "4 | d (d ≡ 2 mod 4 is an open problem for Cayley and vertex-transitive nut graphs; no construction is attempted)"
            }
            FailedCondition::EvenOrder => "2 | n",
            FailedCondition::OrderAtLeastDegreePlusFour => "n ≥ d + 4",
            FailedCondition::PrismDegree => {
                "8 | d and d ≥ 8 (beta = (d+4)/2 must have beta/2 odd)"
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidOrder {
        order: usize,
        minimum: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    InvalidGenerators(String),
    InvalidConnectionSet(String),
    InvalidWord {
        offset: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    Graph6 {
        offset: usize,
        message: &'static str,
    },
    Infeasible {
        order: usize,
        degree: usize,
        condition: FailedCondition,
    },
    SearchWindowExceeded {
        order: usize,
        limit: usize,
    },
    /// A certificate failed re-verification, or a construction did not certify.
    Certification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder { order, minimum } => {
                write!(f, "invalid order {order}: must be at least {minimum}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "element index {index} out of range for size {len}")
            }
            Error::InvalidGenerators(msg) => write!(f, "invalid generator set: {msg}"),
            Error::InvalidConnectionSet(msg) => write!(f, "invalid connection set: {msg}"),
            Error::InvalidWord { offset } => {
                write!(f, "invalid generator word at byte offset {offset}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Graph6 { offset, message } => {
                write!(f, "graph6 parse error at byte offset {offset}: {message}")
            }
            Error::Infeasible { order, degree, condition } => write!(
                f,
                "infeasible parameters (n={order}, d={degree}): condition {condition} fails"
            ),
            Error::SearchWindowExceeded { order, limit } => write!(
                f,
                "circulant search window exceeded: n={order} > {limit} (raise the window to override)"
            ),
            Error::Certification(msg) => write!(f, "certification failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
