//! Error type shared by every module of the crate.

use crate::poly::Poly;
use crate::scalar::Rational;

/// Everything that can go wrong in an exact computation.
///
/// Variants fall into two families: *input* errors (malformed or
/// inconsistent data, see [`Error::is_input_error`]) and *domain* errors,
/// which are well-formed questions whose mathematical answer is "undefined"
/// (a degenerate chart, a point that is not stable, …).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// An element of a quotient ring shares a factor with the modulus.
    ///
    /// The factor (a nontrivial monic divisor of the modulus) lets callers
    /// split the ring and retry.
    #[error("element is not invertible; it shares the factor {factor} with the modulus")]
    NotInvertible { factor: Poly<Rational> },
    /// A polynomial that must be squarefree is not.
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    /// An exact division left a remainder.
    #[error("inexact division")]
    InexactDivision,
    /// Factorization over the rationals is only offered for small degrees.
    #[error("factorization supports degree at most {max}, got {degree}")]
    FactorDegreeTooLarge { degree: usize, max: usize },
    /// The requested operation is meaningless in this characteristic.
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),
    /// A matrix that must be invertible has zero determinant.
    #[error("singular matrix")]
    SingularMatrix,
    /// The point does not satisfy φⁿ(P) = P.
    #[error("point is not periodic with period {0}")]
    NotPeriodic(u32),
    /// No affine chart satisfying the spectrum prerequisites was found.
    #[error("no good chart found after {0} attempts")]
    ChartSearchExhausted(usize),
    /// A polynomial expected to be an exact n-th power is not.
    #[error("characteristic polynomial is not an exact {0}-th power")]
    NotAnNthPower(u32),
    /// Some multiplier equals 1, so the fixed-point identity is vacuous.
    #[error("a multiplier equals 1 (p(1) = 0)")]
    DegenerateAtOne,
    /// A rational input has negative valuation at the given prime.
    #[error("input has negative valuation at p = {p}")]
    BadValuation { p: u64 },
    /// Both forms of a point of projective space vanish identically.
    #[error("both forms vanish identically")]
    ZeroPoint,
    /// The point has nonzero resultant, so it is not on the boundary.
    #[error("resultant is nonzero; the point is not degenerate")]
    NotDegenerate,
    /// The point is not GIT-stable.
    #[error("point is not stable")]
    NotStable,
    /// All coordinates of a projective invariant vanish.
    #[error("all coordinates vanish; the point is not stable")]
    AllZero,
    /// A value expected to be rational lies outside the prime field.
    #[error("value is not rational")]
    NotRational,
    /// Malformed or inconsistent input.
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Whether this error describes bad input rather than a mathematical
    /// domain condition.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Invalid(_) | Error::BadValuation { .. })
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
