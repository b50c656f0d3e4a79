//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by the exact-arithmetic and curve machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements live in incompatible fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("degree {0} exceeds the supported bound {1}")]
    DegreeTooLarge(usize, usize),
    #[error("divisor enumeration exceeded the 10^6 candidate cap")]
    DivisorCapExceeded,
    #[error("pole encountered at every attempted sample point")]
    PoleEncountered,
    #[error("could not gather enough samples: {0}")]
    InsufficientSamples(String),
    #[error("coefficients outside Q are not supported here: {0}")]
    UnsupportedCoefficientField(String),
    #[error("matrix is not an involution in PGL3")]
    NotAnInvolution,
    #[error("transformation does not leave the curve invariant")]
    NotInvariant,
    #[error("the fixed axis lies on the curve (restriction vanishes identically)")]
    AxisOnCurve,
    #[error("unknown group label: {0}")]
    UnknownLabel(String),
    #[error("unknown family id: {0}")]
    UnknownFamily(String),
    #[error("operation not available for family {0}: {1}")]
    UnsupportedFamily(String, String),
    #[error("inadmissible parameters: {0}")]
    InadmissibleParameters(String),
    #[error("the instantiated form is singular")]
    SingularInstance,
    #[error("curve does not have the required shape: {0}")]
    WrongShape(String),
    #[error("right-hand side is not squarefree: the quotient is not of genus one")]
    DegenerateQuartic,
    #[error("no rational point available for the Weierstrass reduction; supply one")]
    NoRationalPointAvailable,
    #[error("curve is singular (discriminant is zero)")]
    SingularCurve,
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    #[error("point is torsion of order {0}")]
    TorsionPoint(u32),
    #[error("twist parameter must be a nonzero square-free integer")]
    NotSquareFree,
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("chain step undefined at the given point: {0}")]
    ChainUndefined(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
