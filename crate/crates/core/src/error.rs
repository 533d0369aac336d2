use thiserror::Error;

/// Errors raised by the library. Every operation is exact, so these signal
/// either bad input or a violated mathematical invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("linear map does not stabilize the sublattice")]
    NotInvariant,

    #[error("matrix does not map the fan to itself")]
    NotFanAutomorphism,

    #[error("cone is not strictly convex")]
    NotPointed,

    #[error("ray {0:?} lies outside the support of the fan")]
    RayOutsideSupport(Vec<i64>),

    #[error("cone images under the structure maps differ")]
    ImageMismatch,

    #[error("expected an integer, got {0}")]
    NonIntegral(String),

    #[error("expression is not homogeneous of degree {0}")]
    Inhomogeneous(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
