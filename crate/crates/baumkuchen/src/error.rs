use thiserror::Error;

/// Errors produced by geometry construction, verification, and the oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    InvalidCuts(String),
    #[error("cut point lies outside the inner disk")]
    PointOutsideInnerDisk,
    #[error("inner radius exceeds outer radius")]
    RadiiOrder,
    #[error("ray origin lies outside the circle")]
    OutsideCircle,
    #[error("point does not lie on the circle boundary")]
    OffBoundary,
    #[error("cut point is not on the inner boundary")]
    NotBoundaryCase,
    #[error("cut point coincides with the center; the decomposition disk is degenerate")]
    DegenerateDecomposition,
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("quadrature did not reach the requested tolerance within the depth limit")]
    Convergence,
}

impl Error {
    pub fn invalid_cuts_even() -> Self {
        Error::InvalidCuts("cuts must be even and ≥ 4".into())
    }

    pub fn invalid_cuts_multiple_of_four() -> Self {
        Error::InvalidCuts("cuts must be a multiple of 4".into())
    }

    /// Process exit code for the CLI: 2 for bad input, 3 for numeric trouble.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Numeric(_) | Error::Convergence => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
