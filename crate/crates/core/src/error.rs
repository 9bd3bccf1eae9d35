use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("evaluation of a Laurent polynomial with negative degrees at t = 0")]
    ZeroWithNegativeDegree,

    #[error("polynomial does not vanish at t = 1 (|p(1)| = {value:e}, scale {scale:e})")]
    NotVanishingAtOne { value: f64, scale: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unimodular: |det - 1| = {0:e}")]
    NotUnimodular(f64),

    #[error("representation does not satisfy relator {relator}: residual {residual:e}")]
    RelationViolated { relator: usize, residual: f64 },

    #[error("reducible representation: {0}")]
    Reducible(String),

    #[error("Riley residual too large: |phi(s, u)| = {0:e}")]
    RileyResidual(f64),

    #[error("root finder did not converge for degree {degree} polynomial")]
    RootFinding { degree: usize },

    #[error("det Phi(1 - a_{column}) vanishes identically; choose a different column")]
    VanishingDenominator { column: usize },

    #[error("torsion limit undefined (representation not regular in the operational sense): {0}")]
    TorsionUndefined(String),

    #[error("formula singular at this representation: {0}")]
    Singular(String),

    #[error("eigenvalues of rho(w) coincide (gamma = {0}); eigenvalue form ill-conditioned")]
    RepeatedEigenvalue(String),

    #[error("cannot parse complex literal {0:?}")]
    ComplexLiteral(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
