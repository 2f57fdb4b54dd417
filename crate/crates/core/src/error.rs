use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context error: {0}")]
    Context(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not divisible: nonzero remainder at degree {degree}: {remainder}")]
    NotDivisible { degree: i64, remainder: String },
    #[error("representation error: {0}")]
    Representation(String),
    #[error("singular metric: {0}")]
    SingularMetric(String),
    #[error("inadmissible point: {0}")]
    Inadmissible(String),
    #[error("non-invertible element: {0}")]
    NonInvertible(String),
    #[error("singular point: {0}")]
    SingularPoint(String),
    #[error("degenerate tetrad: {0}")]
    DegenerateTetrad(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;
