use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("point {point} is outside {set}")]
    PointOutside { point: String, set: String },
    #[error("base point outside all sets")]
    BaseOutside,
    #[error("empty piece in {0}")]
    EmptyPiece(String),
    #[error("invalid epigraph: {0}")]
    InvalidEpigraph(String),
    #[error("infeasible point: violates {0}")]
    Infeasible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource limit exceeded: {0}")]
    Limit(String),
    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
