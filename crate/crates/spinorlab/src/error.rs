use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("axis {0} out of range (expected 1..=3)")]
    InvalidAxis(usize),
    #[error("invalid gamma index {0}")]
    InvalidIndex(String),
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not square: {0:?}")]
    NotSquare((usize, usize)),
    #[error("matrix is singular")]
    Singular,
    #[error("mass must be positive for this construction (rapidity diverges at m = 0)")]
    MasslessBoost,
    #[error("helicity undefined at zero 3-momentum")]
    UndefinedHelicity,
    #[error("generator {0} is not in the map's domain")]
    UndefinedGenerator(String),
    #[error("E=0 mode outside θ-split domain (sample {index})")]
    ZeroFrequency { index: usize },
    #[error("polynomial interpolation failed: {0}")]
    Interpolation(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
