use thiserror::Error;

use crate::params::Composition;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("spectral degeneracy while solving for E_{eta} after {attempts} attempts")]
    SpectralDegeneracy { eta: Composition, attempts: usize },

    #[error("operator matrix is not triangular at E_{eta}: monomial {offending} escapes the order ideal")]
    NotTriangular { eta: Composition, offending: Composition },

    #[error("eigen-relation check failed for E_{eta} under U_{index}")]
    EigenRelation { eta: Composition, index: usize },

    #[error("degree check failed for binomial polynomial of {nu}: grids of degree {low} and {high} disagree")]
    DegreeCheckFailure { nu: Composition, low: usize, high: usize },

    #[error("singular linear system ({0})")]
    Singular(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("quadrature did not converge: estimate {estimate:e} above tolerance {tolerance:e}")]
    NonConvergence { estimate: f64, tolerance: f64 },

    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
