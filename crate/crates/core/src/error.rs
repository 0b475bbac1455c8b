use thiserror::Error;

/// Errors shared by all modules of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix or vector shapes do not line up.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An iterative numerical procedure broke down or failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A stability precondition does not hold.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// Invalid argument or configuration value.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An objective evaluation failed; carries the offending point.
    #[error("objective failed at {point:?}: {source}")]
    AtPoint {
        point: Vec<f64>,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wrap an error with the point at which the objective was being evaluated.
    pub fn at_point(self, point: &[f64]) -> Error {
        Error::AtPoint {
            point: point.to_vec(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
