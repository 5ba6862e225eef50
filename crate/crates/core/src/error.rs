use thiserror::Error;

/// Errors raised while building domains or evaluating bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Pieces do not tile the circle of directions, or radii jump at a joint.
    #[error("malformed boundary: {0}")]
    Structural(String),

    /// The domain is not star-shaped with respect to the chosen center.
    #[error("domain is not star-shaped with respect to the center (at theta = {theta}): {reason}")]
    NotStarShaped { theta: f64, reason: String },

    /// A parameter is outside the admissible range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// An iterative routine stopped before reaching its tolerance.
    #[error("numerical routine did not converge: {what} (achieved {achieved:e})")]
    Numeric { what: String, achieved: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn not_star(theta: f64, reason: impl Into<String>) -> Self {
        Error::NotStarShaped {
            theta,
            reason: reason.into(),
        }
    }
}
