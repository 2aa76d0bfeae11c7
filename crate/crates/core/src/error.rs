use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("receive antenna index {index} out of range (array has {len} antennas)")]
    AntennaIndex { index: usize, len: usize },

    #[error("invalid placement state: {0}")]
    State(String),

    /// The linearized phase slope does not increase in the deployment direction.
    #[error("phase model violated for PA {pa} / antenna {antenna}: slope {slope} rad/m at x = {x} m")]
    ModelViolation {
        pa: usize,
        antenna: usize,
        x: f64,
        slope: f64,
    },

    #[error("config field `{field}`: {reason}")]
    Config { field: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Stable snake_case tag for machine consumers.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArgument { .. } => "invalid_argument",
            Error::AntennaIndex { .. } => "antenna_index",
            Error::State(_) => "state",
            Error::ModelViolation { .. } => "model_violation",
            Error::Config { .. } => "config",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
            Error::Csv(_) => "csv",
        }
    }

    pub(crate) fn arg(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }
}
