use std::path::PathBuf;

/// Errors raised by simulation, training, file ingestion and metrics.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("qubit index {qubit} out of range for {num_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("CNOT control and target must differ (both {qubit})")]
    DegenerateCnot { qubit: usize },

    #[error("gate angle must be finite, got {angle}")]
    NonFiniteAngle { angle: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid state: {reason}")]
    InvalidState { reason: String },

    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    #[error("token {token} out of range for vocabulary of {vocab_size}")]
    TokenOutOfRange { token: usize, vocab_size: usize },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("training diverged at epoch {epoch}: loss is not finite")]
    Divergence { epoch: usize },

    #[error("model file {path}: {message}")]
    ModelFormat { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid_state(reason: impl Into<String>) -> Self {
        Error::InvalidState {
            reason: reason.into(),
        }
    }

    pub fn invalid_config(reason: impl Into<String>) -> Self {
        Error::InvalidConfig {
            reason: reason.into(),
        }
    }

    /// True for errors caused by malformed input data or configuration,
    /// false for numeric failures inside the simulator or trainer.
    pub fn is_data_error(&self) -> bool {
        !matches!(self, Error::Divergence { .. } | Error::InvalidState { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
