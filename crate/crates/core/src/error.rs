use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid function: {0}")]
    InvalidFunction(String),
    #[error("invalid reparametrization: {0}")]
    InvalidReparametrization(String),
    #[error("function is constant; it has no extrema sequence")]
    ConstantFunction,
    #[error("domain mismatch: expected {expected}, got {got}")]
    DomainMismatch { expected: &'static str, got: &'static str },
    #[error("resolution too low: {0}")]
    ResolutionTooLow(String),
    #[error("extrema sequence does not match the target class under the given shift")]
    ClassMismatch,
    #[error("functions are not in the same fiber component: {0}")]
    NotSameComponent(String),
    #[error("malformed barcode: {0}")]
    MalformedBarcode(String),
    #[error("boundary prescription violated: {0}")]
    BoundaryViolation(String),
    #[error("enumeration refused: {0} (pass an override to proceed)")]
    ComplexityGuard(String),
    #[error("barcode cannot arise from a Morse function on this surface: {0}")]
    NegativeCount(String),
    #[error("inconsistent surface description: {0}")]
    InconsistentSurface(String),
    #[error("no classification clause applies: {0}")]
    NotClassified(String),
    #[error("homotopy groups in this form require at least one saddle; use the saddle-free classification instead")]
    RequiresPositiveSaddles,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Input-shape problems (CLI exit code 2) versus domain errors (exit code 3).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidFunction(_)
                | Error::InvalidReparametrization(_)
                | Error::MalformedBarcode(_)
                | Error::InconsistentSurface(_)
                | Error::Parse(_)
        )
    }
}

impl From<crate::num::ParseRatError> for Error {
    fn from(e: crate::num::ParseRatError) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
