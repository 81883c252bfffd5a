use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use semitotal_core::approx::ApproxError;
use semitotal_core::domination::DominationError;
use semitotal_core::generators::GeneratorError;
use semitotal_core::interval_solver::SolverError;
use semitotal_core::reductions::ReductionError;

use crate::formats::FormatError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_SIZE_CAP: i32 = 4;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunResult {
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    pub size: usize,
    pub set: Vec<usize>,
    pub verified: bool,
    pub elapsed_ms: f64,
    pub extra: Value,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    SizeCap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Format(_) => EXIT_INPUT,
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
            CliError::SizeCap(_) => EXIT_SIZE_CAP,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            CliError::Input(_) | CliError::Format(_) => "INVALID_INPUT",
            CliError::Verification(_) => "VERIFICATION_FAILED",
            CliError::Infeasible(_) => "INFEASIBLE",
            CliError::SizeCap(_) => "SIZE_CAP_EXCEEDED",
        }
    }

    pub fn document(&self) -> Value {
        json!({
            "error": self.label(),
            "message": self.to_string(),
            "exitCode": self.exit_code(),
        })
    }
}

impl From<DominationError> for CliError {
    fn from(e: DominationError) -> Self {
        match e {
            DominationError::Infeasible { .. } => CliError::Infeasible(e.to_string()),
            DominationError::TooLarge { .. } => CliError::SizeCap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Infeasible { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ApproxError> for CliError {
    fn from(e: ApproxError) -> Self {
        match e {
            ApproxError::Reduction(r) => r.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::SizeCapExceeded { .. } => CliError::SizeCap(e.to_string()),
            ReductionError::Domination(d) => d.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Reduction(r) => r.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Result of a successful command: the JSON document and the exit code to
/// report with it.
pub struct Outcome {
    pub document: Value,
    pub exit_code: i32,
}

impl Outcome {
    pub fn ok(document: impl Serialize) -> Self {
        Self::with_code(document, EXIT_OK)
    }

    pub fn with_code(document: impl Serialize, exit_code: i32) -> Self {
        Self {
            document: serde_json::to_value(document).expect("documents serialize"),
            exit_code,
        }
    }

    /// Plain text written verbatim instead of a JSON document.
    pub fn text(text: String) -> Self {
        Self {
            document: Value::String(text),
            exit_code: EXIT_OK,
        }
    }
}
