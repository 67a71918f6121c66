//! JSON formats for presentations, problem instances and certificates.
//! Scalars are always strings in the exact text syntax.

mod instance;
mod presentation;

pub use instance::{
    certificate_from_file, certificate_to_file, default_predicate, instance_from_file,
    instance_to_file, instance_to_json, matrix_from_rows, matrix_to_rows, parse_instance,
    search_instance, CertificateFile, InstanceFile, MatrixRows, ProvenanceFile,
};

pub use presentation::{
    parse_presentation, presentation_from_file, presentation_to_file, presentation_to_json,
    OracleFile, PresentationFile,
};

use crate::arith::ArithError;
use crate::free::WordError;
use crate::presentation::PresentationError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}
