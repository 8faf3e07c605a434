//! File formats, configuration and pipeline orchestration for the
//! `polarity` binary.

pub mod config;
pub mod csv_io;
pub mod formats;
pub mod pipeline;
pub mod stopwords;

use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong while running a command. All of these are
/// "data errors" in exit-code terms (exit 2); usage errors are caught by the
/// argument parser before a `PipelineError` can occur.
#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error(transparent)]
    Corpus(#[from] polarity_core::CorpusError),
    #[error(transparent)]
    Vocabulary(#[from] polarity_core::vectorspace::VocabularyError),
    #[error(transparent)]
    Train(#[from] polarity_core::TrainError),
    #[error(transparent)]
    Eval(#[from] polarity_core::eval::EvalError),
    #[error("{0}")]
    Invalid(String),
}

impl PipelineError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        PipelineError::Io { path: path.into(), source }
    }

    pub fn format(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        PipelineError::Format { path: path.into(), message: message.into() }
    }
}
