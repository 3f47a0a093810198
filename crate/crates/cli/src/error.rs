use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown module `{0}` (built-ins: R, k, m)")]
    UnknownModule(String),
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("unknown ring `{0}`")]
    UnknownRing(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Core(#[from] torsion_core::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
