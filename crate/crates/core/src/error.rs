use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("generator {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("field mismatch between algebraic numbers")]
    FieldMismatch,
    #[error("{what} cap of {cap} exceeded")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("not a reflection: {0}")]
    NotReflection(String),
    #[error("not a positive root: {0}")]
    NotPositiveRoot(String),
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CoxError>;
