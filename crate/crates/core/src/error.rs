use thiserror::Error;

/// Errors produced by the library.
#[derive(Error, Debug)]
pub enum Error {
    #[error("unknown vertex {vertex} (hypergraph has {n} vertices)")]
    UnknownVertex { vertex: usize, n: usize },
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
