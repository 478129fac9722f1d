use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("resource cutoff: {0}")]
    ResourceCutoff(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code contract: 2 input/validation, 3 resource cutoff,
    /// 1 internal invariant failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceCutoff(_) => 3,
            Error::Internal(_) => 1,
            _ => 2,
        }
    }
}
