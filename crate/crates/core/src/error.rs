use thiserror::Error;

/// Errors returned by the library.
///
/// Every variant names the precondition that was violated so that the CLI can
/// surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit in the box with {rows} rows and {cols} columns")]
    DoesNotFitBox {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("parameter shape mismatch: {0}")]
    ParameterShape(String),

    #[error("negative parameter: {0}")]
    NegativeParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("outside the supported range: {0}")]
    OutOfScale(String),

    #[error("unsupported subgroup: {0}")]
    UnsupportedSubgroup(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
