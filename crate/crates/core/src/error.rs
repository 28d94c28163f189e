use thiserror::Error;

/// Errors raised anywhere in the laboratory.
///
/// Every variant carries a stable one-line code (see [`Error::code`]) that the
/// command line prints on the diagnostic stream.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("a degree cap is required: {0}")]
    MissingCap(String),
    #[error("denominators did not clear: {0}")]
    DenominatorsDoNotClear(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("degree-bound anomaly: {0}")]
    DegreeAnomaly(String),
    #[error("negative coefficient in Schur expansion: {0}")]
    NegativeCoefficient(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("interpolation inconsistency: {0}")]
    Interpolation(String),
    #[error("unfilled table cell: {0}")]
    UnfilledCell(String),
    #[error("cache hash mismatch: {0}")]
    HashMismatch(String),
    #[error("cache version mismatch: {0}")]
    VersionMismatch(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "E_PARTITION",
            Error::Parse(_) => "E_PARSE",
            Error::DivisionByZero => "E_DIV_ZERO",
            Error::DegreeMismatch(_) => "E_DEGREE",
            Error::MissingCap(_) => "E_MISSING_CAP",
            Error::DenominatorsDoNotClear(_) => "E_DENOMINATOR",
            Error::Unsupported(_) => "E_UNSUPPORTED",
            Error::ResourceCap(_) => "E_RESOURCE",
            Error::DegreeAnomaly(_) => "E_DEGREE_ANOMALY",
            Error::NegativeCoefficient(_) => "E_NEGATIVE",
            Error::AlphabetMismatch(_) => "E_ALPHABET",
            Error::Interpolation(_) => "E_INTERPOLATION",
            Error::UnfilledCell(_) => "E_UNFILLED",
            Error::HashMismatch(_) => "E_CACHE_HASH",
            Error::VersionMismatch(_) => "E_CACHE_VERSION",
            Error::Io(_) => "E_IO",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
