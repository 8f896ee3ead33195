use thiserror::Error;

/// Errors raised by ring, ideal, classification and verification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("backend mismatch: expected an element or ideal of {expected}, found {found}")]
    BackendMismatch { expected: String, found: String },

    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    #[error("element {0} is zero or a unit")]
    ZeroOrUnit(String),

    #[error("ideal {0} is not proper")]
    NotProper(String),

    #[error("colon by {0} is unsupported: the divisor must be a monomial times a unit")]
    UnsupportedColon(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("unbounded enumeration requested on {0}")]
    Unbounded(String),

    #[error("residue system for {0} is too large to scan ({1} classes)")]
    ScanTooLarge(String, usize),

    #[error("scope exceeds enumerable bounds: {0}")]
    ScopeTooLarge(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("ring {0} is not quasilocal")]
    NotQuasilocal(String),

    #[error("element {0} is not a nonzero prime element")]
    NotPrimeElement(String),

    #[error("xR equals the maximal ideal for x = {0}")]
    GeneratesMaximal(String),

    #[error("ideal {0} is not a prime ideal")]
    NotPrimeIdeal(String),

    #[error("ideal {0} is not contained in the maximal ideal")]
    NotInMaximal(String),

    #[error("kernel {kernel} is not contained in {ideal}")]
    KernelNotContained { kernel: String, ideal: String },

    #[error("homomorphism {0} is not surjective")]
    NotSurjective(String),

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn parse_err(token: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        token: token.into(),
        message: message.into(),
    }
}
