use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite input to {0}")]
    NonFiniteInput(&'static str),

    /// A sampled value came out non-finite; `index` is the signed grid index.
    #[error("non-finite sample f({t}) = {value} at grid index {index}")]
    NonFiniteSample { index: i64, t: f64, value: f64 },

    /// A reflection identity would need exp() beyond the f64 range.
    #[error("overflow guard: exp({exponent}) exceeds the f64 range")]
    OverflowGuard { exponent: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("look-up table mismatch: {0}")]
    LutMismatch(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("checksum mismatch: stored {stored:#018x}, computed {computed:#018x}")]
    ChecksumMismatch { stored: u64, computed: u64 },

    #[error("unsupported format version {found}, expected {expected}")]
    FormatVersionMismatch { found: u32, expected: u32 },

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),

    /// The requested test function has no closed-form transform.
    #[error("no closed-form transform for {0}")]
    UnsupportedId(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
