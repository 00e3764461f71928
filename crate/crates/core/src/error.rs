use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: expected (gamma={}, delta={}), found (gamma={}, delta={})", .expected.0, .expected.1, .found.0, .found.1)]
    Dimension {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("symbol {value} is not a residue mod {modulus}")]
    Symbol { value: u8, modulus: u8 },

    #[error("{what} needs 2^{needed_log2} but the budget allows 2^{limit_log2}")]
    Budget {
        what: &'static str,
        needed_log2: u32,
        limit_log2: u32,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("minimum distance is undefined for the zero code")]
    ZeroCode,

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("covering engines disagree on {code} ({metric}): exhaustive={exhaustive}, coset={coset}")]
    EngineDisagreement {
        code: String,
        metric: String,
        exhaustive: u32,
        coset: u32,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
