use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("singular model")]
    SingularModel,

    #[error("parse error (position {position}): {message}")]
    Parse { position: usize, message: String },

    #[error("precision exhausted at prime {prime} (cap {cap})")]
    PrecisionExhausted { prime: u64, cap: u32 },

    #[error("not a kernel: {0}")]
    NotAKernel(String),

    #[error("dual not found")]
    DualNotFound,

    #[error("non-p-power Tamagawa ratio {numerator}/{denominator} for p = {p}")]
    NonPPowerTamagawa { p: u64, numerator: u64, denominator: u64 },

    #[error("composition mismatch at {place}")]
    CompositionMismatch { place: String },

    #[error("inconclusive sampling at {place}: divisible fraction {fraction:.4}")]
    InconclusiveSampling { place: String, fraction: f64 },

    #[error("oracle mismatch at {place}: formula {formula}, oracle {oracle}")]
    OracleMismatch { place: String, formula: i64, oracle: i64 },

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
