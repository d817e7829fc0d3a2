use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A parameter or configured limit is out of range.
    #[error("configuration error: {0}")]
    Config(String),

    /// Inputs are outside the mathematical domain (non-finite, non-positive, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or quadrature could not reach the requested precision.
    #[error("precision error: {0}")]
    Precision(String),

    #[error("index ({n}, {m}) outside cutoffs ({cutoff_pi}, {cutoff_k})")]
    Bounds {
        n: usize,
        m: usize,
        cutoff_pi: usize,
        cutoff_k: usize,
    },

    /// Probability mass or eigen-residual beyond the truncated space is too large.
    #[error("truncation error: {what}{}", required_cutoff.map(|c| format!(" (need cutoff >= {c})")).unwrap_or_default())]
    Truncation {
        what: String,
        required_cutoff: Option<usize>,
    },

    /// An internal consistency check between two evaluation routes failed.
    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("shape mismatch: ({0}, {1}) vs ({2}, {3})")]
    Shape(usize, usize, usize, usize),
}

impl Error {
    pub(crate) fn truncation(what: impl Into<String>, required_cutoff: Option<usize>) -> Self {
        Error::Truncation {
            what: what.into(),
            required_cutoff,
        }
    }
}
